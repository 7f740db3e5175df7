//! Symmetric functions in the monomial, elementary, complete, power-sum and
//! Schur bases.

mod plethysm;
pub mod tables;

use std::collections::BTreeMap;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::partitions::{Composition, Partition};
use crate::ring::{Coeff, PolyQT, RatQT};

pub use plethysm::{omega_kernel, Alphabet, AlphabetExpr, SymFun2};
pub use tables::{straighten as straighten_signed, tables};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Basis {
    M,
    E,
    H,
    P,
    S,
}

impl Basis {
    pub fn letter(self) -> &'static str {
        match self {
            Basis::M => "m",
            Basis::E => "e",
            Basis::H => "h",
            Basis::P => "p",
            Basis::S => "s",
        }
    }
}

impl std::str::FromStr for Basis {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Ok(match s {
            "m" => Basis::M,
            "e" => Basis::E,
            "h" => Basis::H,
            "p" => Basis::P,
            "s" => Basis::S,
            _ => return Err(Error::Unknown { kind: "basis", name: s.to_string() }),
        })
    }
}

/// A finite linear combination of basis elements.
#[derive(Clone, PartialEq)]
pub struct SymFun<C> {
    basis: Basis,
    terms: BTreeMap<Partition, C>,
}

impl<C: Coeff> SymFun<C> {
    pub fn zero(basis: Basis) -> Self {
        SymFun { basis, terms: BTreeMap::new() }
    }

    pub fn one(basis: Basis) -> Self {
        Self::term(basis, Partition::empty(), C::one())
    }

    pub fn term(basis: Basis, p: Partition, c: C) -> Self {
        let mut f = Self::zero(basis);
        f.add_term(p, c);
        f
    }

    pub fn basis_element(basis: Basis, p: Partition) -> Self {
        Self::term(basis, p, C::one())
    }

    pub fn s(p: &str) -> Self {
        Self::basis_element(Basis::S, p.parse().expect("partition"))
    }

    pub fn m(p: &str) -> Self {
        Self::basis_element(Basis::M, p.parse().expect("partition"))
    }

    pub fn p(p: &str) -> Self {
        Self::basis_element(Basis::P, p.parse().expect("partition"))
    }

    pub fn e(k: usize) -> Self {
        Self::basis_element(Basis::E, Partition::row(k))
    }

    pub fn h(k: usize) -> Self {
        Self::basis_element(Basis::H, Partition::row(k))
    }

    pub fn constant(basis: Basis, c: C) -> Self {
        Self::term(basis, Partition::empty(), c)
    }

    pub fn from_terms(basis: Basis, terms: impl IntoIterator<Item = (Partition, C)>) -> Self {
        let mut f = Self::zero(basis);
        for (p, c) in terms {
            f.add_term(p, c);
        }
        f
    }

    pub fn basis(&self) -> Basis {
        self.basis
    }

    pub fn terms(&self) -> &BTreeMap<Partition, C> {
        &self.terms
    }

    /// Terms in enumeration order: highest degree first, then reverse
    /// lexicographic.
    pub fn iter(&self) -> impl Iterator<Item = (&Partition, &C)> {
        self.terms.iter().rev()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, p: &Partition) -> C {
        self.terms.get(p).cloned().unwrap_or_else(C::zero)
    }

    pub fn add_term(&mut self, p: Partition, c: C) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(p) {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                let s = o.get().plus(&c);
                if s.is_zero() {
                    o.remove();
                } else {
                    *o.get_mut() = s;
                }
            }
        }
    }

    /// Highest degree present; `None` for zero.
    pub fn degree(&self) -> Option<usize> {
        self.terms.keys().map(|p| p.size()).max()
    }

    pub fn is_homogeneous(&self) -> bool {
        let mut d = self.terms.keys().map(|p| p.size());
        match d.next() {
            None => true,
            Some(first) => d.all(|x| x == first),
        }
    }

    pub fn component(&self, d: usize) -> Self {
        let terms = self.terms.iter().filter(|(p, _)| p.size() == d).map(|(p, c)| (p.clone(), c.clone())).collect();
        SymFun { basis: self.basis, terms }
    }

    /// Terms of degree at most `d`.
    pub fn truncate(&self, d: usize) -> Self {
        let terms = self.terms.iter().filter(|(p, _)| p.size() <= d).map(|(p, c)| (p.clone(), c.clone())).collect();
        SymFun { basis: self.basis, terms }
    }

    fn check_basis(&self, o: &Self) -> Result<()> {
        if self.basis != o.basis {
            return Err(Error::Unknown { kind: "basis mismatch", name: format!("{:?} vs {:?}", self.basis, o.basis) });
        }
        Ok(())
    }

    /// Sum; the second operand is converted to the first one's basis.
    pub fn add(&self, o: &Self) -> Result<Self> {
        let o = if o.basis == self.basis { o.clone() } else { o.convert(self.basis)? };
        let mut out = self.clone();
        for (p, c) in o.terms {
            out.add_term(p, c);
        }
        Ok(out)
    }

    pub fn sub(&self, o: &Self) -> Result<Self> {
        self.add(&o.neg())
    }

    /// Sum of two functions already in the same basis.
    pub fn plus(&self, o: &Self) -> Self {
        self.check_basis(o).expect("same basis");
        let mut out = self.clone();
        for (p, c) in &o.terms {
            out.add_term(p.clone(), c.clone());
        }
        out
    }

    pub fn minus(&self, o: &Self) -> Self {
        self.plus(&o.neg())
    }

    pub fn neg(&self) -> Self {
        self.map_coeffs(|c| c.negate())
    }

    pub fn scale(&self, c: &C) -> Self {
        if c.is_zero() {
            return Self::zero(self.basis);
        }
        self.map_coeffs(|x| x.times(c))
    }

    pub fn scale_int(&self, n: i64) -> Self {
        self.scale(&C::from_int(n))
    }

    pub fn map_coeffs(&self, f: impl Fn(&C) -> C) -> Self {
        let terms = self
            .terms
            .iter()
            .filter_map(|(p, c)| {
                let v = f(c);
                (!v.is_zero()).then(|| (p.clone(), v))
            })
            .collect();
        SymFun { basis: self.basis, terms }
    }

    pub fn try_map_coeffs<D: Coeff>(&self, f: impl Fn(&C) -> Result<D>) -> Result<SymFun<D>> {
        let mut out = SymFun::zero(self.basis);
        for (p, c) in &self.terms {
            out.add_term(p.clone(), f(c)?);
        }
        Ok(out)
    }

    pub fn to_rat(&self) -> SymFun<RatQT> {
        self.try_map_coeffs(|c| Ok(c.to_rat())).expect("infallible")
    }

    pub fn swap_qt(&self) -> Self {
        self.map_coeffs(|c| c.swap_qt())
    }

    pub fn invert_t(&self) -> Self {
        self.map_coeffs(|c| c.invert_t())
    }

    pub fn specialize(&self, q: &RatQT, t: &RatQT) -> Result<Self> {
        self.try_map_coeffs(|c| c.specialize(q, t))
    }

    /// Re-expresses `self` in `target`. Conversion into the power-sum basis
    /// divides by `z_ρ` and fails with `NonIntegral` over [`PolyQT`] when the
    /// result leaves the ring.
    pub fn convert(&self, target: Basis) -> Result<Self> {
        if self.basis == target {
            return Ok(self.clone());
        }
        let s = self.to_schur();
        s.schur_to(target)
    }

    fn to_schur(&self) -> Self {
        if self.basis == Basis::S {
            return self.clone();
        }
        let mut out = Self::zero(Basis::S);
        for (mu, c) in &self.terms {
            let t = tables(mu.size());
            let j = t.idx(mu);
            for (i, lam) in t.parts.iter().enumerate() {
                let k = match self.basis {
                    Basis::M => t.kostka_inv[j][i],
                    Basis::H | Basis::E => t.kostka[i][j],
                    Basis::P => t.chars[i][j],
                    Basis::S => unreachable!(),
                };
                if k != 0 {
                    let key = if self.basis == Basis::E { lam.conjugate() } else { lam.clone() };
                    out.add_term(key, c.times(&C::from_int(k)));
                }
            }
        }
        out
    }

    fn schur_to(&self, target: Basis) -> Result<Self> {
        let mut out = Self::zero(target);
        for (lam, c) in &self.terms {
            let t = tables(lam.size());
            match target {
                Basis::S => out.add_term(lam.clone(), c.clone()),
                Basis::M => {
                    let i = t.idx(lam);
                    for (j, mu) in t.parts.iter().enumerate() {
                        let k = t.kostka[i][j];
                        if k != 0 {
                            out.add_term(mu.clone(), c.times(&C::from_int(k)));
                        }
                    }
                }
                Basis::H | Basis::E => {
                    let src = if target == Basis::E { lam.conjugate() } else { lam.clone() };
                    for (alpha, k) in tables::jacobi_trudi(&src, &Partition::empty()) {
                        out.add_term(alpha, c.times(&C::from_int(k)));
                    }
                }
                Basis::P => {
                    let i = t.idx(lam);
                    for (j, rho) in t.parts.iter().enumerate() {
                        let k = t.chars[i][j];
                        if k != 0 {
                            let v = c
                                .scale_ratio(&k.into(), &t.z[j])
                                .ok_or_else(|| Error::NonIntegral(format!("({c})*{k}/{}", t.z[j])))?;
                            out.add_term(rho.clone(), v);
                        }
                    }
                }
            }
        }
        Ok(out)
    }

    /// Ring product, returned in the basis of `self`.
    pub fn multiply(&self, o: &Self) -> Result<Self> {
        if self.basis == Basis::P && o.basis == Basis::P {
            let mut out = Self::zero(Basis::P);
            for (a, x) in &self.terms {
                for (b, y) in &o.terms {
                    let mut v = a.parts().to_vec();
                    v.extend_from_slice(b.parts());
                    out.add_term(Partition::from_unsorted(v), x.times(y));
                }
            }
            return Ok(out);
        }
        let a = self.to_schur();
        let b = o.to_schur();
        a.schur_product(&b).schur_to(self.basis)
    }

    fn schur_product(&self, o: &Self) -> Self {
        let mut acc: BTreeMap<Partition, C> = BTreeMap::new();
        for (a, x) in &self.terms {
            for (b, y) in &o.terms {
                let xy = x.times(y);
                if b.is_empty() || a.is_empty() {
                    let key = if a.is_empty() { b.clone() } else { a.clone() };
                    acc.entry(key).or_insert_with(C::zero).accumulate(&xy);
                    continue;
                }
                for (nu, k) in tables::lr_product(a, b).iter() {
                    let v = if *k == 1 { xy.clone() } else { xy.times(&C::from_int(*k)) };
                    acc.entry(nu.clone()).or_insert_with(C::zero).accumulate(&v);
                }
            }
        }
        let terms = acc.into_iter().filter(|(_, c)| !c.is_zero()).collect();
        SymFun { basis: Basis::S, terms }
    }

    /// `ω`: `p_k ↦ (-1)^(k-1) p_k`, so `ω s_λ = s_λ'` and `ω e_k = h_k`.
    pub fn omega(&self) -> Self {
        match self.basis {
            Basis::S => Self::from_terms(Basis::S, self.terms.iter().map(|(p, c)| (p.conjugate(), c.clone()))),
            Basis::P => self.clone().map_terms(|p, c| {
                if (p.size() - p.len()) % 2 == 1 {
                    c.negate()
                } else {
                    c.clone()
                }
            }),
            Basis::E => SymFun { basis: Basis::H, terms: self.terms.clone() },
            Basis::H => SymFun { basis: Basis::E, terms: self.terms.clone() },
            Basis::M => self.to_schur().omega().schur_to(Basis::M).expect("integral"),
        }
    }

    fn map_terms(self, f: impl Fn(&Partition, &C) -> C) -> Self {
        let terms = self.terms.iter().map(|(p, c)| (p.clone(), f(p, c))).collect();
        SymFun { basis: self.basis, terms }
    }

    /// Hall inner product: Schur functions are orthonormal and
    /// `<p_λ, p_μ> = δ z_λ`.
    pub fn hall_inner(&self, o: &Self) -> C {
        if self.basis == Basis::P && o.basis == Basis::P {
            let mut acc = C::zero();
            for (p, c) in &self.terms {
                if let Some(d) = o.terms.get(p) {
                    let z = C::from_int(i64::try_from(p.z()).expect("small z"));
                    acc.accumulate(&c.times(d).times(&z));
                }
            }
            return acc;
        }
        let a = self.to_schur();
        let b = o.to_schur();
        let mut acc = C::zero();
        for (p, c) in &a.terms {
            if let Some(d) = b.terms.get(p) {
                acc.accumulate(&c.times(d));
            }
        }
        acc
    }

    /// `f[aX]` for a monomial `a`: each degree-`d` part picks up `a^d`.
    pub fn scale_alphabet(&self, a: &PolyQT) -> Self {
        assert!(a.is_monomial(), "alphabet scale must be a monomial");
        self.map_terms_c(|p, c| c.times(&C::from_poly(a.pow(p.size() as u32))))
    }

    fn map_terms_c(&self, f: impl Fn(&Partition, &C) -> C) -> Self {
        let mut out = Self::zero(self.basis);
        for (p, c) in &self.terms {
            out.add_term(p.clone(), f(p, c));
        }
        out
    }

    /// `f[(1 - a)X]` for a monomial `a`, computed in the Schur basis with
    /// `s_λ[(1-a)X] = Σ_{μ ⊆ λ} (-a)^|μ| s_{λ/μ} s_{μ'}`. Stays in the
    /// coefficient ring.
    pub fn one_minus_alphabet(&self, a: &PolyQT) -> Self {
        let s = self.to_schur();
        let mut acc: BTreeMap<Partition, C> = BTreeMap::new();
        for (lam, c) in &s.terms {
            for (nu, k) in schur_one_minus(lam, a) {
                acc.entry(nu).or_insert_with(C::zero).accumulate(&c.times(&C::from_poly(k)));
            }
        }
        let terms = acc.into_iter().filter(|(_, c)| !c.is_zero()).collect();
        SymFun { basis: Basis::S, terms }.schur_to(self.basis).expect("same basis as input")
    }

    /// Schur-basis copy.
    pub fn in_schur(&self) -> Self {
        self.to_schur()
    }
}

/// `s_λ[(1-a)X]` in the Schur basis with [`PolyQT`] coefficients.
pub fn schur_one_minus(lam: &Partition, a: &PolyQT) -> BTreeMap<Partition, PolyQT> {
    let mut acc: BTreeMap<Partition, PolyQT> = BTreeMap::new();
    let neg_a = -a;
    for mu in lam.subpartitions() {
        let w = neg_a.pow(mu.size() as u32);
        let skew = tables::skew_in_s(lam, &mu);
        let muc = mu.conjugate();
        for (nu, k) in skew.iter() {
            let prod = tables::lr_product(nu, &muc);
            for (rho, k2) in prod.iter() {
                let v = w.scale(&(k * k2).into());
                let e = acc.entry(rho.clone()).or_insert_with(PolyQT::zero);
                *e = &*e + &v;
            }
        }
    }
    acc.retain(|_, c| !c.is_zero());
    acc
}

impl SymFun<RatQT> {
    /// Converts back to polynomial coefficients, if every coefficient is a
    /// Laurent polynomial.
    pub fn to_poly(&self) -> Result<SymFun<PolyQT>> {
        self.try_map_coeffs(|c| c.to_poly().ok_or_else(|| Error::NonIntegral(c.to_string())))
    }
}

/// Schur expansion of `s_{λ/μ}`.
pub fn skew_schur<C: Coeff>(lambda: &Partition, mu: &Partition) -> Result<SymFun<C>> {
    if !lambda.contains(mu) {
        return Err(Error::NotContained { outer: lambda.to_string(), inner: mu.to_string() });
    }
    let v = tables::skew_in_s(lambda, mu);
    Ok(SymFun::from_terms(Basis::S, v.iter().map(|(p, k)| (p.clone(), C::from_int(*k)))))
}

/// The signed Schur function `S_α`: `0` or `±s_λ`.
pub fn straighten<C: Coeff>(alpha: &Composition) -> SymFun<C> {
    match tables::straighten(alpha) {
        None => SymFun::zero(Basis::S),
        Some((sign, lam)) => SymFun::term(Basis::S, lam, C::from_int(sign)),
    }
}

fn write_coeff<C: Coeff>(f: &mut fmt::Formatter<'_>, c: &C, first: bool, unit_suffix: bool) -> fmt::Result {
    let s = c.to_string();
    let simple = !s[1..].contains(" + ") && !s[1..].contains(" - ") && !s.contains('/');
    let (neg, body) = if simple && s.starts_with('-') { (true, &s[1..]) } else { (false, &s[..]) };
    match (first, neg) {
        (true, true) => write!(f, "-")?,
        (true, false) => {}
        (false, true) => write!(f, " - ")?,
        (false, false) => write!(f, " + ")?,
    }
    if !unit_suffix {
        if simple {
            write!(f, "{body}")
        } else {
            write!(f, "({body})")
        }
    } else if body == "1" {
        Ok(())
    } else if simple {
        write!(f, "{body}*")
    } else {
        write!(f, "({body})*")
    }
}

impl<C: Coeff> fmt::Display for SymFun<C> {
    /// `s[2] + q*s[1,1]`; the empty partition prints as its coefficient.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (i, (p, c)) in self.iter().enumerate() {
            if p.is_empty() {
                write_coeff(f, c, i == 0, false)?;
            } else {
                write_coeff(f, c, i == 0, true)?;
                write!(f, "{}[{}]", self.basis.letter(), p)?;
            }
        }
        Ok(())
    }
}

impl<C: Coeff> fmt::Debug for SymFun<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

#[derive(Serialize, Deserialize)]
struct TermDoc {
    part: Partition,
    coeff: String,
}

#[derive(Serialize, Deserialize)]
struct SymFunDoc {
    basis: String,
    terms: Vec<TermDoc>,
}

impl<C: Coeff> Serialize for SymFun<C> {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let doc = SymFunDoc {
            basis: self.basis.letter().to_string(),
            terms: self.iter().map(|(p, c)| TermDoc { part: p.clone(), coeff: c.to_string() }).collect(),
        };
        doc.serialize(s)
    }
}

impl<'de, C: Coeff> Deserialize<'de> for SymFun<C> {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        use serde::de::Error as _;
        let doc = SymFunDoc::deserialize(d)?;
        let basis: Basis = doc.basis.parse().map_err(D::Error::custom)?;
        let mut f = SymFun::zero(basis);
        for t in doc.terms {
            let c: C = t.coeff.parse().map_err(D::Error::custom)?;
            f.add_term(t.part, c);
        }
        Ok(f)
    }
}

#[cfg(test)]
mod tests;
