//! Plethystic substitution of alphabet expressions, two-alphabet symmetric
//! functions and truncated `Ω` kernels.

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;

use super::{Basis, SymFun};
use crate::error::{Error, Result};
use crate::partitions::{enumerate, Partition};
use crate::ring::{Coeff, PolyQT, RatQT};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Alphabet {
    X,
    Y,
    /// The product alphabet: `p_k[XY] = p_k[X] p_k[Y]`.
    XY,
}

/// `Σ c_j(q,t) A_j`. Under `p_k` each coefficient becomes `c_j(q^k, t^k)`.
#[derive(Clone, Debug)]
pub struct AlphabetExpr {
    summands: Vec<(RatQT, Alphabet)>,
}

impl AlphabetExpr {
    pub fn new(summands: Vec<(RatQT, Alphabet)>) -> Self {
        AlphabetExpr { summands }
    }

    pub fn single(c: RatQT, a: Alphabet) -> Self {
        Self::new(vec![(c, a)])
    }

    pub fn x() -> Self {
        Self::single(RatQT::one(), Alphabet::X)
    }

    pub fn plus(mut self, c: RatQT, a: Alphabet) -> Self {
        self.summands.push((c, a));
        self
    }

    pub fn neg(&self) -> Self {
        Self::new(self.summands.iter().map(|(c, a)| (c.neg(), *a)).collect())
    }

    pub fn summands(&self) -> &[(RatQT, Alphabet)] {
        &self.summands
    }

    /// `p_k[E]` as a two-alphabet function.
    pub fn power_sum(&self, k: usize) -> Result<SymFun2<RatQT>> {
        let mut out = SymFun2::zero();
        let pk = Partition::row(k);
        for (c, a) in &self.summands {
            let ck = c.substitute_powers(k as i32);
            if ck.den().is_zero() {
                return Err(Error::PoleInCoefficient { power: k });
            }
            let key = match a {
                Alphabet::X => (pk.clone(), Partition::empty()),
                Alphabet::Y => (Partition::empty(), pk.clone()),
                Alphabet::XY => (pk.clone(), pk.clone()),
            };
            out.add_term(key, ck);
        }
        Ok(out)
    }
}

/// Element of `Λ(X) ⊗ Λ(Y)` in the power-sum basis on both sides.
#[derive(Clone, PartialEq)]
pub struct SymFun2<C> {
    terms: BTreeMap<(Partition, Partition), C>,
}

impl<C: Coeff> SymFun2<C> {
    pub fn zero() -> Self {
        SymFun2 { terms: BTreeMap::new() }
    }

    pub fn one() -> Self {
        let mut f = Self::zero();
        f.add_term((Partition::empty(), Partition::empty()), C::one());
        f
    }

    pub fn terms(&self) -> &BTreeMap<(Partition, Partition), C> {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn add_term(&mut self, key: (Partition, Partition), c: C) {
        if c.is_zero() {
            return;
        }
        let e = self.terms.entry(key).or_insert_with(C::zero);
        *e = e.plus(&c);
        if e.is_zero() {
            self.terms.retain(|_, v| !v.is_zero());
        }
    }

    /// `f[X] ⊗ 1`, converting `f` to power sums.
    pub fn from_x(f: &SymFun<C>) -> Result<Self> {
        let p = f.convert(Basis::P)?;
        let mut out = Self::zero();
        for (k, c) in p.terms() {
            out.add_term((k.clone(), Partition::empty()), c.clone());
        }
        Ok(out)
    }

    /// `1 ⊗ f[Y]`.
    pub fn from_y(f: &SymFun<C>) -> Result<Self> {
        Ok(Self::from_x(f)?.swap_alphabets())
    }

    pub fn plus(&self, o: &Self) -> Self {
        let mut out = self.clone();
        for (k, c) in &o.terms {
            out.add_term(k.clone(), c.clone());
        }
        out
    }

    pub fn minus(&self, o: &Self) -> Self {
        self.plus(&o.scale(&C::from_int(-1)))
    }

    pub fn scale(&self, c: &C) -> Self {
        let mut out = Self::zero();
        for (k, v) in &self.terms {
            out.add_term(k.clone(), v.times(c));
        }
        out
    }

    pub fn multiply(&self, o: &Self) -> Self {
        let mut acc: BTreeMap<(Partition, Partition), C> = BTreeMap::new();
        for ((a1, b1), x) in &self.terms {
            for ((a2, b2), y) in &o.terms {
                let key = (concat(a1, a2), concat(b1, b2));
                acc.entry(key).or_insert_with(C::zero).accumulate(&x.times(y));
            }
        }
        acc.retain(|_, c| !c.is_zero());
        SymFun2 { terms: acc }
    }

    /// Product with everything of X-degree above `dx` or Y-degree above `dy`
    /// dropped.
    pub fn multiply_truncated(&self, o: &Self, dx: usize, dy: usize) -> Self {
        let mut acc: BTreeMap<(Partition, Partition), C> = BTreeMap::new();
        for ((a1, b1), x) in &self.terms {
            for ((a2, b2), y) in &o.terms {
                if a1.size() + a2.size() > dx || b1.size() + b2.size() > dy {
                    continue;
                }
                let key = (concat(a1, a2), concat(b1, b2));
                acc.entry(key).or_insert_with(C::zero).accumulate(&x.times(y));
            }
        }
        acc.retain(|_, c| !c.is_zero());
        SymFun2 { terms: acc }
    }

    pub fn truncate(&self, dx: usize, dy: usize) -> Self {
        let terms = self
            .terms
            .iter()
            .filter(|((a, b), _)| a.size() <= dx && b.size() <= dy)
            .map(|(k, c)| (k.clone(), c.clone()))
            .collect();
        SymFun2 { terms }
    }

    pub fn swap_alphabets(&self) -> Self {
        let terms = self.terms.iter().map(|((a, b), c)| ((b.clone(), a.clone()), c.clone())).collect();
        SymFun2 { terms }
    }

    /// The restriction `Y = X`.
    pub fn diagonal(&self) -> SymFun<C> {
        let mut out = SymFun::zero(Basis::P);
        for ((a, b), c) in &self.terms {
            out.add_term(concat(a, b), c.clone());
        }
        out
    }

    /// Groups terms by the Y factor: `Σ_ρ f_ρ[X] ⊗ p_ρ[Y]`.
    pub fn by_y(&self) -> BTreeMap<Partition, SymFun<C>> {
        let mut out: BTreeMap<Partition, SymFun<C>> = BTreeMap::new();
        for ((a, b), c) in &self.terms {
            out.entry(b.clone()).or_insert_with(|| SymFun::zero(Basis::P)).add_term(a.clone(), c.clone());
        }
        out
    }

    /// Applies a linear map to the X factor.
    pub fn apply_x(&self, op: impl Fn(&SymFun<C>) -> Result<SymFun<C>>) -> Result<Self> {
        let mut out = Self::zero();
        for (rho, fx) in self.by_y() {
            let img = op(&fx)?.convert(Basis::P)?;
            for (a, c) in img.terms() {
                out.add_term((a.clone(), rho.clone()), c.clone());
            }
        }
        Ok(out)
    }

    pub fn map_coeffs<D: Coeff>(&self, f: impl Fn(&C) -> Result<D>) -> Result<SymFun2<D>> {
        let mut out = SymFun2::zero();
        for (k, c) in &self.terms {
            out.add_term(k.clone(), f(c)?);
        }
        Ok(out)
    }

    pub fn specialize(&self, q: &RatQT, t: &RatQT) -> Result<Self> {
        self.map_coeffs(|c| c.specialize(q, t))
    }

    /// The part free of Y, as a function of X.
    pub fn x_part(&self) -> SymFun<C> {
        let mut out = SymFun::zero(Basis::P);
        for ((a, b), c) in &self.terms {
            if b.is_empty() {
                out.add_term(a.clone(), c.clone());
            }
        }
        out
    }

    /// All coefficients free of `q`.
    pub fn is_free_of_q(&self) -> bool {
        self.terms.values().all(|c| {
            let r = c.to_rat();
            r.num().is_free_of_q() && r.den().is_free_of_q()
        })
    }
}

fn concat(a: &Partition, b: &Partition) -> Partition {
    if b.is_empty() {
        return a.clone();
    }
    if a.is_empty() {
        return b.clone();
    }
    let mut v = a.parts().to_vec();
    v.extend_from_slice(b.parts());
    Partition::from_unsorted(v)
}

impl<C: Coeff> fmt::Display for SymFun2<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (i, ((a, b), c)) in self.terms.iter().rev().enumerate() {
            if i > 0 {
                write!(f, " + ")?;
            }
            write!(f, "({c})*p[{a}](X)*p[{b}](Y)")?;
        }
        Ok(())
    }
}

impl<C: Coeff> fmt::Debug for SymFun2<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl<C: Coeff> SymFun<C> {
    /// `f[E]`: each `p_k` is replaced by `p_k[E]`.
    pub fn plethysm(&self, a: &AlphabetExpr) -> Result<SymFun2<RatQT>> {
        let p = self.to_rat().convert(Basis::P)?;
        let max = p.degree().unwrap_or(0);
        let mut powers: Vec<Option<SymFun2<RatQT>>> = vec![None; max + 1];
        let mut out = SymFun2::zero();
        for (rho, c) in p.terms() {
            let mut term = SymFun2::one();
            for &k in rho.parts() {
                if powers[k].is_none() {
                    powers[k] = Some(a.power_sum(k)?);
                }
                term = term.multiply(powers[k].as_ref().unwrap());
            }
            out = out.plus(&term.scale(c));
        }
        Ok(out)
    }

    /// `f[cX]` for a rational scalar `c`, returned in the Schur basis.
    pub fn plethysm_scalar(&self, c: &RatQT) -> Result<SymFun<RatQT>> {
        let p = self.to_rat().convert(Basis::P)?;
        let mut out = SymFun::zero(Basis::P);
        for (rho, v) in p.terms() {
            let mut w = v.clone();
            for &k in rho.parts() {
                w = w.mul(&c.substitute_powers(k as i32));
            }
            out.add_term(rho.clone(), w);
        }
        out.convert(Basis::S)
    }

    /// `f[X/(1-t)]` in the Schur basis.
    pub fn divide_alphabet_one_minus_t(&self) -> Result<SymFun<RatQT>> {
        let c = RatQT::new(PolyQT::one(), PolyQT::one_minus(0, 1))?;
        self.plethysm_scalar(&c)
    }
}

/// Degree components `h_m[E]`, `m = 0..=d`, of `Ω[E] = exp(Σ p_k[E]/k)`.
pub fn omega_kernel(a: &AlphabetExpr, d: usize) -> Result<Vec<SymFun2<RatQT>>> {
    let powers: Vec<SymFun2<RatQT>> = (0..=d).map(|k| if k == 0 { Ok(SymFun2::one()) } else { a.power_sum(k) }).collect::<Result<_>>()?;
    let mut out = Vec::with_capacity(d + 1);
    for m in 0..=d {
        let mut comp = SymFun2::zero();
        for rho in enumerate(m) {
            let mut term = SymFun2::one();
            for &k in rho.parts() {
                term = term.multiply(&powers[k]);
            }
            let z = RatQT::from_ratio(&BigInt::from(1), &rho.z())?;
            comp = comp.plus(&term.scale(&z));
        }
        out.push(comp);
    }
    Ok(out)
}
