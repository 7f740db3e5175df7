//! Polynomials in a finite alphabet `x_1..x_n`, the Macdonald operator and
//! the LV and W column operators built on it.

use std::collections::{BTreeMap, HashMap};

use num_bigint::BigInt;
use serde::ser::{SerializeStruct, Serializer};
use serde::Serialize;

use crate::error::{Error, Result};
use crate::operators::GradedOp;
use crate::partitions::{Composition, Partition};
use crate::ring::{pochhammer, Coeff, PolyQT, RatQT};
use crate::symfun::{straighten_signed, Basis, SymFun};

pub type Exps = Vec<u32>;

#[derive(Clone, PartialEq)]
pub struct XPoly<C> {
    n: usize,
    terms: BTreeMap<Exps, C>,
}

fn mono_c<C: Coeff>(q: i32, t: i32) -> C {
    C::from_poly(PolyQT::qt_pow(q, t))
}

fn in_set(mask: u32, i: usize) -> bool {
    mask >> i & 1 == 1
}

impl<C: Coeff> XPoly<C> {
    pub fn zero(n: usize) -> Self {
        XPoly { n, terms: BTreeMap::new() }
    }

    pub fn one(n: usize) -> Self {
        Self::monomial(n, vec![0; n], C::one())
    }

    pub fn monomial(n: usize, e: Exps, c: C) -> Self {
        let mut p = Self::zero(n);
        p.add_term(e, c);
        p
    }

    /// `x_i` (0-based).
    pub fn var(n: usize, i: usize) -> Self {
        let mut e = vec![0; n];
        e[i] = 1;
        Self::monomial(n, e, C::one())
    }

    pub fn from_terms(n: usize, terms: impl IntoIterator<Item = (Exps, C)>) -> Self {
        let mut p = Self::zero(n);
        for (e, c) in terms {
            p.add_term(e, c);
        }
        p
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn terms(&self) -> &BTreeMap<Exps, C> {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn add_term(&mut self, e: Exps, c: C) {
        assert_eq!(e.len(), self.n, "exponent length");
        if c.is_zero() {
            return;
        }
        match self.terms.get_mut(&e) {
            Some(v) => {
                v.accumulate(&c);
                if v.is_zero() {
                    self.terms.remove(&e);
                }
            }
            None => {
                self.terms.insert(e, c);
            }
        }
    }

    pub fn degree(&self) -> Option<u32> {
        self.terms.keys().map(|e| e.iter().sum()).max()
    }

    pub fn plus(&self, o: &Self) -> Self {
        let mut out = self.clone();
        for (e, c) in &o.terms {
            out.add_term(e.clone(), c.clone());
        }
        out
    }

    pub fn minus(&self, o: &Self) -> Self {
        self.plus(&o.scale(&C::from_int(-1)))
    }

    pub fn scale(&self, c: &C) -> Self {
        Self::from_terms(self.n, self.terms.iter().map(|(e, v)| (e.clone(), v.times(c))))
    }

    pub fn mul(&self, o: &Self) -> Self {
        let mut acc: HashMap<Exps, C> = HashMap::new();
        for (a, x) in &self.terms {
            for (b, y) in &o.terms {
                let e: Exps = a.iter().zip(b).map(|(i, j)| i + j).collect();
                acc.entry(e).or_insert_with(C::zero).accumulate(&x.times(y));
            }
        }
        Self::from_terms(self.n, acc)
    }

    /// `x_i ↦ c x_i` for `i ∈ I` (0-based indices).
    pub fn scale_subset(&self, subset: &[usize], c: &C) -> Self {
        let mut powers: Vec<C> = vec![C::one()];
        let mut out = Self::zero(self.n);
        for (e, v) in &self.terms {
            let d: u32 = subset.iter().map(|&i| e[i]).sum();
            while powers.len() <= d as usize {
                let next = powers.last().unwrap().times(c);
                powers.push(next);
            }
            out.add_term(e.clone(), v.times(&powers[d as usize]));
        }
        out
    }

    pub fn scale_mask(&self, mask: u32, c: &C) -> Self {
        let subset: Vec<usize> = (0..self.n).filter(|&i| in_set(mask, i)).collect();
        self.scale_subset(&subset, c)
    }

    /// Sets `x_i = 0` for `i ∈ I`.
    pub fn drop_vars(&self, subset: &[usize]) -> Self {
        Self::from_terms(
            self.n,
            self.terms.iter().filter(|(e, _)| subset.iter().all(|&i| e[i] == 0)).map(|(e, c)| (e.clone(), c.clone())),
        )
    }

    fn swap_vars(&self, i: usize, j: usize) -> Self {
        Self::from_terms(
            self.n,
            self.terms.iter().map(|(e, c)| {
                let mut e = e.clone();
                e.swap(i, j);
                (e, c.clone())
            }),
        )
    }

    pub fn is_symmetric(&self) -> bool {
        (0..self.n.saturating_sub(1)).all(|i| self.swap_vars(i, i + 1) == *self)
    }

    pub fn is_antisymmetric(&self) -> bool {
        (0..self.n.saturating_sub(1)).all(|i| self.swap_vars(i, i + 1) == self.scale(&C::from_int(-1)))
    }

    /// `Δ_n = Π_{i<j} (x_i - x_j)`.
    pub fn vandermonde(n: usize) -> Self {
        let mut d = Self::one(n);
        for i in 0..n {
            for j in i + 1..n {
                d = d.mul(&Self::var(n, i).minus(&Self::var(n, j)));
            }
        }
        d
    }

    /// Exact quotient by `x_i - x_j`.
    fn div_linear(&self, i: usize, j: usize) -> Result<Self> {
        // Order terms by the exponent of x_i; the top term fixes the next
        // quotient term.
        let mut rem: BTreeMap<(u32, Exps), C> = self.terms.iter().map(|(e, c)| ((e[i], e.clone()), c.clone())).collect();
        let mut quot = Self::zero(self.n);
        while let Some(((ei, e), c)) = rem.pop_last() {
            if ei == 0 {
                return Err(Error::NotDivisibleByVandermonde);
            }
            let mut qe = e.clone();
            qe[i] -= 1;
            // rem -= c x^qe (x_i - x_j); the x_i part cancels the popped term
            let mut se = qe.clone();
            se[j] += 1;
            let key = (se[i], se);
            let v = rem.entry(key.clone()).or_insert_with(C::zero);
            v.accumulate(&c);
            if v.is_zero() {
                rem.remove(&key);
            }
            quot.add_term(qe, c);
        }
        Ok(quot)
    }

    /// Exact division by `Δ_n`.
    pub fn div_vandermonde(&self) -> Result<Self> {
        let mut p = self.clone();
        for i in 0..self.n {
            for j in i + 1..self.n {
                p = p.div_linear(i, j)?;
            }
        }
        Ok(p)
    }

    /// For antisymmetric `N`, the Schur expansion of `N / Δ_n` read off the
    /// strictly decreasing exponents.
    pub fn bialternant_to_schur(&self) -> SymFun<C> {
        let n = self.n as u32;
        let mut out = SymFun::zero(Basis::S);
        for (e, c) in &self.terms {
            if let Some(lam) = strictly_decreasing_shape(e, n) {
                out.add_term(lam, c.clone());
            }
        }
        out
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("serializable")
    }
}

fn strictly_decreasing_shape(e: &[u32], n: u32) -> Option<Partition> {
    if e.windows(2).any(|w| w[0] <= w[1]) {
        return None;
    }
    let parts: Vec<usize> = e.iter().enumerate().map(|(i, &a)| (a - (n - 1 - i as u32)) as usize).collect();
    Some(Partition::from_unsorted(parts))
}

/// `Σ_{a,b} x^a y^b` restricted to strictly decreasing `a + b`, as Schur
/// coefficients; the other terms cancel in an antisymmetric total.
fn bialternant_product<C: Coeff>(a: &XPoly<C>, b: &XPoly<C>, out: &mut BTreeMap<Partition, C>) {
    let n = a.n as u32;
    let mut e = vec![0u32; a.n];
    for (ea, x) in &a.terms {
        for (eb, y) in &b.terms {
            let mut ok = true;
            for k in 0..e.len() {
                e[k] = ea[k] + eb[k];
                if k > 0 && e[k] >= e[k - 1] {
                    ok = false;
                    break;
                }
            }
            if !ok {
                continue;
            }
            let lam = strictly_decreasing_shape(&e, n).expect("checked");
            out.entry(lam).or_insert_with(C::zero).accumulate(&x.times(y));
        }
    }
}

#[derive(Serialize)]
struct TermDoc<'a> {
    exps: &'a [u32],
    coeff: String,
}

impl<C: Coeff> Serialize for XPoly<C> {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let terms: Vec<TermDoc> = self.terms.iter().rev().map(|(e, c)| TermDoc { exps: e, coeff: c.to_string() }).collect();
        let mut st = s.serialize_struct("XPoly", 2)?;
        st.serialize_field("n", &self.n)?;
        st.serialize_field("terms", &terms)?;
        st.end()
    }
}

impl<C: Coeff> std::fmt::Debug for XPoly<C> {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{}", self.to_json())
    }
}

/// `f(x_1, …, x_n)`.
pub fn expand<C: Coeff>(f: &SymFun<C>, n: usize) -> Result<XPoly<C>> {
    let m = f.convert(Basis::M)?;
    let mut out = XPoly::zero(n);
    for (lam, c) in m.terms() {
        if lam.len() > n {
            continue;
        }
        for comp in Composition::rearrangements(lam, n) {
            out.add_term(comp.entries.iter().map(|&x| x as u32).collect(), c.clone());
        }
    }
    Ok(out)
}

/// The symmetric function (monomial basis) restricting to `p`.
pub fn lift<C: Coeff>(p: &XPoly<C>) -> Result<SymFun<C>> {
    let deg = p.degree().unwrap_or(0) as usize;
    if deg > p.n {
        return Err(Error::DegreeExceedsAlphabet { degree: deg, vars: p.n });
    }
    if !p.is_symmetric() {
        return Err(Error::NotSymmetric);
    }
    let mut out = SymFun::zero(Basis::M);
    for (e, c) in p.terms() {
        if e.windows(2).all(|w| w[0] >= w[1]) {
            out.add_term(Partition::from_unsorted(e.iter().map(|&x| x as usize).collect()), c.clone());
        }
    }
    Ok(out)
}

/// `Δ A_I` for the subset `I` encoded by `mask`: a polynomial, since every
/// denominator `x_i - x_j` of `A_I` is a factor of `Δ`.
pub fn delta_a<C: Coeff>(n: usize, mask: u32) -> XPoly<C> {
    let t: C = mono_c(0, 1);
    let r = mask.count_ones();
    let mut delta_a = XPoly::monomial(n, vec![0; n], mono_c::<C>(0, (r * r.saturating_sub(1) / 2) as i32));
    let mut flips = 0;
    for a in 0..n {
        for b in a + 1..n {
            let (ia, ib) = (in_set(mask, a), in_set(mask, b));
            let factor = if ia == ib {
                XPoly::var(n, a).minus(&XPoly::var(n, b))
            } else {
                if !ia {
                    flips += 1;
                }
                let (i, j) = if ia { (a, b) } else { (b, a) };
                XPoly::var(n, i).scale(&t).minus(&XPoly::var(n, j))
            };
            delta_a = delta_a.mul(&factor);
        }
    }
    if flips % 2 == 1 {
        delta_a = delta_a.scale(&C::from_int(-1));
    }
    delta_a
}

/// Subsets of `0..n` as bit masks.
pub fn subsets(n: usize) -> impl Iterator<Item = u32> {
    0..(1u32 << n)
}

/// `Σ_I u^{|I|} (Δ A_I) T_I p`; `scale` is the value of `q` in `T_I`.
fn sum_form_numerator<C: Coeff>(p: &XPoly<C>, u: &C, scale: &C) -> XPoly<C> {
    let n = p.n;
    let mut total = XPoly::zero(n);
    for mask in subsets(n) {
        let term = delta_a(n, mask).mul(&p.scale_mask(mask, scale)).scale(&u.pow(mask.count_ones()));
        total = total.plus(&term);
    }
    total
}

/// `M(u) p = Σ_I u^{|I|} A_I T_I^q p` with `A_I = t^{C(|I|,2)} Π_{i∈I, j∉I}
/// (t x_i - x_j)/(x_i - x_j)`.
pub fn macdonald_sum_form<C: Coeff>(p: &XPoly<C>, u: &C) -> Result<XPoly<C>> {
    macdonald_sum_form_at(p, u, &mono_c(1, 0))
}

/// The sum form with `q` replaced by `qv` in `T_I^q`.
pub fn macdonald_sum_form_at<C: Coeff>(p: &XPoly<C>, u: &C, qv: &C) -> Result<XPoly<C>> {
    sum_form_numerator(p, u, qv).div_vandermonde()
}

/// `M(u) = Δ^{-1} Σ_σ sign(σ) x^{σδ} Π_i (1 + u t^{n-σ_i} T_i^q)`.
pub fn macdonald_det_form<C: Coeff>(p: &XPoly<C>, u: &C) -> Result<XPoly<C>> {
    let n = p.n;
    let q: C = mono_c(1, 0);
    let shifted: Vec<XPoly<C>> = subsets(n).map(|mask| p.scale_mask(mask, &q)).collect();
    let mut sigma: Vec<usize> = (0..n).collect();
    let mut total = XPoly::zero(n);
    loop {
        let sign = permutation_sign(&sigma);
        let e: Exps = sigma.iter().map(|&s| (n - 1 - s) as u32).collect();
        let mut inner = XPoly::zero(n);
        for mask in subsets(n) {
            let tpow: usize = (0..n).filter(|&i| in_set(mask, i)).map(|i| n - 1 - sigma[i]).sum();
            let c = u.pow(mask.count_ones()).times(&mono_c(0, tpow as i32));
            inner = inner.plus(&shifted[mask as usize].scale(&c));
        }
        let xs = XPoly::monomial(n, e, C::from_int(sign));
        total = total.plus(&xs.mul(&inner));
        if !crate::partitions::next_permutation(&mut sigma) {
            break;
        }
    }
    total.div_vandermonde()
}

fn permutation_sign(p: &[usize]) -> i64 {
    let mut inv = 0;
    for i in 0..p.len() {
        for j in i + 1..p.len() {
            if p[i] > p[j] {
                inv += 1;
            }
        }
    }
    if inv % 2 == 0 {
        1
    } else {
        -1
    }
}

fn check_alphabet(deg: usize, k: usize, n: usize) -> Result<()> {
    if k > n || deg + k > n {
        return Err(Error::DegreeExceedsAlphabet { degree: deg + k, vars: n });
    }
    Ok(())
}

/// `(1/(1/q;1/t)_m)` written as `(-1)^m q^m t^{C(m,2)} / (q;t)_m`.
fn lv_prefactor<C: Coeff>(x: &C, m: usize) -> Result<C> {
    let sign = if m % 2 == 0 { 1 } else { -1 };
    let mono = PolyQT::monomial(BigInt::from(sign), m as i32, (m * m.saturating_sub(1) / 2) as i32);
    x.times(&C::from_poly(mono)).div_poly(&pochhammer(1, 0, m))
}

/// `LV_k = (1/(1/q;1/t)_{n-k}) M(-1/(q t^{n-k-1})) (e_k ·)` in `n` variables;
/// result in the Schur basis.
pub fn lv_apply<C: Coeff>(f: &SymFun<C>, k: usize, n: usize) -> Result<SymFun<C>> {
    let deg = f.degree().unwrap_or(0);
    check_alphabet(deg, k, n)?;
    let g = f.convert(Basis::S)?.multiply(&SymFun::e(k).convert(Basis::S)?)?;
    let p = expand(&g, n)?;
    let delta = XPoly::<C>::vandermonde(n);
    let m = n - k;
    let u: C = C::from_poly(PolyQT::monomial(BigInt::from(-1), -1, -(m as i32) + 1));
    let q: C = mono_c(1, 0);
    let t: C = mono_c(0, 1);
    let mut acc: BTreeMap<Partition, C> = BTreeMap::new();
    for mask in subsets(n) {
        let a = delta.scale_mask(mask, &t).scale(&u.pow(mask.count_ones()));
        bialternant_product(&a, &p.scale_mask(mask, &q), &mut acc);
    }
    let mut out = SymFun::zero(Basis::S);
    for (lam, c) in acc {
        out.add_term(lam, lv_prefactor(&c, m)?);
    }
    Ok(out)
}

/// `LV_k m_λ` from the closed form of its coefficients on signed Schur
/// functions `S_{p+ε}`.
pub fn lv_monomial(lambda: &Partition, k: usize, n: usize) -> Result<SymFun<RatQT>> {
    check_alphabet(lambda.size(), k, n)?;
    let m = n - k;
    let mut out = SymFun::zero(Basis::S);
    let mut eps = vec![0usize; n];
    for e in eps.iter_mut().skip(m) {
        *e = 1;
    }
    let arrangements = Composition::rearrangements(lambda, n);
    loop {
        for p in &arrangements {
            let mut c = PolyQT::one();
            let mut v = eps.clone();
            for i in 0..n {
                v[i] += p.entries[i];
                let qe = (p.entries[i] + eps[i]) as i32 - 1;
                c = &c * &(&PolyQT::one() - &PolyQT::qt_pow(qe, k as i32 - i as i32));
            }
            if let Some((s, shape)) = straighten_signed(&Composition::new(v)) {
                let c = lv_prefactor(&RatQT::from_poly(c.scale(&BigInt::from(s))), m)?;
                out.add_term(shape, c);
            }
        }
        if !crate::partitions::next_permutation(&mut eps) {
            break;
        }
    }
    Ok(out)
}

/// `W_k P = (1/(1/t;1/t)_{n-k}) Σ_I (-1/t^{n-k})^{|I|} B_I P[X - X_I]` with
/// `B_I = Δ^{-1} T_I^t (Δ e_k)`.
pub fn w_apply<C: Coeff>(f: &SymFun<C>, k: usize, n: usize) -> Result<SymFun<C>> {
    let deg = f.degree().unwrap_or(0);
    check_alphabet(deg, k, n)?;
    let p = expand(f, n)?;
    let de = XPoly::<C>::vandermonde(n).mul(&expand(&SymFun::<C>::e(k), n)?);
    let m = n - k;
    let c: C = C::from_poly(PolyQT::monomial(BigInt::from(-1), 0, -(m as i32)));
    let t: C = mono_c(0, 1);
    let mut acc: BTreeMap<Partition, C> = BTreeMap::new();
    for mask in subsets(n) {
        let subset: Vec<usize> = (0..n).filter(|&i| in_set(mask, i)).collect();
        let a = de.scale_subset(&subset, &t).scale(&c.pow(mask.count_ones()));
        bialternant_product(&a, &p.drop_vars(&subset), &mut acc);
    }
    // 1/(1/t;1/t)_m = (-1)^m t^{m(m+1)/2} / (t;t)_m
    let sign = if m % 2 == 0 { 1 } else { -1 };
    let mono = C::from_poly(PolyQT::monomial(BigInt::from(sign), 0, (m * (m + 1) / 2) as i32));
    let den = pochhammer(0, 1, m);
    let mut out = SymFun::zero(Basis::S);
    for (lam, v) in acc {
        out.add_term(lam, v.times(&mono).div_poly(&den)?);
    }
    Ok(out)
}

/// `W_k` in `n` variables as a graded operator on degrees `≤ n - k`.
pub fn w_operator(k: usize, n: usize) -> Result<GradedOp<RatQT>> {
    check_alphabet(0, k, n)?;
    GradedOp::from_fn(k, n - k, |lam| w_apply(&SymFun::<RatQT>::basis_element(Basis::S, lam.clone()), k, n))
}

/// `M(u)` on symmetric functions through `n` variables, `q` specialized to
/// `qv`, as a graded operator on degrees `≤ n`.
pub fn macdonald_operator(u: &RatQT, qv: &RatQT, n: usize) -> Result<GradedOp<RatQT>> {
    GradedOp::from_fn(0, n, |lam| {
        let p = expand(&SymFun::<RatQT>::basis_element(Basis::S, lam.clone()), n)?;
        lift(&macdonald_sum_form_at(&p, u, qv)?)
    })
}
