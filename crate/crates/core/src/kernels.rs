//! Truncated Cauchy-type kernels `Ω[X Y c]` with one symbolic alphabet `X`
//! and one finite alphabet `y_1..y_k`, and the ratio identities they satisfy.
//!
//! A series is stored as `Σ_ρ p_ρ[X] ⊗ f_ρ(y)`. Operators on the finite side
//! act on each `f_ρ`; operators on the symbolic side act on the `X` factor of
//! each `y` monomial. Since `Ω[E]^{-1} = Ω[-E]`, every ratio is a product.

use std::collections::BTreeMap;

use crate::error::Result;
use crate::macdonald::{gram_schmidt_j, gram_schmidt_p, gram_schmidt_q};
use crate::operators::{column_adder, Family, GradedOp, Param};
use crate::partitions::{enumerate, Partition};
use crate::ring::{Coeff, PolyQT, RatQT};
use crate::symfun::{omega_kernel, Alphabet, AlphabetExpr, Basis, SymFun};
use crate::xpoly::{delta_a, expand, macdonald_sum_form_at, subsets, XPoly};

#[derive(Clone, PartialEq, Debug)]
pub struct MixedSeries {
    k: usize,
    terms: BTreeMap<Partition, XPoly<RatQT>>,
}

impl MixedSeries {
    pub fn zero(k: usize) -> Self {
        MixedSeries { k, terms: BTreeMap::new() }
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn terms(&self) -> &BTreeMap<Partition, XPoly<RatQT>> {
        &self.terms
    }

    pub fn add_term(&mut self, rho: Partition, f: XPoly<RatQT>) {
        let e = self.terms.entry(rho.clone()).or_insert_with(|| XPoly::zero(self.k));
        *e = e.plus(&f);
        if e.is_zero() {
            self.terms.remove(&rho);
        }
    }

    /// Adds `g[X] ⊗ f(y)`.
    pub fn add_product(&mut self, g: &SymFun<RatQT>, f: &XPoly<RatQT>) -> Result<()> {
        for (rho, c) in g.convert(Basis::P)?.terms() {
            self.add_term(rho.clone(), f.scale(c));
        }
        Ok(())
    }

    pub fn plus(&self, o: &Self) -> Self {
        let mut out = self.clone();
        for (rho, f) in &o.terms {
            out.add_term(rho.clone(), f.clone());
        }
        out
    }

    /// Product keeping `X` degree `≤ dx` and `y` degree `≤ dy`.
    pub fn mul_truncated(&self, o: &Self, dx: usize, dy: usize) -> Self {
        let mut out = Self::zero(self.k);
        for (a, f) in &self.terms {
            for (b, g) in &o.terms {
                if a.size() + b.size() > dx {
                    continue;
                }
                let mut v = a.parts().to_vec();
                v.extend_from_slice(b.parts());
                out.add_term(Partition::from_unsorted(v), truncate_y(&f.mul(g), dy));
            }
        }
        out
    }

    /// Applies a linear map to every finite-alphabet component.
    pub fn apply_y(&self, op: impl Fn(&XPoly<RatQT>) -> Result<XPoly<RatQT>>) -> Result<Self> {
        let mut out = Self::zero(self.k);
        for (rho, f) in &self.terms {
            out.add_term(rho.clone(), op(f)?);
        }
        Ok(out)
    }

    /// Applies a graded operator to the symbolic factor.
    pub fn apply_x(&self, op: &GradedOp<RatQT>) -> Result<Self> {
        let mut by_mono: BTreeMap<Vec<u32>, SymFun<RatQT>> = BTreeMap::new();
        for (rho, f) in &self.terms {
            for (e, c) in f.terms() {
                by_mono.entry(e.clone()).or_insert_with(|| SymFun::zero(Basis::P)).add_term(rho.clone(), c.clone());
            }
        }
        let mut out = Self::zero(self.k);
        for (e, g) in by_mono {
            let img = op.apply(&g)?;
            out.add_product(&img, &XPoly::monomial(self.k, e, RatQT::one()))?;
        }
        Ok(out)
    }

    pub fn is_free_of_q(&self) -> bool {
        self.terms.values().all(|f| f.terms().values().all(|c| c.num().is_free_of_q() && c.den().is_free_of_q()))
    }

    /// Every `y` monomial contains `y_1 ⋯ y_k`.
    pub fn divisible_by_all_y(&self) -> bool {
        self.terms.values().all(|f| f.terms().keys().all(|e| e.iter().all(|&x| x > 0)))
    }
}

fn truncate_y(f: &XPoly<RatQT>, dy: usize) -> XPoly<RatQT> {
    XPoly::from_terms(
        f.n(),
        f.terms().iter().filter(|(e, _)| e.iter().sum::<u32>() as usize <= dy).map(|(e, c)| (e.clone(), c.clone())),
    )
}

/// `p_ρ[Y_I]` for the variables selected by `mask`.
fn power_sum_on(rho: &Partition, k: usize, mask: u32) -> XPoly<RatQT> {
    let mut out = XPoly::one(k);
    for &r in rho.parts() {
        let mut pr = XPoly::zero(k);
        for i in (0..k).filter(|&i| mask >> i & 1 == 1) {
            let mut e = vec![0; k];
            e[i] = r as u32;
            pr.add_term(e, RatQT::one());
        }
        out = out.mul(&pr);
    }
    out
}

/// `Ω[X Y_I c]` through degree `d`, `I` given by `mask`.
pub fn kernel_on(c: &RatQT, k: usize, mask: u32, d: usize) -> Result<MixedSeries> {
    let mut out = MixedSeries::zero(k);
    for comp in omega_kernel(&AlphabetExpr::single(c.clone(), Alphabet::XY), d)? {
        for ((a, b), coeff) in comp.terms() {
            out.add_term(a.clone(), power_sum_on(b, k, mask).scale(coeff));
        }
    }
    Ok(out)
}

/// `Ω[X Y_k c]` through degree `d`.
pub fn kernel(c: &RatQT, k: usize, d: usize) -> Result<MixedSeries> {
    kernel_on(c, k, (1u32 << k) - 1, d)
}

/// `(1 - t)/(1 - q)`.
pub fn macdonald_ratio() -> RatQT {
    RatQT::new(PolyQT::one_minus(0, 1), PolyQT::one_minus(1, 0)).expect("nonzero")
}

fn one_minus_t() -> RatQT {
    RatQT::from_poly(PolyQT::one_minus(0, 1))
}

/// `V(Ω[E]) · Ω[-E]`, for `V` acting on the finite side.
fn ratio_y(
    c: &RatQT,
    k: usize,
    d: usize,
    op: impl Fn(&XPoly<RatQT>) -> Result<XPoly<RatQT>>,
) -> Result<MixedSeries> {
    let num = kernel(c, k, d)?.apply_y(op)?;
    Ok(num.mul_truncated(&kernel(&c.neg(), k, d)?, d, d))
}

/// `V(Ω[E]) · Ω[-E]`, for `V` acting on the symbolic side with degree shift `s`.
fn ratio_x(c: &RatQT, k: usize, d: usize, op: &GradedOp<RatQT>) -> Result<MixedSeries> {
    let num = kernel(c, k, d)?.apply_x(op)?;
    Ok(num.mul_truncated(&kernel(&c.neg(), k, d)?, d + op.shift(), d))
}

/// Both sides of the Macdonald Cauchy identity
/// `Ω[X Y_k (1-t)/(1-q)] = Σ_{l(λ) ≤ k} Q_λ[X] P_λ[Y_k]` through degree `d`.
pub fn cauchy_sides(k: usize, d: usize) -> Result<(MixedSeries, MixedSeries)> {
    let lhs = kernel(&macdonald_ratio(), k, d)?;
    let mut rhs = MixedSeries::zero(k);
    for m in 0..=d {
        for lam in enumerate(m).into_iter().filter(|l| l.len() <= k) {
            rhs.add_product(&gram_schmidt_q(&lam)?, &expand(&gram_schmidt_p(&lam, m.max(1))?, k)?)?;
        }
    }
    Ok((lhs, rhs))
}

/// `M^{(Y_k)}(-1) Ω[X Y_k (1-t)/(1-q)]` and
/// `y_1⋯y_k Σ_{l(μ) ≤ k} J_{μ+1^k}[X] P_μ[Y_k]/h'_μ`, through degree `d`.
pub fn column_kernel_sides(k: usize, d: usize) -> Result<(MixedSeries, MixedSeries)> {
    let minus_one = RatQT::from_int(-1);
    let q = RatQT::from_poly(PolyQT::q());
    let lhs = kernel(&macdonald_ratio(), k, d)?.apply_y(|f| macdonald_sum_form_at(f, &minus_one, &q))?;
    let ys = XPoly::monomial(k, vec![1; k], RatQT::one());
    let mut rhs = MixedSeries::zero(k);
    for m in 0..=d.saturating_sub(k) {
        for mu in enumerate(m).into_iter().filter(|l| l.len() <= k) {
            let j = gram_schmidt_j(&mu.add_column(k)?)?;
            let hp = RatQT::from_poly(mu.hook_products().1);
            let p = expand(&gram_schmidt_p(&mu, m.max(1))?, k)?.mul(&ys);
            rhs.add_product(&j.scale(&hp.inv()?), &p)?;
        }
    }
    Ok((lhs, rhs))
}

/// The ratio `M(u) Ω / Ω` computed directly, and the closed form
/// `Σ_I u^{|I|} A_I[Y_k;t] Ω[X Y_I (t-1)]`, through degree `d`.
pub fn macdonald_ratio_sides(u: &RatQT, k: usize, d: usize) -> Result<(MixedSeries, MixedSeries)> {
    let q = RatQT::from_poly(PolyQT::q());
    let lhs = ratio_y(&macdonald_ratio(), k, d, |f| macdonald_sum_form_at(f, u, &q))?;
    let t_minus_one = one_minus_t().neg();
    // Σ_I u^{|I|} Δ A_I Ω[X Y_I (t-1)], then one division by Δ per X component.
    let mut num = MixedSeries::zero(k);
    for mask in subsets(k) {
        let da = delta_a::<RatQT>(k, mask).scale(&Coeff::pow(u, mask.count_ones()));
        for (rho, f) in kernel_on(&t_minus_one, k, mask, d)?.terms() {
            num.add_term(rho.clone(), da.mul(f));
        }
    }
    let rhs = num.apply_y(|f| f.div_vandermonde())?;
    Ok((lhs, rhs))
}

/// Ratios for `V = ` the q-twisted column adder against `V = TG_j` itself:
/// `Ṽ Ω[XY(1-t)/(1-q)] / Ω[…]` and `V Ω[XY(1-t)] / Ω[XY(1-t)]`.
pub fn twisted_ratio_sides(j: usize, k: usize, d: usize) -> Result<(MixedSeries, MixedSeries)> {
    let twisted = column_adder(j, d, Family::HT, Some(Param::Q))?.to_rat();
    let plain = column_adder(j, d, Family::HT, None)?.to_rat();
    let lhs = ratio_x(&macdonald_ratio(), k, d, &twisted)?;
    let rhs = ratio_x(&one_minus_t(), k, d, &plain)?;
    Ok((lhs, rhs))
}

/// Ratios for `V(q,t) = M(u)` on `n` variables:
/// `V(q,t) Ω[XY(1-t)/(1-q)] / Ω[…]` and `V(0,t) Ω[XY(1-t)] / Ω[XY(1-t)]`.
pub fn operator_ratio_sides(u: &RatQT, n: usize, d: usize) -> Result<(MixedSeries, MixedSeries)> {
    let q = RatQT::from_poly(PolyQT::q());
    let lhs = ratio_y(&macdonald_ratio(), n, d, |f| macdonald_sum_form_at(f, u, &q))?;
    let rhs = ratio_y(&one_minus_t(), n, d, |f| macdonald_sum_form_at(f, u, &RatQT::zero()))?;
    Ok((lhs, rhs))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn kernel_degree_one() {
        let c = macdonald_ratio();
        let k = kernel(&c, 2, 1).unwrap();
        let mut expect = MixedSeries::zero(2);
        expect.add_term(Partition::empty(), XPoly::one(2));
        expect.add_term(
            Partition::row(1),
            XPoly::from_terms(2, [(vec![1, 0], c.clone()), (vec![0, 1], c)]),
        );
        assert_eq!(k, expect);
    }

    #[test]
    fn inverse_kernel() {
        let c = macdonald_ratio();
        let prod = kernel(&c, 2, 3).unwrap().mul_truncated(&kernel(&c.neg(), 2, 3).unwrap(), 3, 3);
        let mut one = MixedSeries::zero(2);
        one.add_term(Partition::empty(), XPoly::one(2));
        assert_eq!(prod, one);
    }

    #[test]
    fn cauchy_identity() {
        let (l, r) = cauchy_sides(2, 3).unwrap();
        assert_eq!(l, r);
    }

    #[test]
    fn column_kernel_identity() {
        let (l, r) = column_kernel_sides(2, 3).unwrap();
        assert!(l.divisible_by_all_y());
        assert_eq!(l, r);
    }

    #[test]
    fn ratio_identities() {
        let t = RatQT::from_poly(PolyQT::t());
        for u in [RatQT::one(), RatQT::from_int(-1), t.clone(), t.mul(&t)] {
            let (l, r) = macdonald_ratio_sides(&u, 2, 3).unwrap();
            assert!(l.is_free_of_q());
            assert_eq!(l, r, "u = {u}");
        }
        for j in 1..=2 {
            let (l, r) = twisted_ratio_sides(j, 2, 3).unwrap();
            assert!(l.is_free_of_q());
            assert_eq!(l, r, "j = {j}");
        }
        let (l, r) = operator_ratio_sides(&t, 3, 3).unwrap();
        assert!(l.is_free_of_q());
        assert_eq!(l, r);
    }
}
