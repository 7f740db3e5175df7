//! Macdonald polynomials: the Rodriguez construction of `H` and `H̃`, integral
//! forms, q,t-Kostka matrices, and the Gram-Schmidt and LV oracles.

use std::collections::{BTreeMap, HashMap};
use std::sync::{Arc, Mutex, OnceLock};

use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::matrix::PartitionMatrix;
use crate::operators::{column_adder, Family, Param};
use crate::partitions::{enumerate, Partition};
use crate::ring::{Mono, PolyQT, RatQT};
use crate::symfun::{Basis, SymFun};
use crate::xpoly::lv_apply;

pub type QtKostkaMatrix = PartitionMatrix;

type Memo = Mutex<HashMap<(Family, Partition), SymFun<PolyQT>>>;

fn memo() -> &'static Memo {
    static C: OnceLock<Memo> = OnceLock::new();
    C.get_or_init(Default::default)
}

fn rodriguez(mu: &Partition, family: Family) -> Result<SymFun<PolyQT>> {
    if let Some(v) = memo().lock().unwrap().get(&(family, mu.clone())) {
        return Ok(v.clone());
    }
    let n = mu.size();
    let mut cur = SymFun::one(Basis::S);
    for &k in mu.conjugate().parts().iter().rev() {
        cur = column_adder(k, n - k, family, Some(Param::Q))?.apply(&cur)?;
    }
    memo().lock().unwrap().insert((family, mu.clone()), cur.clone());
    Ok(cur)
}

/// `H_μ[X;q,t]` from the q-twisted column adders, shortest column first.
pub fn rodriguez_h(mu: &Partition) -> Result<SymFun<PolyQT>> {
    rodriguez(mu, Family::HT)
}

/// `H̃_μ[X;q,t]` from the q-twisted `H̃` column adders.
pub fn rodriguez_htilde(mu: &Partition) -> Result<SymFun<PolyQT>> {
    rodriguez(mu, Family::HtildeT)
}

/// `H̃_μ = t^{n(μ)} H_μ[X;q,1/t]`.
pub fn htilde_by_rescaling(mu: &Partition) -> Result<SymFun<PolyQT>> {
    let h = rodriguez_h(mu)?;
    let shift = Mono::new(0, mu.n_stat() as i32);
    Ok(h.invert_t().map_coeffs(|c| c.shift(shift)))
}

/// `J_μ[X;q,t] = H_μ[X(1-t);q,t]`.
pub fn j_from_h(mu: &Partition) -> Result<SymFun<PolyQT>> {
    Ok(rodriguez_h(mu)?.one_minus_alphabet(&PolyQT::t()))
}

/// `K_λμ(q,t)` for `μ ⊢ n`, with every entry checked to lie in `Z[q,t]`.
pub fn qt_kostka_matrix(n: usize) -> Result<QtKostkaMatrix> {
    qt_matrix(n, rodriguez_h)
}

/// `K̃_λμ(q,t)`, the Schur coefficients of `H̃_μ`.
pub fn qt_kostka_tilde_matrix(n: usize) -> Result<QtKostkaMatrix> {
    qt_matrix(n, rodriguez_htilde)
}

fn qt_matrix(n: usize, col: fn(&Partition) -> Result<SymFun<PolyQT>>) -> Result<QtKostkaMatrix> {
    let cols: Vec<(Partition, SymFun<PolyQT>)> =
        enumerate(n).into_par_iter().map(|mu| col(&mu).map(|h| (mu, h))).collect::<Result<_>>()?;
    let m = PartitionMatrix::from_columns(n, &cols.into_iter().collect());
    check_polynomiality(&m)?;
    Ok(m)
}

/// Every entry has nonnegative exponents in `q` and `t`.
pub fn check_polynomiality(m: &PartitionMatrix) -> Result<()> {
    for ((lam, mu), c) in m.entries() {
        if !c.is_polynomial() {
            return Err(Error::PolynomialityViolation { lambda: lam.to_string(), mu: mu.to_string(), coeff: c.to_string() });
        }
    }
    Ok(())
}

/// `⟨p_λ, p_ρ⟩_{q,t} = δ_λρ z_λ Π (1 - q^{λ_i})/(1 - t^{λ_i})`.
pub fn qt_inner(f: &SymFun<RatQT>, g: &SymFun<RatQT>) -> Result<RatQT> {
    let f = f.convert(Basis::P)?;
    let g = g.convert(Basis::P)?;
    let mut out = RatQT::zero();
    for (rho, a) in f.terms() {
        let b = g.coeff(rho);
        if b.is_zero() {
            continue;
        }
        let mut num = PolyQT::from_bigint(rho.z());
        let mut den = PolyQT::one();
        for &r in rho.parts() {
            num = &num * &PolyQT::one_minus(r as i32, 0);
            den = &den * &PolyQT::one_minus(0, r as i32);
        }
        out = out.add(&a.mul(&b).mul(&RatQT::new(num, den)?));
    }
    Ok(out)
}

fn gs_cache() -> &'static Mutex<HashMap<usize, Arc<BTreeMap<Partition, SymFun<RatQT>>>>> {
    static C: OnceLock<Mutex<HashMap<usize, Arc<BTreeMap<Partition, SymFun<RatQT>>>>>> = OnceLock::new();
    C.get_or_init(Default::default)
}

/// `z_ρ Π (1 - q^{ρ_i})/(1 - t^{ρ_i})`, the norm of `p_ρ`.
fn p_weight(rho: &Partition) -> Result<RatQT> {
    let mut num = PolyQT::from_bigint(rho.z());
    let mut den = PolyQT::one();
    for &r in rho.parts() {
        num = &num * &PolyQT::one_minus(r as i32, 0);
        den = &den * &PolyQT::one_minus(0, r as i32);
    }
    RatQT::new(num, den)
}

fn weighted_dot(a: &SymFun<RatQT>, b: &SymFun<RatQT>, w: &HashMap<Partition, RatQT>) -> RatQT {
    let mut out = RatQT::zero();
    for (rho, x) in a.terms() {
        let y = b.coeff(rho);
        if !y.is_zero() {
            out = out.add(&x.mul(&y).mul(&w[rho]));
        }
    }
    out
}

/// All `P_μ`, `μ ⊢ d`, by classical Gram-Schmidt on the monomial basis taken
/// in a linear extension of dominance (every prefix is a down-set, so the
/// result is the triangular orthogonal basis). Results in the monomial basis.
pub fn gram_schmidt_degree(d: usize) -> Result<Arc<BTreeMap<Partition, SymFun<RatQT>>>> {
    if let Some(v) = gs_cache().lock().unwrap().get(&d) {
        return Ok(v.clone());
    }
    let order: Vec<Partition> = enumerate(d).into_iter().rev().collect();
    let w: HashMap<Partition, RatQT> = enumerate(d).into_iter().map(|r| Ok((r.clone(), p_weight(&r)?))).collect::<Result<_>>()?;
    // (P_ν in m, P_ν in p, ⟨P_ν, P_ν⟩)
    let mut done: Vec<(SymFun<RatQT>, SymFun<RatQT>, RatQT)> = Vec::with_capacity(order.len());
    for mu in &order {
        let m = SymFun::basis_element(Basis::M, mu.clone());
        let mp = m.convert(Basis::P)?;
        let mut pm = m;
        let mut pp = mp.clone();
        for (qm, qp, norm) in &done {
            let c = weighted_dot(&mp, qp, &w).div(norm)?;
            if c.is_zero() {
                continue;
            }
            pm = pm.minus(&qm.scale(&c));
            pp = pp.minus(&qp.scale(&c));
        }
        let norm = weighted_dot(&pp, &pp, &w);
        if norm.is_zero() {
            return Err(Error::SingularGram);
        }
        done.push((pm, pp, norm));
    }
    let v: Arc<BTreeMap<Partition, SymFun<RatQT>>> = Arc::new(order.into_iter().zip(done).map(|(mu, (pm, _, _))| (mu, pm)).collect());
    gs_cache().lock().unwrap().insert(d, Arc::clone(&v));
    Ok(v)
}

/// `P_μ[X;q,t]` in the monomial basis; `n ≥ |μ|` variables.
pub fn gram_schmidt_p(mu: &Partition, n: usize) -> Result<SymFun<RatQT>> {
    if n < mu.size() {
        return Err(Error::AlphabetTooSmall { degree: mu.size(), vars: n });
    }
    Ok(gram_schmidt_degree(mu.size())?[mu].clone())
}

/// `J_μ = h_μ(q,t) P_μ` in the Schur basis.
pub fn gram_schmidt_j(mu: &Partition) -> Result<SymFun<RatQT>> {
    let (h, _) = mu.hook_products();
    gram_schmidt_p(mu, mu.size())?.convert(Basis::S).map(|p| p.scale(&RatQT::from_poly(h)))
}

/// `Q_μ = J_μ / h'_μ(q,t)` in the Schur basis.
pub fn gram_schmidt_q(mu: &Partition) -> Result<SymFun<RatQT>> {
    let (h, hp) = mu.hook_products();
    let c = RatQT::new(h, hp)?;
    Ok(gram_schmidt_p(mu, mu.size())?.convert(Basis::S)?.scale(&c))
}

/// `J_μ` by the LV chain in `n ≥ |μ|` variables.
pub fn lv_j(mu: &Partition, n: usize) -> Result<SymFun<PolyQT>> {
    if n < mu.size() {
        return Err(Error::AlphabetTooSmall { degree: mu.size(), vars: n });
    }
    let mut cur = SymFun::one(Basis::S);
    for &k in mu.conjugate().parts().iter().rev() {
        cur = lv_apply(&cur, k, n)?;
    }
    Ok(cur)
}

/// `Π_{s∈μ} (1 - t^{h(s)}) s_μ`, the value of `J_μ` at `q = t`.
pub fn hook_formula(mu: &Partition) -> SymFun<PolyQT> {
    let mut c = PolyQT::one();
    for (i, j) in mu.cells() {
        c = &c * &PolyQT::one_minus(0, mu.hook_length(i, j) as i32);
    }
    SymFun::term(Basis::S, mu.clone(), c)
}

/// `h_μ(t)` at `q = t`, as a scalar.
pub fn hook_scalar(mu: &Partition) -> PolyQT {
    hook_formula(mu).coeff(mu)
}

#[cfg(test)]
mod tests {
    use super::*;

    type SP = SymFun<PolyQT>;
    type SR = SymFun<RatQT>;

    fn part(s: &str) -> Partition {
        s.parse().unwrap()
    }
    fn poly(s: &str) -> PolyQT {
        s.parse().unwrap()
    }
    fn rat(s: &str) -> RatQT {
        s.parse().unwrap()
    }

    #[test]
    fn rodriguez_examples() {
        assert_eq!(rodriguez_h(&part("-")).unwrap(), SP::one(Basis::S));
        assert_eq!(rodriguez_h(&part("1")).unwrap(), SP::s("1"));
        assert_eq!(rodriguez_h(&part("2")).unwrap(), SP::s("2").plus(&SP::s("1,1").scale(&PolyQT::q())));
        assert_eq!(rodriguez_h(&part("1,1")).unwrap(), SP::s("2").scale(&PolyQT::t()).plus(&SP::s("1,1")));
    }

    #[test]
    fn htilde_examples() {
        assert_eq!(rodriguez_htilde(&part("1")).unwrap(), SP::s("1"));
        let h11 = SP::s("2").plus(&SP::s("1,1").scale(&PolyQT::t()));
        assert_eq!(rodriguez_htilde(&part("1,1")).unwrap(), h11);
        assert_eq!(rodriguez_htilde(&part("2")).unwrap(), SP::s("2").plus(&SP::s("1,1").scale(&PolyQT::q())));
        for n in 0..=4 {
            for mu in enumerate(n) {
                assert_eq!(rodriguez_htilde(&mu).unwrap(), htilde_by_rescaling(&mu).unwrap(), "{mu}");
            }
        }
    }

    #[test]
    fn integral_form_examples() {
        assert_eq!(j_from_h(&part("1")).unwrap(), SP::s("1").scale(&poly("1 - t")));
        let j2 = j_from_h(&part("2")).unwrap().specialize(&rat("t"), &rat("t")).unwrap();
        assert_eq!(j2, SP::s("2").scale(&poly("-t^3 + t^2 + t - 1").scale(&(-1).into())));
        let j11 = j_from_h(&part("1,1")).unwrap().specialize(&RatQT::zero(), &rat("t")).unwrap();
        assert_eq!(j11, crate::hall_littlewood::hl_q(&part("1,1"), 2).unwrap());
    }

    #[test]
    fn qt_kostka_examples() {
        assert_eq!(qt_kostka_matrix(0).unwrap(), PartitionMatrix::identity(0));
        assert_eq!(qt_kostka_matrix(1).unwrap(), PartitionMatrix::identity(1));
        let k = qt_kostka_matrix(2).unwrap();
        assert_eq!(k.get(&part("1,1"), &part("2")), PolyQT::q());
        assert_eq!(k.get(&part("2"), &part("1,1")), PolyQT::t());
        assert!(k.get(&part("2"), &part("2")).is_one());
        assert_eq!(qt_kostka_matrix(3).unwrap().get(&part("1,1,1"), &part("3")), poly("q^3"));
    }

    #[test]
    fn polynomiality_check_reports_entry() {
        let mut m = PartitionMatrix::identity(2);
        m.set(part("2"), part("1,1"), poly("t^-1"));
        let e = check_polynomiality(&m).unwrap_err();
        assert!(matches!(e, Error::PolynomialityViolation { ref lambda, ref mu, .. } if lambda == "2" && mu == "1,1"));
    }

    #[test]
    fn gram_schmidt_examples() {
        assert_eq!(gram_schmidt_p(&part("1"), 1).unwrap(), SR::m("1"));
        assert_eq!(gram_schmidt_p(&part("1,1"), 2).unwrap(), SR::m("1,1"));
        let c = rat("(-q*t + q - t + 1)/(-q*t + 1)");
        assert_eq!(gram_schmidt_p(&part("2"), 2).unwrap(), SR::m("2").plus(&SR::m("1,1").scale(&c)));
        assert!(matches!(gram_schmidt_p(&part("2"), 1), Err(Error::AlphabetTooSmall { .. })));
    }

    #[test]
    fn gram_schmidt_is_dominance_triangular() {
        for d in 0..=5 {
            for (mu, p) in gram_schmidt_degree(d).unwrap().iter() {
                assert!(p.coeff(mu).is_one());
                assert!(p.terms().keys().all(|nu| mu.dominates(nu)), "{mu}");
            }
        }
    }

    #[test]
    fn lv_examples() {
        assert_eq!(lv_j(&part("-"), 0).unwrap(), SP::one(Basis::S));
        assert_eq!(lv_j(&part("1"), 2).unwrap(), SP::s("1").scale(&poly("1 - t")));
        assert_eq!(lv_j(&part("1,1"), 3).unwrap().to_rat(), gram_schmidt_j(&part("1,1")).unwrap());
        assert_eq!(lv_j(&part("2,1"), 3).unwrap(), j_from_h(&part("2,1")).unwrap());
    }

    #[test]
    fn three_routes_agree_small() {
        for n in 0..=4 {
            for mu in enumerate(n) {
                let rod = j_from_h(&mu).unwrap();
                assert_eq!(lv_j(&mu, n).unwrap(), rod, "{mu}");
                assert_eq!(gram_schmidt_j(&mu).unwrap(), rod.to_rat(), "{mu}");
            }
        }
    }
}
