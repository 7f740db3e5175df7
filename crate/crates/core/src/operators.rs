//! Degree-graded linear operators stored by their images of Schur functions.

use std::collections::{BTreeMap, HashMap};
use std::sync::{Arc, Mutex, OnceLock};

use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::hall_littlewood::kostka_foulkes_matrix;
use crate::partitions::{enumerate, Partition};
use crate::ring::{Coeff, PolyQT, RatQT};
use crate::symfun::{skew_schur, Basis, SymFun};

/// Images `V s_λ` for every `λ` with `|λ| ≤ cap`, each homogeneous of degree
/// `|λ| + shift`.
#[derive(Clone, PartialEq)]
pub struct GradedOp<C> {
    shift: usize,
    cap: usize,
    blocks: Vec<BTreeMap<Partition, SymFun<C>>>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Family {
    /// `H_μ[X;t] ↦ H_{μ+1^k}[X;t]`
    HT,
    /// `H̃_μ[X;t] ↦ H̃_{μ+1^k}[X;t]`
    HtildeT,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Param {
    Q,
    T,
}

impl Param {
    pub fn monomial(self) -> PolyQT {
        match self {
            Param::Q => PolyQT::q(),
            Param::T => PolyQT::t(),
        }
    }
}

impl<C: Coeff> GradedOp<C> {
    /// Builds the operator from its action on each `s_λ`, `|λ| ≤ cap`.
    pub fn from_fn(shift: usize, cap: usize, f: impl Fn(&Partition) -> Result<SymFun<C>> + Sync) -> Result<Self> {
        let jobs: Vec<Partition> = (0..=cap).flat_map(enumerate).collect();
        let images: Vec<(Partition, SymFun<C>)> =
            jobs.into_par_iter().map(|lam| f(&lam).map(|v| (lam, v.in_schur()))).collect::<Result<_>>()?;
        let mut blocks = vec![BTreeMap::new(); cap + 1];
        for (lam, v) in images {
            blocks[lam.size()].insert(lam, v);
        }
        Ok(GradedOp { shift, cap, blocks })
    }

    pub fn identity(cap: usize) -> Self {
        Self::from_fn(0, cap, |l| Ok(SymFun::basis_element(Basis::S, l.clone()))).expect("infallible")
    }

    pub fn zero(shift: usize, cap: usize) -> Self {
        Self::from_fn(shift, cap, |_| Ok(SymFun::zero(Basis::S))).expect("infallible")
    }

    /// Multiplication by a homogeneous `g`.
    pub fn multiplication(g: &SymFun<C>, cap: usize) -> Result<Self> {
        let g = g.in_schur();
        let shift = g.degree().unwrap_or(0);
        Self::from_fn(shift, cap, |l| SymFun::basis_element(Basis::S, l.clone()).multiply(&g))
    }

    pub fn shift(&self) -> usize {
        self.shift
    }

    pub fn cap(&self) -> usize {
        self.cap
    }

    pub fn image(&self, lam: &Partition) -> Result<&SymFun<C>> {
        if lam.size() > self.cap {
            return Err(Error::CapExceeded { degree: lam.size(), cap: self.cap });
        }
        Ok(&self.blocks[lam.size()][lam])
    }

    pub fn blocks(&self) -> &[BTreeMap<Partition, SymFun<C>>] {
        &self.blocks
    }

    /// Linear extension to `f`; result in the Schur basis.
    pub fn apply(&self, f: &SymFun<C>) -> Result<SymFun<C>> {
        let s = f.convert(Basis::S)?;
        let mut acc: BTreeMap<Partition, C> = BTreeMap::new();
        for (lam, c) in s.terms() {
            for (nu, d) in self.image(lam)?.terms() {
                acc.entry(nu.clone()).or_insert_with(C::zero).accumulate(&c.times(d));
            }
        }
        Ok(SymFun::from_terms(Basis::S, acc.into_iter().filter(|(_, c)| !c.is_zero())))
    }

    /// `self ∘ o`, defined up to the smaller usable cap.
    pub fn compose(&self, o: &Self) -> Result<Self> {
        let cap = o.cap.min(self.cap.saturating_sub(o.shift));
        Self::from_fn(self.shift + o.shift, cap, |l| self.apply(o.image(l)?))
    }

    pub fn restrict(&self, cap: usize) -> Result<Self> {
        if cap > self.cap {
            return Err(Error::CapExceeded { degree: cap, cap: self.cap });
        }
        Ok(GradedOp { shift: self.shift, cap, blocks: self.blocks[..=cap].to_vec() })
    }

    pub fn map_images(&self, f: impl Fn(&SymFun<C>) -> SymFun<C>) -> Self {
        let blocks = self.blocks.iter().map(|b| b.iter().map(|(l, v)| (l.clone(), f(v))).collect()).collect();
        GradedOp { shift: self.shift, cap: self.cap, blocks }
    }

    /// `q ↔ t` on every coefficient.
    pub fn swap_qt(&self) -> Self {
        self.map_images(|v| v.swap_qt())
    }

    /// `ω V ω`.
    pub fn omega_conjugate(&self) -> Self {
        let mut blocks = vec![BTreeMap::new(); self.cap + 1];
        for (d, b) in self.blocks.iter().enumerate() {
            for (l, v) in b {
                blocks[d].insert(l.conjugate(), v.omega());
            }
        }
        GradedOp { shift: self.shift, cap: self.cap, blocks }
    }

    pub fn to_rat(&self) -> GradedOp<RatQT> {
        let blocks = self.blocks.iter().map(|b| b.iter().map(|(l, v)| (l.clone(), v.to_rat())).collect()).collect();
        GradedOp { shift: self.shift, cap: self.cap, blocks }
    }

    pub fn specialize(&self, q: &RatQT, t: &RatQT) -> Result<Self> {
        let mut blocks = Vec::with_capacity(self.cap + 1);
        for b in &self.blocks {
            let mut nb = BTreeMap::new();
            for (l, v) in b {
                nb.insert(l.clone(), v.specialize(q, t)?);
            }
            blocks.push(nb);
        }
        Ok(GradedOp { shift: self.shift, cap: self.cap, blocks })
    }

    /// Every coefficient is a polynomial with nonnegative exponents.
    pub fn is_polynomial(&self) -> bool {
        self.blocks.iter().flat_map(|b| b.values()).flat_map(|v| v.terms().values()).all(|c| {
            let r = c.to_rat();
            r.den().is_one() && r.num().is_polynomial()
        })
    }

    /// Images of `s_λ` as JSON, keyed by partition.
    pub fn to_json(&self) -> String {
        let imgs: BTreeMap<String, &SymFun<C>> =
            self.blocks.iter().flat_map(|b| b.iter()).map(|(l, v)| (l.to_string(), v)).collect();
        serde_json::to_string_pretty(&serde_json::json!({"shift": self.shift, "cap": self.cap, "images": imgs}))
            .expect("serializable")
    }
}

impl<C: Coeff> std::fmt::Debug for GradedOp<C> {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("GradedOp").field("shift", &self.shift).field("cap", &self.cap).field("blocks", &self.blocks).finish()
    }
}

impl GradedOp<RatQT> {
    pub fn to_poly(&self) -> Result<GradedOp<PolyQT>> {
        let mut blocks = Vec::with_capacity(self.cap + 1);
        for b in &self.blocks {
            let mut nb = BTreeMap::new();
            for (l, v) in b {
                nb.insert(l.clone(), v.to_poly()?);
            }
            blocks.push(nb);
        }
        Ok(GradedOp { shift: self.shift, cap: self.cap, blocks })
    }
}

/// `H_μ ↦ H_{μ+1^k}` (`l(μ) ≤ k`, else 0) on the chosen Hall-Littlewood
/// basis, in Schur coordinates, for inputs of degree `≤ cap`.
pub fn make_column_adder(k: usize, cap: usize, family: Family) -> Result<GradedOp<PolyQT>> {
    assert!(k >= 1, "column length must be positive");
    GradedOp::from_fn(k, cap, |lam| {
        let d = lam.size();
        let src = kostka_foulkes_matrix(d)?;
        let dst = kostka_foulkes_matrix(d + k)?;
        let mut out = SymFun::zero(Basis::S);
        for mu in enumerate(d) {
            if mu.len() > k {
                continue;
            }
            let a = src.1.get(&mu, lam);
            if a.is_zero() {
                continue;
            }
            let nu = mu.add_column(k)?;
            let col = dst.0.column(&nu);
            let c = match family {
                Family::HT => a,
                // K̃ = K(1/t) t^{n(μ)}, so the weights pick up t^{n(ν)-n(μ)} = t^{C(k,2)}
                Family::HtildeT => a.invert_t().shift(crate::ring::Mono::new(0, (k * (k - 1) / 2) as i32)),
            };
            let col = match family {
                Family::HT => col,
                Family::HtildeT => col.invert_t(),
            };
            out = out.plus(&col.scale(&c));
        }
        Ok(out)
    })
}

/// `Ṽ s_λ = Σ_{ν⊆λ} a^{|λ/ν|} s_{λ/ν} · V(s_ν[(1-a)X])` for `a = q` or `t`.
pub fn param_twist<C: Coeff>(v: &GradedOp<C>, param: Param, cap: usize) -> Result<GradedOp<C>> {
    if cap > v.cap {
        return Err(Error::CapExceeded { degree: cap, cap: v.cap });
    }
    let a = param.monomial();
    // V(s_ν[(1-a)X]) is shared by every λ ⊇ ν
    let inner: HashMap<Partition, SymFun<C>> = (0..=cap)
        .flat_map(enumerate)
        .collect::<Vec<_>>()
        .into_par_iter()
        .map(|nu| {
            let s = SymFun::<C>::basis_element(Basis::S, nu.clone()).one_minus_alphabet(&a);
            v.apply(&s).map(|w| (nu, w))
        })
        .collect::<Result<_>>()?;
    GradedOp::from_fn(v.shift, cap, |lam| {
        let mut out = SymFun::zero(Basis::S);
        for nu in lam.subpartitions() {
            let w = &inner[&nu];
            if w.is_zero() {
                continue;
            }
            let power = a.pow((lam.size() - nu.size()) as u32);
            let skew = skew_schur::<C>(lam, &nu)?.scale(&C::from_poly(power));
            out = out.plus(&skew.multiply(w)?);
        }
        Ok(out)
    })
}

/// `F V F^{-1}` where `F P[X] = P[X(1-t)]`.
pub fn f_t_conjugate<C: Coeff>(v: &GradedOp<C>) -> Result<GradedOp<RatQT>> {
    let cap = v.cap;
    let vr = v.to_rat();
    GradedOp::from_fn(v.shift, cap, |lam| {
        let pre = SymFun::<RatQT>::basis_element(Basis::S, lam.clone()).divide_alphabet_one_minus_t()?;
        Ok(vr.apply(&pre)?.one_minus_alphabet(&PolyQT::t()))
    })
}

type OpKey = (Family, Option<Param>, usize, usize);

fn op_cache() -> &'static Mutex<HashMap<OpKey, Arc<GradedOp<PolyQT>>>> {
    static C: OnceLock<Mutex<HashMap<OpKey, Arc<GradedOp<PolyQT>>>>> = OnceLock::new();
    C.get_or_init(Default::default)
}

/// Column adder, optionally twisted, memoized per process.
pub fn column_adder(k: usize, cap: usize, family: Family, twist: Option<Param>) -> Result<Arc<GradedOp<PolyQT>>> {
    let key = (family, twist, k, cap);
    if let Some(v) = op_cache().lock().unwrap().get(&key) {
        return Ok(v.clone());
    }
    let base = make_column_adder(k, cap, family)?;
    let op = match twist {
        None => base,
        Some(p) => param_twist(&base, p, cap)?,
    };
    let op = Arc::new(op);
    op_cache().lock().unwrap().insert(key, op.clone());
    Ok(op)
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

    #[test]
    fn column_adder_examples() {
        let tg1 = make_column_adder(1, 2, Family::HT).unwrap();
        assert_eq!(tg1.apply(&SP::one(Basis::S)).unwrap(), SP::s("1"));
        assert_eq!(tg1.apply(&SP::s("1")).unwrap(), SP::s("2"));
        let h11 = kostka_foulkes_matrix(2).unwrap().0.column(&part("1,1"));
        assert!(tg1.apply(&h11).unwrap().is_zero());
        let tg2 = make_column_adder(2, 1, Family::HT).unwrap();
        let h21 = kostka_foulkes_matrix(3).unwrap().0.column(&part("2,1"));
        assert_eq!(tg2.apply(&SP::s("1")).unwrap(), h21);
        assert_eq!(h21, SP::s("2,1").plus(&SP::s("3").scale(&PolyQT::t())));
    }

    #[test]
    fn twist_examples() {
        let id = GradedOp::<PolyQT>::identity(4);
        assert_eq!(param_twist(&id, Param::Q, 4).unwrap(), id);
        let tg1 = make_column_adder(1, 3, Family::HT).unwrap();
        let tw = param_twist(&tg1, Param::Q, 3).unwrap();
        assert_eq!(tw.apply(&SP::s("1")).unwrap(), SP::s("2").plus(&SP::s("1,1").scale(&PolyQT::q())));
        assert_eq!(tw.apply(&SP::one(Basis::S)).unwrap(), tg1.apply(&SP::one(Basis::S)).unwrap());
        assert!(tw.is_polynomial());
        assert!(matches!(param_twist(&tg1, Param::Q, 4), Err(Error::CapExceeded { .. })));
    }

    #[test]
    fn f_t_examples() {
        let id = GradedOp::<PolyQT>::identity(4);
        assert_eq!(f_t_conjugate(&id).unwrap(), id.to_rat());
        let p1 = GradedOp::multiplication(&SR::p("1"), 4).unwrap();
        let expect = GradedOp::multiplication(&SR::p("1").scale(&RatQT::from_poly(poly("1 - t"))), 4).unwrap();
        assert_eq!(f_t_conjugate(&p1).unwrap(), expect);
    }

    #[test]
    fn apply_examples() {
        let z = GradedOp::<PolyQT>::zero(1, 3);
        assert!(z.apply(&SP::s("2,1")).unwrap().is_zero());
        let id = GradedOp::<PolyQT>::identity(3);
        let f = SP::s("2,1").plus(&SP::s("1").scale(&PolyQT::q()));
        assert_eq!(id.apply(&f).unwrap(), f);
        assert!(matches!(id.apply(&SP::s("4")), Err(Error::CapExceeded { .. })));
        let tg1 = make_column_adder(1, 2, Family::HT).unwrap();
        let h1 = kostka_foulkes_matrix(1).unwrap().0.column(&part("1"));
        assert_eq!(tg1.apply(&h1).unwrap(), kostka_foulkes_matrix(2).unwrap().0.column(&part("2")));
    }

    #[test]
    fn htilde_adder_is_rescaled_adder() {
        for k in 1..=3 {
            let a = make_column_adder(k, 3, Family::HtildeT).unwrap();
            let b = make_column_adder(k, 3, Family::HT).unwrap();
            let c = (k * (k - 1) / 2) as i32;
            let expect = b.map_images(|v| v.invert_t().scale(&PolyQT::qt_pow(0, c)));
            assert_eq!(a, expect);
        }
    }

    #[test]
    fn twist_commutes_with_f_t() {
        for k in 1..=2 {
            let tg = make_column_adder(k, 4, Family::HT).unwrap();
            let lhs = f_t_conjugate(&param_twist(&tg, Param::Q, 4).unwrap()).unwrap();
            let rhs = param_twist(&f_t_conjugate(&tg).unwrap(), Param::Q, 4).unwrap();
            assert_eq!(lhs, rhs);
        }
    }
}
