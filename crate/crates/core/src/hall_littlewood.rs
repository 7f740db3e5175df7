//! Hall-Littlewood layer: the TLV column operator, `Q_μ[X;t]` by TLV chains,
//! Kostka-Foulkes matrices and the charge statistic.

use std::collections::{BTreeMap, HashMap};
use std::sync::{Arc, Mutex, OnceLock};

use num_bigint::BigInt;
use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::matrix::PartitionMatrix;
use crate::partitions::{enumerate, Composition, Partition};
use crate::ring::PolyQT;
use crate::symfun::tables::{horizontal_strips, straighten};
use crate::symfun::{Basis, SymFun};

pub type KFMatrix = PartitionMatrix;

type TlvKey = (Partition, usize, usize);

fn tlv_cache() -> &'static Mutex<HashMap<TlvKey, Arc<BTreeMap<Partition, PolyQT>>>> {
    static C: OnceLock<Mutex<HashMap<TlvKey, Arc<BTreeMap<Partition, PolyQT>>>>> = OnceLock::new();
    C.get_or_init(Default::default)
}

/// TLV_k on a single monomial `m_λ` in `n` variables, Schur coefficients.
pub fn tlv_monomial(lambda: &Partition, k: usize, n: usize) -> Arc<BTreeMap<Partition, PolyQT>> {
    let key = (lambda.clone(), k, n);
    if let Some(v) = tlv_cache().lock().unwrap().get(&key) {
        return v.clone();
    }
    let v = Arc::new(tlv_monomial_raw(lambda, k, n));
    tlv_cache().lock().unwrap().insert(key, v.clone());
    v
}

fn tlv_monomial_raw(lambda: &Partition, k: usize, n: usize) -> BTreeMap<Partition, PolyQT> {
    let mut out: BTreeMap<Partition, PolyQT> = BTreeMap::new();
    if lambda.len() > k || k > n {
        return out;
    }
    let nk = (n - k) as i32;
    let sign = if nk % 2 == 0 { 1 } else { -1 };
    let base = PolyQT::monomial(BigInt::from(sign), 0, nk * (nk - 1) / 2);
    let arrangements = Composition::rearrangements(lambda, k);
    let mut eps = vec![0usize; n];
    for e in eps.iter_mut().take(k) {
        *e = 1;
    }
    eps.reverse();
    loop {
        // ε is a 0/1 vector with k ones; p lives on Supp(ε).
        let slots: Vec<usize> = (0..n).filter(|&i| eps[i] == 1).collect();
        let mut zero_factor = base.clone();
        for i in 0..n {
            if eps[i] == 0 {
                let e = k as i32 - i as i32;
                zero_factor = -(&zero_factor * &PolyQT::qt_pow(0, e));
            }
        }
        for arr in &arrangements {
            let mut c = zero_factor.clone();
            let mut vec = eps.clone();
            for (j, &i) in slots.iter().enumerate() {
                let pi = arr.entries[j];
                vec[i] += pi;
                if pi == 0 {
                    c = &c * &PolyQT::one_minus(0, k as i32 - i as i32);
                }
            }
            if c.is_zero() {
                continue;
            }
            if let Some((s, shape)) = straighten(&Composition::new(vec)) {
                let e = out.entry(shape).or_insert_with(PolyQT::zero);
                *e = &*e + &c.scale(&BigInt::from(s));
            }
        }
        if !crate::partitions::next_permutation(&mut eps) {
            break;
        }
    }
    out.retain(|_, c| !c.is_zero());
    out
}

/// TLV_k applied to `f` in `n` variables; result in the Schur basis.
pub fn tlv_apply(f: &SymFun<PolyQT>, k: usize, n: usize) -> Result<SymFun<PolyQT>> {
    let m = f.convert(Basis::M)?;
    let mut acc: BTreeMap<Partition, PolyQT> = BTreeMap::new();
    for (lam, c) in m.terms() {
        for (nu, d) in tlv_monomial(lam, k, n).iter() {
            let e = acc.entry(nu.clone()).or_insert_with(PolyQT::zero);
            *e = &*e + &(c * d);
        }
    }
    Ok(SymFun::from_terms(Basis::S, acc))
}

/// `Q_μ[X;t]` by the TLV chain over the columns of `μ`, shortest first, in
/// `n ≥ |μ|` variables.
pub fn hl_q(mu: &Partition, n: usize) -> Result<SymFun<PolyQT>> {
    if n < mu.size() {
        return Err(Error::AlphabetTooSmall { degree: mu.size(), vars: n });
    }
    let mut cur = SymFun::one(Basis::S);
    for &k in mu.conjugate().parts().iter().rev() {
        cur = tlv_apply(&cur, k, n)?;
    }
    Ok(cur)
}

/// `H_μ[X;t] = Q_μ[X/(1-t);t]`.
pub fn hl_h(mu: &Partition) -> Result<SymFun<PolyQT>> {
    hl_q(mu, mu.size())?.divide_alphabet_one_minus_t()?.to_poly()
}

fn kf_cache() -> &'static Mutex<HashMap<usize, Arc<(KFMatrix, KFMatrix)>>> {
    static C: OnceLock<Mutex<HashMap<usize, Arc<(KFMatrix, KFMatrix)>>>> = OnceLock::new();
    C.get_or_init(Default::default)
}

/// `(K(t), K(t)^{-1})` for partitions of `n`; memoized per process.
pub fn kostka_foulkes_matrix(n: usize) -> Result<Arc<(KFMatrix, KFMatrix)>> {
    if let Some(v) = kf_cache().lock().unwrap().get(&n) {
        return Ok(v.clone());
    }
    let cols: Vec<(Partition, SymFun<PolyQT>)> =
        enumerate(n).into_par_iter().map(|mu| hl_h(&mu).map(|h| (mu, h))).collect::<Result<_>>()?;
    let k = PartitionMatrix::from_columns(n, &cols.into_iter().collect());
    let inv = k.unitriangular_inverse()?;
    let v = Arc::new((k, inv));
    kf_cache().lock().unwrap().insert(n, v.clone());
    Ok(v)
}

/// `Σ_T t^{charge(T)}` over semistandard tableaux of shape `λ` and content `μ`.
pub fn charge_oracle(lambda: &Partition, mu: &Partition) -> PolyQT {
    let mut out = PolyQT::zero();
    if lambda.size() != mu.size() {
        return out;
    }
    for chain in tableau_chains(lambda, mu) {
        let c = charge(&reading_word(&chain)) as i32;
        out = &out + &PolyQT::qt_pow(0, c);
    }
    out
}

/// Chains `∅ = λ⁰ ⊂ λ¹ ⊂ … = λ` with horizontal strips of sizes `μ_i`.
fn tableau_chains(lambda: &Partition, mu: &Partition) -> Vec<Vec<Partition>> {
    let mut chains = vec![vec![Partition::empty()]];
    for &m in mu.parts() {
        let mut next = Vec::new();
        for ch in chains {
            for sh in horizontal_strips(ch.last().unwrap(), m) {
                if lambda.contains(&sh) {
                    let mut c = ch.clone();
                    c.push(sh);
                    next.push(c);
                }
            }
        }
        chains = next;
    }
    chains.retain(|c| c.last() == Some(lambda));
    chains
}

/// Rows from top to bottom, each left to right.
fn reading_word(chain: &[Partition]) -> Vec<usize> {
    let shape = chain.last().unwrap();
    let mut rows: Vec<Vec<usize>> = vec![vec![0; 0]; shape.len()];
    for r in 0..shape.len() {
        rows[r] = vec![0; shape[r]];
    }
    for (letter, w) in chain.windows(2).enumerate() {
        for (r, row) in rows.iter_mut().enumerate() {
            for cell in row.iter_mut().take(w[1][r]).skip(w[0][r]) {
                *cell = letter + 1;
            }
        }
    }
    rows.into_iter().rev().flatten().collect()
}

/// Charge of a word with partition content.
pub fn charge(word: &[usize]) -> usize {
    let mut w: Vec<Option<usize>> = word.iter().map(|&x| Some(x)).collect();
    let mut total = 0;
    while w.iter().any(|x| x.is_some()) {
        let top = w.iter().flatten().copied().max().unwrap();
        let mut pos = (0..w.len()).rev().find(|&i| w[i] == Some(1)).expect("partition content");
        w[pos] = None;
        let mut idx = 0;
        for r in 2..=top {
            let left = (0..pos).rev().find(|&i| w[i] == Some(r));
            pos = match left {
                Some(p) => p,
                None => {
                    idx += 1;
                    (pos + 1..w.len()).rev().find(|&i| w[i] == Some(r)).expect("partition content")
                }
            };
            total += idx;
            w[pos] = None;
        }
    }
    total
}

/// Kostka-Foulkes matrix assembled from the charge statistic.
pub fn charge_matrix(n: usize) -> KFMatrix {
    let mut m = PartitionMatrix::zero(n);
    for lam in enumerate(n) {
        for mu in enumerate(n) {
            m.set(lam.clone(), mu.clone(), charge_oracle(&lam, &mu));
        }
    }
    m
}
