//! Integer transition data between the classical bases, cached per degree.
//!
//! Caches are append-only maps behind `RwLock`s, so the tables can be shared
//! freely between threads.

use std::collections::{BTreeMap, HashMap};
use std::sync::{Arc, OnceLock, RwLock};

use num_bigint::BigInt;

use crate::partitions::{enumerate, Composition, Partition};

/// Transition matrices for one degree `n`, indexed by [`enumerate`] order.
pub struct DegreeTables {
    pub parts: Vec<Partition>,
    pub index: HashMap<Partition, usize>,
    /// `kostka[λ][μ]`: number of SSYT of shape λ and content μ, so that
    /// `s_λ = Σ_μ K_λμ m_μ` and `h_μ = Σ_λ K_λμ s_λ`.
    pub kostka: Vec<Vec<i64>>,
    pub kostka_inv: Vec<Vec<i64>>,
    /// `chars[λ][ρ] = χ^λ(ρ)`, so that `p_ρ = Σ_λ χ^λ(ρ) s_λ`.
    pub chars: Vec<Vec<i64>>,
    pub z: Vec<BigInt>,
}

impl DegreeTables {
    fn build(n: usize) -> Self {
        let parts = enumerate(n);
        let index: HashMap<Partition, usize> = parts.iter().cloned().enumerate().map(|(i, p)| (p, i)).collect();
        let d = parts.len();
        let mut kostka = vec![vec![0i64; d]; d];
        let mut chars = vec![vec![0i64; d]; d];
        for (j, mu) in parts.iter().enumerate() {
            for (lam, c) in h_product_in_s(&Partition::empty(), mu.parts()) {
                kostka[index[&lam]][j] = c;
            }
            let mut cur: BTreeMap<Partition, i64> = BTreeMap::from([(Partition::empty(), 1)]);
            for &k in mu.parts() {
                let mut next = BTreeMap::new();
                for (lam, c) in &cur {
                    for (nu, sign) in add_border_strips(lam, k) {
                        *next.entry(nu).or_insert(0) += c * sign;
                    }
                }
                next.retain(|_, v| *v != 0);
                cur = next;
            }
            for (lam, c) in cur {
                chars[index[&lam]][j] = c;
            }
        }
        let kostka_inv = unitriangular_inverse(&kostka);
        let z = parts.iter().map(|p| p.z()).collect();
        DegreeTables { parts, index, kostka, kostka_inv, chars, z }
    }

    pub fn idx(&self, p: &Partition) -> usize {
        self.index[p]
    }
}

/// Inverse of an upper unitriangular integer matrix.
fn unitriangular_inverse(k: &[Vec<i64>]) -> Vec<Vec<i64>> {
    let d = k.len();
    let mut x = vec![vec![0i64; d]; d];
    for j in 0..d {
        x[j][j] = 1;
        for i in (0..j).rev() {
            let s: i64 = (i + 1..=j).map(|m| k[i][m] * x[m][j]).sum();
            x[i][j] = -s;
        }
    }
    x
}

static TABLES: OnceLock<RwLock<HashMap<usize, Arc<DegreeTables>>>> = OnceLock::new();

pub fn tables(n: usize) -> Arc<DegreeTables> {
    let lock = TABLES.get_or_init(Default::default);
    if let Some(t) = lock.read().unwrap().get(&n) {
        return t.clone();
    }
    let built = Arc::new(DegreeTables::build(n));
    lock.write().unwrap().entry(n).or_insert(built).clone()
}

/// Partitions `ν ⊇ λ` with `ν/λ` a horizontal strip of `k` cells.
pub fn horizontal_strips(lambda: &Partition, k: usize) -> Vec<Partition> {
    fn go(lam: &[usize], i: usize, left: usize, cur: &mut Vec<usize>, out: &mut Vec<Partition>) {
        let li = lam.get(i).copied().unwrap_or(0);
        if i >= lam.len() {
            // New row below the last one, bounded by the row above.
            let cap = if i == 0 { usize::MAX } else { lam[i - 1] };
            if left <= cap {
                let mut v = cur.clone();
                v.push(left);
                out.push(Partition::from_unsorted(v));
            }
            return;
        }
        let cap = if i == 0 { left } else { (lam[i - 1] - li).min(left) };
        for a in 0..=cap {
            cur.push(li + a);
            go(lam, i + 1, left - a, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(lambda.parts(), 0, k, &mut Vec::new(), &mut out);
    out
}

/// Partitions `ν ⊇ λ` with `ν/λ` a vertical strip of `k` cells.
pub fn vertical_strips(lambda: &Partition, k: usize) -> Vec<Partition> {
    horizontal_strips(&lambda.conjugate(), k).iter().map(|p| p.conjugate()).collect()
}

/// `s_λ · h_α` in the Schur basis by iterated Pieri.
pub fn h_product_in_s(lambda: &Partition, alpha: &[usize]) -> BTreeMap<Partition, i64> {
    let mut cur = BTreeMap::from([(lambda.clone(), 1i64)]);
    for &k in alpha {
        let mut next = BTreeMap::new();
        for (lam, c) in &cur {
            for nu in horizontal_strips(lam, k) {
                *next.entry(nu).or_insert(0) += c;
            }
        }
        cur = next;
    }
    cur
}

/// Border strips of size `k` added to `λ`, with sign `(-1)^(height)`.
pub fn add_border_strips(lambda: &Partition, k: usize) -> Vec<(Partition, i64)> {
    let l = lambda.len() + k;
    let beta: Vec<usize> = (0..l).map(|i| lambda[i] + l - 1 - i).collect();
    let mut out = Vec::new();
    for i in 0..l {
        let b = beta[i] + k;
        if beta.contains(&b) {
            continue;
        }
        let between = beta.iter().filter(|&&x| x > beta[i] && x < b).count();
        let mut nb = beta.clone();
        nb[i] = b;
        nb.sort_unstable_by(|a, b| b.cmp(a));
        let parts: Vec<usize> = nb.iter().enumerate().map(|(j, &x)| x - (l - 1 - j)).collect();
        let sign = if between % 2 == 0 { 1 } else { -1 };
        out.push((Partition::from_unsorted(parts), sign));
    }
    out
}

/// Jacobi-Trudi expansion of `s_{λ/μ}` as a signed sum of products
/// `h_α`; keys are weakly decreasing multisets of positive indices.
pub fn jacobi_trudi(lambda: &Partition, mu: &Partition) -> BTreeMap<Partition, i64> {
    let l = lambda.len();
    if !lambda.contains(mu) {
        return BTreeMap::new();
    }
    // entry(i, j) = λ_i - μ_j - i + j, as a signed integer.
    let entry = |i: usize, j: usize| lambda[i] as i64 - mu[j] as i64 - i as i64 + j as i64;
    let mut memo: HashMap<u32, BTreeMap<Vec<usize>, i64>> = HashMap::new();
    fn det(
        row: usize,
        used: u32,
        l: usize,
        entry: &dyn Fn(usize, usize) -> i64,
        memo: &mut HashMap<u32, BTreeMap<Vec<usize>, i64>>,
    ) -> BTreeMap<Vec<usize>, i64> {
        if row == l {
            return BTreeMap::from([(Vec::new(), 1)]);
        }
        if let Some(v) = memo.get(&used) {
            return v.clone();
        }
        let mut out: BTreeMap<Vec<usize>, i64> = BTreeMap::new();
        let mut free_before = 0;
        for c in 0..l {
            if used & (1 << c) != 0 {
                continue;
            }
            let e = entry(row, c);
            let sign = if free_before % 2 == 0 { 1 } else { -1 };
            free_before += 1;
            if e < 0 {
                continue;
            }
            let sub = det(row + 1, used | (1 << c), l, entry, memo);
            for (mut key, v) in sub {
                if e > 0 {
                    let pos = key.partition_point(|&x| x >= e as usize);
                    key.insert(pos, e as usize);
                }
                *out.entry(key).or_insert(0) += sign * v;
            }
        }
        out.retain(|_, v| *v != 0);
        memo.insert(used, out.clone());
        out
    }
    det(0, 0, l, &entry, &mut memo)
        .into_iter()
        .map(|(k, v)| (Partition::from_unsorted(k), v))
        .collect()
}

type SkewKey = (Partition, Partition);
static SKEW: OnceLock<RwLock<HashMap<SkewKey, Arc<Vec<(Partition, i64)>>>>> = OnceLock::new();
static LR: OnceLock<RwLock<HashMap<SkewKey, Arc<Vec<(Partition, i64)>>>>> = OnceLock::new();

/// Schur expansion of `s_{λ/μ}`; empty when `μ ⊄ λ`.
pub fn skew_in_s(lambda: &Partition, mu: &Partition) -> Arc<Vec<(Partition, i64)>> {
    let lock = SKEW.get_or_init(Default::default);
    let key = (lambda.clone(), mu.clone());
    if let Some(v) = lock.read().unwrap().get(&key) {
        return v.clone();
    }
    let mut acc: BTreeMap<Partition, i64> = BTreeMap::new();
    if lambda.contains(mu) {
        let d = lambda.size() - mu.size();
        let t = tables(d);
        for (alpha, c) in jacobi_trudi(lambda, mu) {
            let j = t.idx(&alpha);
            for (i, nu) in t.parts.iter().enumerate() {
                let k = t.kostka[i][j];
                if k != 0 {
                    *acc.entry(nu.clone()).or_insert(0) += c * k;
                }
            }
        }
    }
    let v: Vec<(Partition, i64)> = acc.into_iter().filter(|(_, c)| *c != 0).rev().collect();
    let v = Arc::new(v);
    lock.write().unwrap().insert(key, v.clone());
    v
}

/// Littlewood-Richardson product `s_μ · s_ν`, via Jacobi-Trudi for the
/// smaller factor and iterated Pieri.
pub fn lr_product(mu: &Partition, nu: &Partition) -> Arc<Vec<(Partition, i64)>> {
    let (a, b) = if (nu.len(), nu) <= (mu.len(), mu) { (mu, nu) } else { (nu, mu) };
    let lock = LR.get_or_init(Default::default);
    let key = (a.clone(), b.clone());
    if let Some(v) = lock.read().unwrap().get(&key) {
        return v.clone();
    }
    let mut acc: BTreeMap<Partition, i64> = BTreeMap::new();
    for (alpha, c) in jacobi_trudi(b, &Partition::empty()) {
        for (lam, k) in h_product_in_s(a, alpha.parts()) {
            *acc.entry(lam).or_insert(0) += c * k;
        }
    }
    let v: Vec<(Partition, i64)> = acc.into_iter().filter(|(_, c)| *c != 0).rev().collect();
    let v = Arc::new(v);
    lock.write().unwrap().insert(key, v.clone());
    v
}

/// Straightens `S_α = det(x_i^(α_j + n - j)) / Δ` to `±s_λ` or zero.
pub fn straighten(alpha: &Composition) -> Option<(i64, Partition)> {
    let n = alpha.len();
    let mut beta: Vec<usize> = alpha.entries.iter().enumerate().map(|(i, &a)| a + n - 1 - i).collect();
    // Sort decreasingly, counting transpositions.
    let mut sign = 1;
    for i in 0..n {
        for j in 0..n - 1 - i {
            if beta[j] < beta[j + 1] {
                beta.swap(j, j + 1);
                sign = -sign;
            } else if beta[j] == beta[j + 1] {
                return None;
            }
        }
    }
    if beta.windows(2).any(|w| w[0] == w[1]) {
        return None;
    }
    let parts = beta.iter().enumerate().map(|(i, &b)| b - (n - 1 - i)).collect();
    Some((sign, Partition::from_unsorted(parts)))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str) -> Partition {
        s.parse().unwrap()
    }

    #[test]
    fn kostka_small() {
        let t = tables(3);
        // order (3), (2,1), (1,1,1)
        assert_eq!(t.kostka, vec![vec![1, 1, 1], vec![0, 1, 2], vec![0, 0, 1]]);
        let prod: Vec<Vec<i64>> = (0..3)
            .map(|i| (0..3).map(|j| (0..3).map(|m| t.kostka[i][m] * t.kostka_inv[m][j]).sum()).collect())
            .collect();
        assert_eq!(prod, vec![vec![1, 0, 0], vec![0, 1, 0], vec![0, 0, 1]]);
    }

    #[test]
    fn character_table_s3() {
        let t = tables(3);
        // rows λ, columns ρ in order (3), (2,1), (1,1,1)
        assert_eq!(t.chars, vec![vec![1, 1, 1], vec![-1, 0, 2], vec![1, -1, 1]]);
    }

    #[test]
    fn column_orthogonality() {
        for n in 1..8 {
            let t = tables(n);
            let d = t.parts.len();
            for a in 0..d {
                for b in 0..d {
                    let s: i64 = (0..d).map(|l| t.chars[l][a] * t.chars[l][b]).sum();
                    let expect = if a == b { i64::try_from(&t.z[a]).unwrap() } else { 0 };
                    assert_eq!(s, expect);
                }
            }
        }
    }

    #[test]
    fn jacobi_trudi_agrees_with_inverse_kostka() {
        for n in 0..8 {
            let t = tables(n);
            for (li, lam) in t.parts.iter().enumerate() {
                let jt = jacobi_trudi(lam, &Partition::empty());
                for (mi, mu) in t.parts.iter().enumerate() {
                    assert_eq!(jt.get(mu).copied().unwrap_or(0), t.kostka_inv[mi][li], "{lam} {mu}");
                }
            }
        }
    }

    #[test]
    fn skew_examples() {
        assert_eq!(*skew_in_s(&p("2,1"), &p("1")), vec![(p("2"), 1), (p("1,1"), 1)]);
        assert_eq!(*skew_in_s(&p("2"), &p("1")), vec![(p("1"), 1)]);
        assert_eq!(*skew_in_s(&p("2,1"), &p("2,1")), vec![(Partition::empty(), 1)]);
        assert!(skew_in_s(&p("2"), &p("1,1")).is_empty());
    }

    #[test]
    fn lr_examples() {
        assert_eq!(*lr_product(&p("1"), &p("1")), vec![(p("2"), 1), (p("1,1"), 1)]);
        let v = lr_product(&p("2,1"), &p("2,1"));
        let c: HashMap<Partition, i64> = v.iter().cloned().collect();
        assert_eq!(c[&p("3,2,1")], 2);
        assert_eq!(c.values().sum::<i64>(), 8);
        assert_eq!(lr_product(&p("2,1"), &p("1")), lr_product(&p("1"), &p("2,1")));
    }

    #[test]
    fn straightening() {
        assert_eq!(straighten(&Composition::new(vec![0, 0])), Some((1, Partition::empty())));
        assert_eq!(straighten(&Composition::new(vec![0, 2])), Some((-1, p("1,1"))));
        assert_eq!(straighten(&Composition::new(vec![1, 2])), None);
    }

    /// Brute-force antisymmetrization of `x^(α+δ)` divided by `x^δ`'s antisymmetrization,
    /// compared through the leading monomial of the alternant.
    #[test]
    fn straightening_matches_alternants() {
        use crate::partitions::next_permutation;
        for n in 1..=4usize {
            let mut alpha = vec![0usize; n];
            loop {
                // Alternant a_{α+δ} as a map exponent -> coefficient.
                let beta: Vec<usize> = (0..n).map(|i| alpha[i] + n - 1 - i).collect();
                let mut alt: BTreeMap<Vec<usize>, i64> = BTreeMap::new();
                let mut perm: Vec<usize> = (0..n).collect();
                loop {
                    let inv = (0..n).flat_map(|i| (i + 1..n).map(move |j| (i, j))).filter(|&(i, j)| perm[i] > perm[j]).count();
                    let e: Vec<usize> = (0..n).map(|i| beta[perm[i]]).collect();
                    *alt.entry(e).or_insert(0) += if inv % 2 == 0 { 1 } else { -1 };
                    if !next_permutation(&mut perm) {
                        break;
                    }
                }
                alt.retain(|_, v| *v != 0);
                match straighten(&Composition::new(alpha.clone())) {
                    None => assert!(alt.is_empty()),
                    Some((s, lam)) => {
                        let lead: Vec<usize> = (0..n).map(|i| lam[i] + n - 1 - i).collect();
                        assert_eq!(alt.get(&lead).copied(), Some(s));
                    }
                }
                // next α in {0..3}^n
                let mut i = 0;
                while i < n && alpha[i] == 3 {
                    alpha[i] = 0;
                    i += 1;
                }
                if i == n {
                    break;
                }
                alpha[i] += 1;
            }
        }
    }
}
