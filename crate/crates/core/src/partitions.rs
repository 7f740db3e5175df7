//! Integer partitions and compositions.
//!
//! Diagrams use the French convention: row `i` (0-based, bottom row first)
//! has `parts[i]` cells. The arm of a cell counts cells strictly east of it,
//! the leg counts cells strictly north of it.

use std::cmp::Ordering;
use std::fmt;
use std::ops::Index;
use std::str::FromStr;

use num_bigint::BigInt;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};
use crate::ring::PolyQT;

#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct Partition {
    parts: Vec<usize>,
}

impl Partition {
    /// Builds a partition from weakly decreasing positive parts. Trailing
    /// zeros are dropped.
    pub fn new(mut parts: Vec<usize>) -> Result<Self> {
        while parts.last() == Some(&0) {
            parts.pop();
        }
        if parts.windows(2).any(|w| w[0] < w[1]) || parts.contains(&0) {
            return Err(Error::Parse { pos: 0, msg: format!("not a partition: {parts:?}") });
        }
        Ok(Partition { parts })
    }

    /// Sorts and drops zeros.
    pub fn from_unsorted(mut parts: Vec<usize>) -> Self {
        parts.retain(|&p| p > 0);
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Partition { parts }
    }

    pub fn empty() -> Self {
        Partition { parts: Vec::new() }
    }

    /// The one-row partition `(n)`, empty for `n = 0`.
    pub fn row(n: usize) -> Self {
        Self::from_unsorted(vec![n])
    }

    /// The one-column partition `(1^n)`.
    pub fn column(n: usize) -> Self {
        Partition { parts: vec![1; n] }
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    pub fn size(&self) -> usize {
        self.parts.iter().sum()
    }

    /// Number of rows.
    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    pub fn conjugate(&self) -> Partition {
        let w = self.parts.first().copied().unwrap_or(0);
        let parts = (0..w).map(|j| self.parts.iter().filter(|&&p| p > j).count()).collect();
        Partition { parts }
    }

    pub fn contains(&self, inner: &Partition) -> bool {
        inner.len() <= self.len() && inner.parts.iter().zip(&self.parts).all(|(a, b)| a <= b)
    }

    /// Cells as (row, column) pairs, 0-based.
    pub fn cells(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.parts.iter().enumerate().flat_map(|(i, &p)| (0..p).map(move |j| (i, j)))
    }

    pub fn arm(&self, i: usize, j: usize) -> usize {
        self[i] - j - 1
    }

    pub fn leg(&self, i: usize, j: usize) -> usize {
        self.parts.iter().filter(|&&p| p > j).count() - i - 1
    }

    pub fn hook_length(&self, i: usize, j: usize) -> usize {
        self.arm(i, j) + self.leg(i, j) + 1
    }

    /// Number of standard tableaux, by the hook length formula.
    pub fn standard_tableaux(&self) -> BigInt {
        let num = (1..=self.size()).fold(BigInt::from(1), |a, k| a * k);
        let den = self.cells().fold(BigInt::from(1), |a, (i, j)| a * self.hook_length(i, j));
        num / den
    }

    /// `(h_λ(q,t), h'_λ(q,t))`: the products of `1 - q^a t^(l+1)` and
    /// `1 - q^(a+1) t^l` over all cells.
    pub fn hook_products(&self) -> (PolyQT, PolyQT) {
        let conj = self.conjugate();
        let mut h = PolyQT::one();
        let mut hp = PolyQT::one();
        for (i, j) in self.cells() {
            let a = (self[i] - j - 1) as i32;
            let l = (conj[j] - i - 1) as i32;
            h = &h * &PolyQT::one_minus(a, l + 1);
            hp = &hp * &PolyQT::one_minus(a + 1, l);
        }
        (h, hp)
    }

    /// `n(μ) = Σ (i-1) μ_i`.
    pub fn n_stat(&self) -> usize {
        self.parts.iter().enumerate().map(|(i, p)| i * p).sum()
    }

    /// `μ + 1^k`: prepends a column of length `k`.
    pub fn add_column(&self, k: usize) -> Result<Partition> {
        if self.len() > k {
            return Err(Error::LengthExceedsK { partition: self.to_string(), k });
        }
        let parts = (0..k).map(|i| self[i] + 1).collect();
        Ok(Partition { parts })
    }

    /// `(k, μ)`: prepends a row of length `k`.
    pub fn add_row(&self, k: usize) -> Result<Partition> {
        if self.parts.first().copied().unwrap_or(0) > k {
            return Err(Error::LengthExceedsK { partition: self.conjugate().to_string(), k });
        }
        let mut parts = vec![k];
        parts.extend_from_slice(&self.parts);
        Partition::new(parts)
    }

    /// Dominance order: `self >= other` when every partial sum of `self` is at
    /// least the matching partial sum of `other`.
    pub fn dominates(&self, other: &Partition) -> bool {
        if self.size() != other.size() {
            return false;
        }
        let (mut a, mut b) = (0, 0);
        for i in 0..self.len().max(other.len()) {
            a += self[i];
            b += other[i];
            if a < b {
                return false;
            }
        }
        true
    }

    /// `z_λ = Π i^(m_i) m_i!`.
    pub fn z(&self) -> BigInt {
        let mut z = BigInt::from(1);
        let mut i = 0;
        while i < self.len() {
            let p = self.parts[i];
            let mut m = 0;
            while i < self.len() && self.parts[i] == p {
                m += 1;
                i += 1;
                z *= p * m;
            }
        }
        z
    }

    /// Partitions contained in `self`, in no particular order.
    pub fn subpartitions(&self) -> Vec<Partition> {
        fn go(outer: &[usize], i: usize, bound: usize, cur: &mut Vec<usize>, out: &mut Vec<Partition>) {
            out.push(Partition { parts: cur.clone() });
            if i >= outer.len() {
                return;
            }
            for v in 1..=outer[i].min(bound) {
                cur.push(v);
                go(outer, i + 1, v, cur, out);
                cur.pop();
            }
        }
        let mut out = Vec::new();
        go(&self.parts, 0, usize::MAX, &mut Vec::new(), &mut out);
        out
    }

    /// Adds one to part `i` (possibly creating a new row); `None` if the
    /// result is not a partition.
    pub fn add_cell(&self, i: usize) -> Option<Partition> {
        if i > self.len() || (i > 0 && self[i - 1] == self[i]) {
            return None;
        }
        let mut parts = self.parts.clone();
        if i == self.len() {
            parts.push(1);
        } else {
            parts[i] += 1;
        }
        Some(Partition { parts })
    }
}

/// All partitions of `n`, in reverse lexicographic order:
/// `(3), (2,1), (1,1,1)`.
pub fn enumerate(n: usize) -> Vec<Partition> {
    fn go(n: usize, max: usize, cur: &mut Vec<usize>, out: &mut Vec<Partition>) {
        if n == 0 {
            out.push(Partition { parts: cur.clone() });
            return;
        }
        for p in (1..=n.min(max)).rev() {
            cur.push(p);
            go(n - p, p, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(n, n, &mut Vec::new(), &mut out);
    out
}

/// True when `λ/μ` is a vertical strip of `k` cells.
pub fn is_vertical_strip(lambda: &Partition, mu: &Partition, k: usize) -> bool {
    lambda.contains(mu)
        && lambda.size() == mu.size() + k
        && (0..lambda.len()).all(|i| lambda[i] - mu[i] <= 1)
}

/// True when `λ/μ` is a horizontal strip (no two cells in one column).
pub fn is_horizontal_strip(lambda: &Partition, mu: &Partition) -> bool {
    lambda.contains(mu) && (0..lambda.len()).all(|i| i == 0 || mu[i - 1] >= lambda[i])
}

impl Index<usize> for Partition {
    type Output = usize;

    fn index(&self, i: usize) -> &usize {
        self.parts.get(i).unwrap_or(&0)
    }
}

/// Graded: first by size, then lexicographically. Within a degree the
/// descending order is the enumeration order of [`enumerate`].
impl Ord for Partition {
    fn cmp(&self, o: &Self) -> Ordering {
        self.size().cmp(&o.size()).then_with(|| self.parts.cmp(&o.parts))
    }
}

impl PartialOrd for Partition {
    fn partial_cmp(&self, o: &Self) -> Option<Ordering> {
        Some(self.cmp(o))
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.parts.is_empty() {
            return write!(f, "-");
        }
        let s: Vec<String> = self.parts.iter().map(|p| p.to_string()).collect();
        write!(f, "{}", s.join(","))
    }
}

impl fmt::Debug for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({self})")
    }
}

impl FromStr for Partition {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        if s == "-" || s.is_empty() {
            return Ok(Partition::empty());
        }
        let mut parts = Vec::new();
        let mut pos = 0;
        for piece in s.split(',') {
            let v: usize = piece.trim().parse().map_err(|_| Error::Parse {
                pos,
                msg: format!("bad part '{piece}'"),
            })?;
            if v == 0 {
                return Err(Error::Parse { pos, msg: "parts must be positive".into() });
            }
            parts.push(v);
            pos += piece.len() + 1;
        }
        if parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::Parse { pos: 0, msg: "parts must be weakly decreasing".into() });
        }
        Ok(Partition { parts })
    }
}

impl Serialize for Partition {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_string())
    }
}

impl<'de> Deserialize<'de> for Partition {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(d)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

impl From<&[usize]> for Partition {
    fn from(p: &[usize]) -> Self {
        Partition::from_unsorted(p.to_vec())
    }
}

/// A finite sequence of nonnegative integers; order matters.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Composition {
    pub entries: Vec<usize>,
}

impl Composition {
    pub fn new(entries: Vec<usize>) -> Self {
        Composition { entries }
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn support(&self) -> impl Iterator<Item = usize> + '_ {
        self.entries.iter().enumerate().filter(|(_, &e)| e != 0).map(|(i, _)| i)
    }

    /// All distinct rearrangements of `λ` padded with zeros to length `n`.
    pub fn rearrangements(lambda: &Partition, n: usize) -> Vec<Composition> {
        let mut v: Vec<usize> = (0..n).map(|i| lambda[i]).collect();
        v.sort_unstable();
        let mut out = vec![Composition::new(v.clone())];
        while next_permutation(&mut v) {
            out.push(Composition::new(v.clone()));
        }
        out
    }
}

/// Lexicographic successor; false when `v` is already the last permutation.
pub(crate) fn next_permutation(v: &mut [usize]) -> bool {
    if v.len() < 2 {
        return false;
    }
    let mut i = v.len() - 1;
    while i > 0 && v[i - 1] >= v[i] {
        i -= 1;
    }
    if i == 0 {
        return false;
    }
    let mut j = v.len() - 1;
    while v[j] <= v[i - 1] {
        j -= 1;
    }
    v.swap(i - 1, j);
    v[i..].reverse();
    true
}

impl fmt::Display for Composition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s: Vec<String> = self.entries.iter().map(|p| p.to_string()).collect();
        write!(f, "[{}]", s.join(","))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn p(s: &str) -> Partition {
        s.parse().unwrap()
    }
    fn poly(s: &str) -> PolyQT {
        s.parse().unwrap()
    }

    #[test]
    fn conjugates() {
        assert_eq!(p("2,1").conjugate(), p("2,1"));
        assert_eq!(p("3").conjugate(), p("1,1,1"));
        assert_eq!(p("4,2,1").conjugate(), p("3,2,1,1"));
        assert_eq!(p("-").conjugate(), p("-"));
    }

    #[test]
    fn hook_product_values() {
        assert_eq!(p("1").hook_products(), (poly("1 - t"), poly("1 - q")));
        assert_eq!(p("-").hook_products(), (PolyQT::one(), PolyQT::one()));
        let (h, hp) = p("2,1").hook_products();
        assert_eq!(h, &poly("1 - q*t^2") * &poly("1 - t").pow(2));
        assert_eq!(hp, &poly("1 - q^2*t") * &poly("1 - q").pow(2));
    }

    #[test]
    fn n_statistic() {
        assert_eq!(p("5").n_stat(), 0);
        assert_eq!(p("1,1").n_stat(), 1);
        assert_eq!(p("3,2,1").n_stat(), 4);
    }

    #[test]
    fn column_adding() {
        assert_eq!(p("-").add_column(2).unwrap(), p("1,1"));
        assert_eq!(p("1").add_column(1).unwrap(), p("2"));
        assert_eq!(p("2,1").add_column(3).unwrap(), p("3,2,1"));
        assert!(matches!(p("1,1").add_column(1), Err(Error::LengthExceedsK { .. })));
        assert_eq!(p("2,1").add_row(2).unwrap(), p("2,2,1"));
    }

    #[test]
    fn enumeration() {
        assert_eq!(enumerate(0), vec![Partition::empty()]);
        assert_eq!(enumerate(3), vec![p("3"), p("2,1"), p("1,1,1")]);
        assert_eq!(enumerate(6).len(), 11);
        assert_eq!(enumerate(10).len(), 42);
        for n in 0..8 {
            let e = enumerate(n);
            assert!(e.windows(2).all(|w| w[0] > w[1]));
        }
    }

    #[test]
    fn vertical_strips() {
        assert!(is_vertical_strip(&p("2,1"), &p("1,1"), 1));
        assert!(!is_vertical_strip(&p("3,1"), &p("1,1"), 2));
        for n in 0..6 {
            for mu in enumerate(n) {
                for k in mu.len()..mu.len() + 3 {
                    assert!(is_vertical_strip(&mu.add_column(k).unwrap(), &mu, k));
                }
            }
        }
    }

    #[test]
    fn serialization() {
        assert_eq!(p("3,2,1").to_string(), "3,2,1");
        assert_eq!(Partition::empty().to_string(), "-");
        assert!("2,3".parse::<Partition>().is_err());
        assert!("2,x".parse::<Partition>().is_err());
        let j = serde_json::to_string(&p("2,2")).unwrap();
        assert_eq!(j, "\"2,2\"");
        assert_eq!(serde_json::from_str::<Partition>(&j).unwrap(), p("2,2"));
    }

    #[test]
    fn z_values() {
        assert_eq!(p("2").z(), BigInt::from(2));
        assert_eq!(p("1,1,1").z(), BigInt::from(6));
        assert_eq!(p("2,1,1").z(), BigInt::from(4));
        assert_eq!(p("-").z(), BigInt::from(1));
    }

    #[test]
    fn rearrangement_counts() {
        assert_eq!(Composition::rearrangements(&p("1"), 3).len(), 3);
        assert_eq!(Composition::rearrangements(&p("2,1"), 3).len(), 6);
        assert_eq!(Composition::rearrangements(&p("-"), 3).len(), 1);
    }

    #[test]
    fn dominance_is_refined_by_enumeration() {
        for n in 0..9 {
            let e = enumerate(n);
            for (i, a) in e.iter().enumerate() {
                for b in &e[i + 1..] {
                    assert!(!b.dominates(a) || a == b);
                }
            }
        }
    }

    #[test]
    fn invariants_up_to_ten() {
        for n in 0..=10 {
            for mu in enumerate(n) {
                assert_eq!(mu.conjugate().conjugate(), mu);
                let c = mu.conjugate();
                let s: usize = c.parts().iter().map(|m| m * m.saturating_sub(1) / 2).sum();
                assert_eq!(mu.n_stat(), s);
            }
        }
    }

    #[test]
    fn hook_products_at_q_equal_t() {
        let tv = crate::ring::RatQT::from_poly(PolyQT::t());
        for n in 0..6 {
            for mu in enumerate(n) {
                let (h, hp) = mu.hook_products();
                let expect = mu
                    .cells()
                    .fold(PolyQT::one(), |acc, (i, j)| &acc * &PolyQT::one_minus(0, mu.hook_length(i, j) as i32));
                let e = crate::ring::RatQT::from_poly(expect);
                assert_eq!(crate::ring::specialize(&h, &tv, &tv).unwrap(), e);
                assert_eq!(crate::ring::specialize(&hp, &tv, &tv).unwrap(), e);
            }
        }
    }

    proptest! {
        #[test]
        fn add_column_conjugate(n in 0usize..=8, pick in 0usize..1000, extra in 0usize..3) {
            let all = enumerate(n);
            let mu = &all[pick % all.len()];
            let k = mu.len() + extra;
            prop_assume!(k >= 1);
            let lhs = mu.add_column(k).unwrap().conjugate();
            let mut expect = vec![k];
            expect.extend_from_slice(mu.conjugate().parts());
            prop_assert_eq!(lhs.parts(), &expect[..]);
        }
    }
}
