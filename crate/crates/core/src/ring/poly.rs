//! Sparse Laurent polynomials in the two parameters `q` and `t`.

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};

/// Exponent pair `q^q t^t`. Exponents may be negative.
///
/// Ordered graded-lexicographically with `q` before `t`: total degree first,
/// then the `q` exponent.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Mono {
    pub q: i32,
    pub t: i32,
}

impl Mono {
    pub const ONE: Mono = Mono { q: 0, t: 0 };

    pub fn new(q: i32, t: i32) -> Self {
        Mono { q, t }
    }

    pub fn degree(self) -> i32 {
        self.q + self.t
    }

    pub fn mul(self, o: Mono) -> Mono {
        Mono { q: self.q + o.q, t: self.t + o.t }
    }

    pub fn div(self, o: Mono) -> Mono {
        Mono { q: self.q - o.q, t: self.t - o.t }
    }

    fn divides(self, o: Mono) -> bool {
        self.q <= o.q && self.t <= o.t
    }
}

impl Ord for Mono {
    fn cmp(&self, other: &Self) -> Ordering {
        self.degree()
            .cmp(&other.degree())
            .then(self.q.cmp(&other.q))
    }
}

impl PartialOrd for Mono {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Sparse Laurent polynomial in `q, t` with big-integer coefficients.
///
/// Terms are kept sorted in descending term order, with no zero coefficient
/// and no repeated exponent pair. The zero polynomial has no terms.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct PolyQT {
    terms: Vec<(Mono, BigInt)>,
}

impl PolyQT {
    pub fn zero() -> Self {
        PolyQT { terms: Vec::new() }
    }

    pub fn one() -> Self {
        Self::constant(1)
    }

    pub fn constant(c: i64) -> Self {
        Self::monomial(BigInt::from(c), 0, 0)
    }

    pub fn from_bigint(c: BigInt) -> Self {
        Self::monomial(c, 0, 0)
    }

    pub fn monomial(c: BigInt, q: i32, t: i32) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        PolyQT { terms: vec![(Mono::new(q, t), c)] }
    }

    pub fn q() -> Self {
        Self::monomial(BigInt::one(), 1, 0)
    }

    pub fn t() -> Self {
        Self::monomial(BigInt::one(), 0, 1)
    }

    /// `q^a t^b`.
    pub fn qt_pow(a: i32, b: i32) -> Self {
        Self::monomial(BigInt::one(), a, b)
    }

    /// `1 - q^a t^b`, the factor behind every hook product and Pochhammer symbol.
    pub fn one_minus(a: i32, b: i32) -> Self {
        Self::from_terms(vec![(Mono::ONE, BigInt::one()), (Mono::new(a, b), -BigInt::one())])
    }

    /// Builds a polynomial from arbitrary terms, merging repeats and dropping zeros.
    pub fn from_terms(mut terms: Vec<(Mono, BigInt)>) -> Self {
        terms.sort_unstable_by(|a, b| b.0.cmp(&a.0));
        let mut out: Vec<(Mono, BigInt)> = Vec::with_capacity(terms.len());
        for (m, c) in terms {
            match out.last_mut() {
                Some((lm, lc)) if *lm == m => *lc += c,
                _ => {
                    if let Some((_, lc)) = out.last() {
                        if lc.is_zero() {
                            out.pop();
                        }
                    }
                    out.push((m, c));
                }
            }
        }
        if let Some((_, lc)) = out.last() {
            if lc.is_zero() {
                out.pop();
            }
        }
        PolyQT { terms: out }
    }

    pub fn terms(&self) -> &[(Mono, BigInt)] {
        &self.terms
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1 && self.terms[0].0 == Mono::ONE && self.terms[0].1.is_one()
    }

    pub fn is_constant(&self) -> bool {
        self.terms.is_empty() || (self.terms.len() == 1 && self.terms[0].0 == Mono::ONE)
    }

    pub fn is_monomial(&self) -> bool {
        self.terms.len() == 1
    }

    /// Constant term as an integer, if the polynomial is constant.
    pub fn as_constant(&self) -> Option<BigInt> {
        match self.terms.as_slice() {
            [] => Some(BigInt::zero()),
            [(m, c)] if *m == Mono::ONE => Some(c.clone()),
            _ => None,
        }
    }

    pub fn leading(&self) -> Option<&(Mono, BigInt)> {
        self.terms.first()
    }

    pub fn coeff(&self, q: i32, t: i32) -> BigInt {
        let m = Mono::new(q, t);
        self.terms
            .binary_search_by(|(x, _)| m.cmp(x))
            .map(|i| self.terms[i].1.clone())
            .unwrap_or_else(|_| BigInt::zero())
    }

    /// Componentwise minimum exponents; `(0,0)` for zero.
    pub fn min_exponents(&self) -> Mono {
        let mut it = self.terms.iter();
        let Some((first, _)) = it.next() else { return Mono::ONE };
        it.fold(*first, |acc, (m, _)| Mono::new(acc.q.min(m.q), acc.t.min(m.t)))
    }

    /// Componentwise maximum exponents; `(0,0)` for zero.
    pub fn max_exponents(&self) -> Mono {
        let mut it = self.terms.iter();
        let Some((first, _)) = it.next() else { return Mono::ONE };
        it.fold(*first, |acc, (m, _)| Mono::new(acc.q.max(m.q), acc.t.max(m.t)))
    }

    /// True when no exponent is negative.
    pub fn is_polynomial(&self) -> bool {
        let m = self.min_exponents();
        m.q >= 0 && m.t >= 0
    }

    /// True when `q` does not occur.
    pub fn is_free_of_q(&self) -> bool {
        self.terms.iter().all(|(m, _)| m.q == 0)
    }

    pub fn is_free_of_t(&self) -> bool {
        self.terms.iter().all(|(m, _)| m.t == 0)
    }

    /// Gcd of the integer coefficients (nonnegative; zero for the zero polynomial).
    pub fn content(&self) -> BigInt {
        let mut g = BigInt::zero();
        for (_, c) in &self.terms {
            g = g.gcd(c);
            if g.is_one() {
                break;
            }
        }
        g
    }

    pub fn scale(&self, c: &BigInt) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        PolyQT { terms: self.terms.iter().map(|(m, x)| (*m, x * c)).collect() }
    }

    /// Exact division of every coefficient by an integer.
    pub fn div_int(&self, d: &BigInt) -> Option<Self> {
        if d.is_zero() {
            return None;
        }
        let mut out = Vec::with_capacity(self.terms.len());
        for (m, c) in &self.terms {
            let (qq, r) = c.div_rem(d);
            if !r.is_zero() {
                return None;
            }
            out.push((*m, qq));
        }
        Some(PolyQT { terms: out })
    }

    /// Multiplies by the monomial `q^m.q t^m.t`.
    pub fn shift(&self, m: Mono) -> Self {
        PolyQT { terms: self.terms.iter().map(|(x, c)| (x.mul(m), c.clone())).collect() }
    }

    /// Applies an exponent map that may reorder terms.
    fn map_exponents(&self, f: impl Fn(Mono) -> Mono) -> Self {
        Self::from_terms(self.terms.iter().map(|(m, c)| (f(*m), c.clone())).collect())
    }

    /// `p(q^k, t^k)`.
    pub fn substitute_powers(&self, k: i32) -> Self {
        // Scaling both exponents by k > 0 preserves the term order.
        if k > 0 {
            PolyQT {
                terms: self.terms.iter().map(|(m, c)| (Mono::new(m.q * k, m.t * k), c.clone())).collect(),
            }
        } else {
            self.map_exponents(|m| Mono::new(m.q * k, m.t * k))
        }
    }

    /// `p(t, q)`.
    pub fn swap_qt(&self) -> Self {
        self.map_exponents(|m| Mono::new(m.t, m.q))
    }

    /// `p(q, 1/t)`.
    pub fn invert_t(&self) -> Self {
        self.map_exponents(|m| Mono::new(m.q, -m.t))
    }

    /// `p(1/q, t)`.
    pub fn invert_q(&self) -> Self {
        self.map_exponents(|m| Mono::new(-m.q, m.t))
    }

    pub fn pow(&self, e: u32) -> Self {
        let mut acc = Self::one();
        let mut base = self.clone();
        let mut e = e;
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            e >>= 1;
            if e > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    /// Evaluates at integers; negative exponents must meet a nonzero value.
    pub fn eval_int(&self, qv: i64, tv: i64) -> Option<(BigInt, BigInt)> {
        // Returns numerator/denominator of the (rational) value.
        let m = self.min_exponents();
        let shift = Mono::new((-m.q).max(0), (-m.t).max(0));
        if (shift.q > 0 && qv == 0) || (shift.t > 0 && tv == 0) {
            return None;
        }
        let mut num = BigInt::zero();
        let qb = BigInt::from(qv);
        let tb = BigInt::from(tv);
        for (x, c) in &self.terms {
            let s = x.mul(shift);
            num += c * qb.pow(s.q as u32) * tb.pow(s.t as u32);
        }
        let den = qb.pow(shift.q as u32) * tb.pow(shift.t as u32);
        Some((num, den))
    }

    /// Exact quotient `self / b`.
    ///
    /// Fails with [`Error::NotDivisible`] when no Laurent polynomial `c`
    /// satisfies `b * c = self`.
    pub fn div_exact(&self, b: &PolyQT) -> Result<PolyQT> {
        if b.is_zero() {
            return Err(Error::ZeroDenominator);
        }
        if self.is_zero() {
            return Ok(Self::zero());
        }
        if b.is_monomial() {
            let (bm, bc) = &b.terms[0];
            let mut out = Vec::with_capacity(self.terms.len());
            for (m, c) in &self.terms {
                let (qq, r) = c.div_rem(bc);
                if !r.is_zero() {
                    return Err(Error::NotDivisible);
                }
                out.push((m.div(*bm), qq));
            }
            return Ok(PolyQT { terms: out });
        }
        // Move both operands into the polynomial ring with no monomial factor;
        // the quotient of two such polynomials has no monomial factor either.
        let sa = self.min_exponents();
        let sb = b.min_exponents();
        let a0 = self.shift(Mono::new(-sa.q, -sa.t));
        let b0 = b.shift(Mono::new(-sb.q, -sb.t));
        let (blm, blc) = b0.terms[0].clone();
        if !cheap_divisibility_filter(&a0, &b0) {
            return Err(Error::NotDivisible);
        }
        if let Some(r) = dense_div(&a0, &b0) {
            let shift = Mono::new(sa.q - sb.q, sa.t - sb.t);
            return r.map(|p| p.shift(shift));
        }
        let mut rem: BTreeMap<Mono, BigInt> = a0.terms.into_iter().collect();
        let mut quot: Vec<(Mono, BigInt)> = Vec::new();
        while let Some((&lm, lc)) = rem.iter().next_back() {
            if !blm.divides(lm) {
                return Err(Error::NotDivisible);
            }
            let (qc, r) = lc.div_rem(&blc);
            if !r.is_zero() {
                return Err(Error::NotDivisible);
            }
            let qm = lm.div(blm);
            for (m, c) in &b0.terms {
                let key = m.mul(qm);
                let delta = c * &qc;
                let e = rem.entry(key).or_insert_with(BigInt::zero);
                *e -= delta;
                if e.is_zero() {
                    rem.remove(&key);
                }
            }
            quot.push((qm, qc));
        }
        let shift = Mono::new(sa.q - sb.q, sa.t - sb.t);
        Ok(PolyQT::from_terms(quot).shift(shift))
    }
}

const DENSE_CELLS: usize = 1 << 22;

fn small_coeffs(p: &PolyQT) -> Option<(Vec<(Mono, i128)>, u64)> {
    let mut bits = 0;
    let mut out = Vec::with_capacity(p.terms.len());
    for (m, c) in &p.terms {
        bits = bits.max(c.bits());
        out.push((*m, c.to_i128()?));
    }
    Some((out, bits))
}

fn from_dense(grid: Vec<i128>, w: usize, lo: Mono) -> PolyQT {
    let mut terms: Vec<(Mono, BigInt)> = grid
        .into_iter()
        .enumerate()
        .filter(|(_, c)| *c != 0)
        .map(|(i, c)| (Mono::new(lo.q + (i / w) as i32, lo.t + (i % w) as i32), BigInt::from(c)))
        .collect();
    terms.sort_unstable_by(|a, b| b.0.cmp(&a.0));
    PolyQT { terms }
}

/// Product on a dense `i128` grid; `None` when the grid or coefficients are too large.
fn dense_mul(a: &PolyQT, b: &PolyQT) -> Option<PolyQT> {
    if a.terms.len() * b.terms.len() < 64 {
        return None;
    }
    let (ta, ba) = small_coeffs(a)?;
    let (tb, bb) = small_coeffs(b)?;
    let n = a.terms.len().min(b.terms.len()) as u64;
    if ba + bb + (64 - n.leading_zeros() as u64) > 126 {
        return None;
    }
    let (la, ha, lb, hb) = (a.min_exponents(), a.max_exponents(), b.min_exponents(), b.max_exponents());
    let lo = la.mul(lb);
    let h = (ha.q - la.q + hb.q - lb.q + 1) as usize;
    let w = (ha.t - la.t + hb.t - lb.t + 1) as usize;
    if h.checked_mul(w)? > DENSE_CELLS {
        return None;
    }
    let mut grid = vec![0i128; h * w];
    let tb: Vec<(usize, i128)> =
        tb.iter().map(|(m, c)| ((m.q - lb.q) as usize * w + (m.t - lb.t) as usize, *c)).collect();
    for (ma, ca) in &ta {
        let base = (ma.q - la.q) as usize * w + (ma.t - la.t) as usize;
        for (ob, cb) in &tb {
            grid[base + ob] += ca * cb;
        }
    }
    Some(from_dense(grid, w, lo))
}

/// Exact division of polynomials with nonnegative exponents on a dense grid,
/// eliminating in lexicographic order. `None` means fall back (size or overflow).
fn dense_div(a: &PolyQT, b: &PolyQT) -> Option<Result<PolyQT>> {
    let (ta, _) = small_coeffs(a)?;
    let (tb, _) = small_coeffs(b)?;
    let ha = a.max_exponents();
    let h = ha.q as usize + 1;
    let w = ha.t as usize + 1;
    if h.checked_mul(w)? > DENSE_CELLS {
        return None;
    }
    let mut rem = vec![0i128; h * w];
    for (m, c) in &ta {
        rem[m.q as usize * w + m.t as usize] = *c;
    }
    let (blm, blc) = *tb.iter().max_by_key(|(m, _)| (m.q, m.t))?;
    let mut quot = Vec::new();
    for pos in (0..h * w).rev() {
        let c = rem[pos];
        if c == 0 {
            continue;
        }
        let (pq, pt) = ((pos / w) as i32, (pos % w) as i32);
        if pq < blm.q || pt < blm.t || c % blc != 0 {
            return Some(Err(Error::NotDivisible));
        }
        let qc = c / blc;
        let qm = Mono::new(pq - blm.q, pt - blm.t);
        for (m, bc) in &tb {
            let (kq, kt) = (m.q + qm.q, m.t + qm.t);
            if kt < 0 || kt as usize >= w {
                return Some(Err(Error::NotDivisible));
            }
            let cell = &mut rem[kq as usize * w + kt as usize];
            *cell = cell.checked_sub(bc.checked_mul(qc)?)?;
        }
        quot.push((qm, BigInt::from(qc)));
    }
    quot.sort_unstable_by(|x, y| y.0.cmp(&x.0));
    Some(Ok(PolyQT { terms: quot }))
}

/// Compares values at a couple of integer points; a failure proves `b` does
/// not divide `a` as polynomials.
fn cheap_divisibility_filter(a: &PolyQT, b: &PolyQT) -> bool {
    for &(qv, tv) in &[(2i64, 3i64), (-3, 5), (7, -2)] {
        let (an, _) = a.eval_int(qv, tv).expect("nonnegative exponents");
        let (bn, _) = b.eval_int(qv, tv).expect("nonnegative exponents");
        if !bn.is_zero() && !(an % bn).is_zero() {
            return false;
        }
    }
    true
}

fn merge(a: &[(Mono, BigInt)], b: &[(Mono, BigInt)], negate_b: bool) -> PolyQT {
    let mut out = Vec::with_capacity(a.len() + b.len());
    let (mut i, mut j) = (0, 0);
    while i < a.len() && j < b.len() {
        match a[i].0.cmp(&b[j].0) {
            Ordering::Greater => {
                out.push(a[i].clone());
                i += 1;
            }
            Ordering::Less => {
                let c = if negate_b { -&b[j].1 } else { b[j].1.clone() };
                out.push((b[j].0, c));
                j += 1;
            }
            Ordering::Equal => {
                let c = if negate_b { &a[i].1 - &b[j].1 } else { &a[i].1 + &b[j].1 };
                if !c.is_zero() {
                    out.push((a[i].0, c));
                }
                i += 1;
                j += 1;
            }
        }
    }
    out.extend_from_slice(&a[i..]);
    for (m, c) in &b[j..] {
        out.push((*m, if negate_b { -c } else { c.clone() }));
    }
    PolyQT { terms: out }
}

impl Add for &PolyQT {
    type Output = PolyQT;
    fn add(self, o: &PolyQT) -> PolyQT {
        merge(&self.terms, &o.terms, false)
    }
}

impl Sub for &PolyQT {
    type Output = PolyQT;
    fn sub(self, o: &PolyQT) -> PolyQT {
        merge(&self.terms, &o.terms, true)
    }
}

impl Mul for &PolyQT {
    type Output = PolyQT;
    fn mul(self, o: &PolyQT) -> PolyQT {
        if self.is_zero() || o.is_zero() {
            return PolyQT::zero();
        }
        if o.is_monomial() {
            let (m, c) = &o.terms[0];
            return PolyQT { terms: self.terms.iter().map(|(x, y)| (x.mul(*m), y * c)).collect() };
        }
        if self.is_monomial() {
            return o * self;
        }
        if let Some(p) = dense_mul(self, o) {
            return p;
        }
        let mut prods = Vec::with_capacity(self.terms.len() * o.terms.len());
        for (ma, ca) in &self.terms {
            for (mb, cb) in &o.terms {
                prods.push((ma.mul(*mb), ca * cb));
            }
        }
        PolyQT::from_terms(prods)
    }
}

impl Neg for &PolyQT {
    type Output = PolyQT;
    fn neg(self) -> PolyQT {
        PolyQT { terms: self.terms.iter().map(|(m, c)| (*m, -c)).collect() }
    }
}

macro_rules! forward_owned {
    ($tr:ident, $f:ident) => {
        impl $tr for PolyQT {
            type Output = PolyQT;
            fn $f(self, o: PolyQT) -> PolyQT {
                (&self).$f(&o)
            }
        }
        impl $tr<&PolyQT> for PolyQT {
            type Output = PolyQT;
            fn $f(self, o: &PolyQT) -> PolyQT {
                (&self).$f(o)
            }
        }
    };
}
forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

impl Neg for PolyQT {
    type Output = PolyQT;
    fn neg(mut self) -> PolyQT {
        for (_, c) in &mut self.terms {
            *c = -std::mem::take(c);
        }
        self
    }
}

impl fmt::Display for PolyQT {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (i, (m, c)) in self.terms.iter().enumerate() {
            let neg = c.is_negative();
            let abs = c.abs();
            if i == 0 {
                if neg {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {} ", if neg { "-" } else { "+" })?;
            }
            let mono = format_mono(*m);
            match (abs.is_one(), mono.is_empty()) {
                (_, true) => write!(f, "{abs}")?,
                (true, false) => write!(f, "{mono}")?,
                (false, false) => write!(f, "{abs}*{mono}")?,
            }
        }
        Ok(())
    }
}

impl fmt::Debug for PolyQT {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "PolyQT({self})")
    }
}

fn format_mono(m: Mono) -> String {
    let mut parts = Vec::new();
    for (name, e) in [("q", m.q), ("t", m.t)] {
        match e {
            0 => {}
            1 => parts.push(name.to_string()),
            _ => parts.push(format!("{name}^{e}")),
        }
    }
    parts.join("*")
}
