//! Rational functions in `q, t`.

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::gcd::gcd;
use super::poly::{Mono, PolyQT};
use crate::error::{Error, Result};

/// Quotient `num / den` of Laurent polynomials, kept in lowest terms.
///
/// Canonical form: the fraction is fully reduced, `den` has no monomial
/// factor, and the leading coefficient of `den` is positive. Equality is
/// decided by cross-multiplication.
#[derive(Clone)]
pub struct RatQT {
    num: PolyQT,
    den: PolyQT,
}

impl RatQT {
    pub fn zero() -> Self {
        RatQT { num: PolyQT::zero(), den: PolyQT::one() }
    }

    pub fn one() -> Self {
        RatQT { num: PolyQT::one(), den: PolyQT::one() }
    }

    pub fn from_poly(p: PolyQT) -> Self {
        RatQT { num: p, den: PolyQT::one() }
    }

    pub fn from_int(n: i64) -> Self {
        Self::from_poly(PolyQT::constant(n))
    }

    /// `n / d` for integers.
    pub fn from_ratio(n: &BigInt, d: &BigInt) -> Result<Self> {
        Self::new(PolyQT::from_bigint(n.clone()), PolyQT::from_bigint(d.clone()))
    }

    pub fn new(num: PolyQT, den: PolyQT) -> Result<Self> {
        rat_reduce(num, den)
    }

    pub fn num(&self) -> &PolyQT {
        &self.num
    }

    pub fn den(&self) -> &PolyQT {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.num.is_one() && self.den.is_one()
    }

    /// True when the denominator is 1 (the value is a Laurent polynomial).
    pub fn is_polynomial(&self) -> bool {
        self.den.is_one()
    }

    pub fn to_poly(&self) -> Option<PolyQT> {
        self.is_polynomial().then(|| self.num.clone())
    }

    pub fn neg(&self) -> Self {
        RatQT { num: -&self.num, den: self.den.clone() }
    }

    pub fn add(&self, o: &Self) -> Self {
        self.combine(o, false)
    }

    pub fn sub(&self, o: &Self) -> Self {
        self.combine(o, true)
    }

    fn combine(&self, o: &Self, negate: bool) -> Self {
        if o.is_zero() {
            return self.clone();
        }
        if self.is_zero() {
            return if negate { o.neg() } else { o.clone() };
        }
        let op = |a: &PolyQT, b: &PolyQT| if negate { a - b } else { a + b };
        if self.den == o.den {
            return reduce_unchecked(op(&self.num, &o.num), self.den.clone());
        }
        // Sum over the lcm of the two denominators.
        let g = gcd(&self.den, &o.den);
        let a = self.den.div_exact(&g).expect("gcd divides");
        let b = o.den.div_exact(&g).expect("gcd divides");
        let num = op(&(&self.num * &b), &(&o.num * &a));
        reduce_unchecked(num, &a * &o.den)
    }

    pub fn mul(&self, o: &Self) -> Self {
        if self.is_zero() || o.is_zero() {
            return Self::zero();
        }
        if self.den.is_one() && o.den.is_one() {
            return RatQT { num: &self.num * &o.num, den: PolyQT::one() };
        }
        let g1 = gcd(&self.num, &o.den);
        let g2 = gcd(&o.num, &self.den);
        let n1 = self.num.div_exact(&g1).expect("gcd divides");
        let d2 = o.den.div_exact(&g1).expect("gcd divides");
        let n2 = o.num.div_exact(&g2).expect("gcd divides");
        let d1 = self.den.div_exact(&g2).expect("gcd divides");
        canonical_sign_and_shift(&n1 * &n2, &d1 * &d2)
    }

    pub fn mul_poly(&self, p: &PolyQT) -> Self {
        self.mul(&Self::from_poly(p.clone()))
    }

    pub fn inv(&self) -> Result<Self> {
        if self.is_zero() {
            return Err(Error::ZeroDenominator);
        }
        Ok(canonical_sign_and_shift(self.den.clone(), self.num.clone()))
    }

    pub fn div(&self, o: &Self) -> Result<Self> {
        Ok(self.mul(&o.inv()?))
    }

    pub fn pow(&self, e: i32) -> Result<Self> {
        let base = if e < 0 { self.inv()? } else { self.clone() };
        let e = e.unsigned_abs();
        Ok(RatQT { num: base.num.pow(e), den: base.den.pow(e) })
    }

    /// `r(q^k, t^k)`.
    pub fn substitute_powers(&self, k: i32) -> Self {
        canonical_sign_and_shift(self.num.substitute_powers(k), self.den.substitute_powers(k))
    }

    /// `r(t, q)`.
    pub fn swap_qt(&self) -> Self {
        canonical_sign_and_shift(self.num.swap_qt(), self.den.swap_qt())
    }

    /// `r(q, 1/t)`.
    pub fn invert_t(&self) -> Self {
        canonical_sign_and_shift(self.num.invert_t(), self.den.invert_t())
    }

    /// Exact evaluation at `q = q_val`, `t = t_val`.
    pub fn specialize(&self, q_val: &RatQT, t_val: &RatQT) -> Result<RatQT> {
        let n = specialize(&self.num, q_val, t_val)?;
        let d = specialize(&self.den, q_val, t_val)?;
        n.div(&d)
    }
}

/// Builds the canonical fraction `num / den`.
///
/// Monomial and integer content always leave the denominator; any
/// polynomial common factor is removed via a full gcd.
pub fn rat_reduce(num: PolyQT, den: PolyQT) -> Result<RatQT> {
    if den.is_zero() {
        return Err(Error::ZeroDenominator);
    }
    Ok(reduce_unchecked(num, den))
}

fn reduce_unchecked(num: PolyQT, den: PolyQT) -> RatQT {
    if num.is_zero() {
        return RatQT::zero();
    }
    if den.is_monomial() {
        let (m, c) = den.terms()[0].clone();
        let g = num.content().gcd(&c);
        let g = if c.is_negative() { -g } else { g };
        let num = num.div_int(&g).expect("content divides").shift(Mono::new(-m.q, -m.t));
        let den = PolyQT::from_bigint(&c / &g);
        return RatQT { num, den };
    }
    let g = gcd(&num, &den);
    let (num, den) = if g.is_one() {
        (num, den)
    } else {
        (num.div_exact(&g).expect("gcd divides"), den.div_exact(&g).expect("gcd divides"))
    };
    canonical_sign_and_shift(num, den)
}

/// Normalizes sign and monomial factor of an already coprime pair.
fn canonical_sign_and_shift(num: PolyQT, den: PolyQT) -> RatQT {
    let m = den.min_exponents();
    let shift = Mono::new(-m.q, -m.t);
    let (mut num, mut den) = (num.shift(shift), den.shift(shift));
    if den.leading().map(|(_, c)| c.is_negative()).unwrap_or(false) {
        num = -num;
        den = -den;
    }
    if den.is_constant() {
        let c = den.as_constant().unwrap();
        let g = num.content().gcd(&c);
        if !g.is_one() && !g.is_zero() {
            num = num.div_int(&g).unwrap();
            den = PolyQT::from_bigint(c / g);
        }
    }
    RatQT { num, den }
}

/// Evaluates a Laurent polynomial at rational-function values of `q` and `t`.
pub fn specialize(p: &PolyQT, q_val: &RatQT, t_val: &RatQT) -> Result<RatQT> {
    let mut acc = RatQT::zero();
    let mut qcache: std::collections::HashMap<i32, RatQT> = Default::default();
    let mut tcache: std::collections::HashMap<i32, RatQT> = Default::default();
    for (m, c) in p.terms() {
        let qp = match qcache.get(&m.q) {
            Some(v) => v.clone(),
            None => {
                let v = q_val.pow(m.q).map_err(|_| Error::PoleAtZero)?;
                qcache.insert(m.q, v.clone());
                v
            }
        };
        let tp = match tcache.get(&m.t) {
            Some(v) => v.clone(),
            None => {
                let v = t_val.pow(m.t).map_err(|_| Error::PoleAtZero)?;
                tcache.insert(m.t, v.clone());
                v
            }
        };
        let term = qp.mul(&tp).mul(&RatQT::from_poly(PolyQT::from_bigint(c.clone())));
        acc = acc.add(&term);
    }
    Ok(acc)
}

impl PartialEq for RatQT {
    fn eq(&self, o: &Self) -> bool {
        if self.den == o.den {
            return self.num == o.num;
        }
        &self.num * &o.den == &o.num * &self.den
    }
}

impl Eq for RatQT {}

impl From<PolyQT> for RatQT {
    fn from(p: PolyQT) -> Self {
        RatQT::from_poly(p)
    }
}

impl fmt::Display for RatQT {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den.is_one() {
            write!(f, "{}", self.num)
        } else {
            write!(f, "({})/({})", self.num, self.den)
        }
    }
}

impl fmt::Debug for RatQT {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "RatQT({self})")
    }
}

impl Default for RatQT {
    fn default() -> Self {
        Self::zero()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str) -> PolyQT {
        s.parse().unwrap()
    }
    fn r(s: &str) -> RatQT {
        s.parse().unwrap()
    }

    #[test]
    fn monomial_content_moves_to_numerator() {
        let x = rat_reduce(p("q^2*t"), p("q*t^2")).unwrap();
        assert_eq!(x.num(), &p("q*t^-1"));
        assert!(x.den().is_one());
    }

    #[test]
    fn integer_content_is_coprime() {
        let x = rat_reduce(p("2 - 2*t"), p("4")).unwrap();
        assert_eq!(x.num(), &p("1 - t"));
        assert_eq!(x.den(), &p("2"));
    }

    #[test]
    fn structural_factor_cancels() {
        let x = rat_reduce(&p("1 - t^2") * &p("q"), p("1 - t")).unwrap();
        assert_eq!(x.num(), &p("q + q*t"));
        assert!(x.den().is_one());
        let y = rat_reduce(p("1"), p("-1 + q")).unwrap();
        assert_eq!(y.den(), &p("q - 1"));
    }

    #[test]
    fn zero_denominator() {
        assert_eq!(rat_reduce(p("1"), PolyQT::zero()).unwrap_err(), Error::ZeroDenominator);
    }

    #[test]
    fn sum_over_common_denominators() {
        let a = r("(1)/(1 - t)");
        let b = r("(t)/(1 - t)");
        assert_eq!(a.sub(&b), RatQT::one());
        let c = r("(1)/(1 - t^2)").add(&r("(t)/(1 - t^2)"));
        assert_eq!(c, r("(1)/(1 - t)"));
        assert_eq!(c.den(), &p("t - 1"));
    }

    #[test]
    fn specialization_examples() {
        let zero = RatQT::zero();
        let tv = RatQT::from_poly(PolyQT::t());
        let qv = RatQT::from_poly(PolyQT::q());
        assert_eq!(specialize(&p("q + t"), &zero, &tv).unwrap(), RatQT::from_poly(p("t")));
        assert_eq!(specialize(&p("1 - q*t"), &tv, &tv).unwrap(), RatQT::from_poly(p("1 - t^2")));
        let tinv = r("(1)/(t)");
        assert_eq!(specialize(&p("t^-1 + q"), &qv, &tinv).unwrap(), RatQT::from_poly(p("t + q")));
        assert_eq!(specialize(&p("t^-1"), &qv, &zero), Err(Error::PoleAtZero));
    }
}
