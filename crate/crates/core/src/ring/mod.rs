//! Exact coefficient arithmetic: big integers, Laurent polynomials in `q,t`,
//! and rational functions in `q,t`.

mod gcd;
mod parse;
mod poly;
mod rat;

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;

pub use gcd::{gcd, normalize};
pub use poly::{Mono, PolyQT};
pub use rat::{rat_reduce, specialize, RatQT};

use crate::error::{Error, Result};

/// Binary operation selector for [`arith`].
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ArithOp {
    Add,
    Sub,
    Mul,
}

pub fn arith(a: &PolyQT, b: &PolyQT, op: ArithOp) -> PolyQT {
    match op {
        ArithOp::Add => a + b,
        ArithOp::Sub => a - b,
        ArithOp::Mul => a * b,
    }
}

pub fn div_exact(a: &PolyQT, b: &PolyQT) -> Result<PolyQT> {
    a.div_exact(b)
}

/// Coefficient ring of symmetric functions and operators.
///
/// Implemented by [`PolyQT`] (integral) and [`RatQT`] (field).
pub trait Coeff:
    Clone + PartialEq + fmt::Debug + fmt::Display + FromStr<Err = Error> + Send + Sync + 'static
{
    fn zero() -> Self;
    fn one() -> Self;
    fn from_int(n: i64) -> Self;
    fn from_poly(p: PolyQT) -> Self;
    fn is_zero(&self) -> bool;
    fn plus(&self, o: &Self) -> Self;
    fn minus(&self, o: &Self) -> Self;
    fn times(&self, o: &Self) -> Self;
    fn negate(&self) -> Self;
    /// Multiplies by `n / d`; `None` when the result leaves the ring.
    fn scale_ratio(&self, n: &BigInt, d: &BigInt) -> Option<Self>;
    fn swap_qt(&self) -> Self;
    fn invert_t(&self) -> Self;
    fn substitute_powers(&self, k: i32) -> Self;
    fn to_rat(&self) -> RatQT;
    fn try_from_rat(r: &RatQT) -> Option<Self>;
    /// Specialization of the parameters; `None` when the result leaves the ring.
    fn specialize(&self, q: &RatQT, t: &RatQT) -> Result<Self> {
        let r = self.to_rat().specialize(q, t)?;
        Self::try_from_rat(&r).ok_or_else(|| Error::NonIntegral(r.to_string()))
    }

    fn accumulate(&mut self, o: &Self) {
        *self = self.plus(o);
    }

    /// Exact division by a nonzero Laurent polynomial.
    fn div_poly(&self, d: &PolyQT) -> Result<Self>;

    fn pow(&self, e: u32) -> Self {
        (0..e).fold(Self::one(), |acc, _| acc.times(self))
    }
}

impl Coeff for PolyQT {
    fn zero() -> Self {
        PolyQT::zero()
    }
    fn one() -> Self {
        PolyQT::one()
    }
    fn from_int(n: i64) -> Self {
        PolyQT::constant(n)
    }
    fn from_poly(p: PolyQT) -> Self {
        p
    }
    fn is_zero(&self) -> bool {
        PolyQT::is_zero(self)
    }
    fn plus(&self, o: &Self) -> Self {
        self + o
    }
    fn minus(&self, o: &Self) -> Self {
        self - o
    }
    fn times(&self, o: &Self) -> Self {
        self * o
    }
    fn negate(&self) -> Self {
        -self
    }
    fn scale_ratio(&self, n: &BigInt, d: &BigInt) -> Option<Self> {
        self.scale(n).div_int(d)
    }
    fn swap_qt(&self) -> Self {
        PolyQT::swap_qt(self)
    }
    fn invert_t(&self) -> Self {
        PolyQT::invert_t(self)
    }
    fn substitute_powers(&self, k: i32) -> Self {
        PolyQT::substitute_powers(self, k)
    }
    fn to_rat(&self) -> RatQT {
        RatQT::from_poly(self.clone())
    }
    fn try_from_rat(r: &RatQT) -> Option<Self> {
        r.to_poly()
    }
    fn div_poly(&self, d: &PolyQT) -> Result<Self> {
        self.div_exact(d)
    }
    fn specialize(&self, q: &RatQT, t: &RatQT) -> Result<Self> {
        let r = specialize(self, q, t)?;
        r.to_poly().ok_or_else(|| Error::NonIntegral(r.to_string()))
    }
}

impl Coeff for RatQT {
    fn zero() -> Self {
        RatQT::zero()
    }
    fn one() -> Self {
        RatQT::one()
    }
    fn from_int(n: i64) -> Self {
        RatQT::from_int(n)
    }
    fn from_poly(p: PolyQT) -> Self {
        RatQT::from_poly(p)
    }
    fn is_zero(&self) -> bool {
        RatQT::is_zero(self)
    }
    fn plus(&self, o: &Self) -> Self {
        self.add(o)
    }
    fn minus(&self, o: &Self) -> Self {
        self.sub(o)
    }
    fn times(&self, o: &Self) -> Self {
        self.mul(o)
    }
    fn negate(&self) -> Self {
        self.neg()
    }
    fn scale_ratio(&self, n: &BigInt, d: &BigInt) -> Option<Self> {
        Some(self.mul(&RatQT::from_ratio(n, d).ok()?))
    }
    fn swap_qt(&self) -> Self {
        RatQT::swap_qt(self)
    }
    fn invert_t(&self) -> Self {
        RatQT::invert_t(self)
    }
    fn substitute_powers(&self, k: i32) -> Self {
        RatQT::substitute_powers(self, k)
    }
    fn to_rat(&self) -> RatQT {
        self.clone()
    }
    fn try_from_rat(r: &RatQT) -> Option<Self> {
        Some(r.clone())
    }
    fn div_poly(&self, d: &PolyQT) -> Result<Self> {
        Ok(self.mul(&RatQT::new(PolyQT::one(), d.clone())?))
    }
}

/// `(a; t)_m = (1 - a)(1 - a t) ... (1 - a t^(m-1))` with `a = q^aq t^at`.
pub fn pochhammer(aq: i32, at: i32, m: usize) -> PolyQT {
    (0..m as i32).fold(PolyQT::one(), |acc, i| &acc * &PolyQT::one_minus(aq, at + i))
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn small_poly() -> impl Strategy<Value = PolyQT> {
        proptest::collection::vec((-2i32..4, -1i32..4, -5i64..6), 0..5).prop_map(|ts| {
            PolyQT::from_terms(ts.into_iter().map(|(a, b, c)| (Mono::new(a, b), BigInt::from(c))).collect())
        })
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(64))]

        #[test]
        fn ring_axioms(a in small_poly(), b in small_poly(), c in small_poly()) {
            prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
            prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
            prop_assert_eq!(&a * &b, &b * &a);
            prop_assert_eq!(&(&a + &b) + &c, &a + &(&b + &c));
        }

        #[test]
        fn exact_division_inverts_multiplication(a in small_poly(), b in small_poly()) {
            prop_assume!(!b.is_zero());
            prop_assert_eq!(div_exact(&arith(&a, &b, ArithOp::Mul), &b).unwrap(), a);
        }

        #[test]
        fn cross_multiplication_equality_is_an_equivalence(a in small_poly(), b in small_poly(), c in small_poly()) {
            prop_assume!(!b.is_zero() && !c.is_zero());
            let x = rat_reduce(a.clone(), b.clone()).unwrap();
            // Same value written over a different denominator.
            let y = RatQT::new(&a * &c, &b * &c).unwrap();
            prop_assert!(x == x.clone());
            prop_assert!(x == y && y == x);
            let z = RatQT::new(&(&a * &c) * &c, &(&b * &c) * &c).unwrap();
            prop_assert!(y == z && x == z);
        }

        #[test]
        fn specialization_is_a_ring_morphism(a in small_poly(), b in small_poly()) {
            let qv: RatQT = "(t)/(1 - t)".parse().unwrap();
            let tv: RatQT = "q^2 + 3".parse().unwrap();
            let lhs = specialize(&(&a * &b), &qv, &tv).unwrap();
            let rhs = specialize(&a, &qv, &tv).unwrap().mul(&specialize(&b, &qv, &tv).unwrap());
            prop_assert_eq!(lhs, rhs);
        }

        #[test]
        fn identity_specialization(a in small_poly()) {
            let qv = RatQT::from_poly(PolyQT::q());
            let tv = RatQT::from_poly(PolyQT::t());
            prop_assert_eq!(specialize(&a, &qv, &tv).unwrap(), RatQT::from_poly(a));
        }

        #[test]
        fn printing_round_trips(a in small_poly()) {
            let s = a.to_string();
            prop_assert_eq!(s.parse::<PolyQT>().unwrap(), a);
        }
    }

    #[test]
    fn pochhammer_convention() {
        assert_eq!(pochhammer(1, 0, 2), &PolyQT::one_minus(1, 0) * &PolyQT::one_minus(1, 1));
        assert_eq!(pochhammer(0, 1, 0), PolyQT::one());
    }
}
