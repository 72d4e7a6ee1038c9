//! Arbitrary-precision rationals, the base field of every algebra here.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::ring::Ring;

/// Exact rational scalar. Always reduced, denominator positive, zero is 0/1;
/// `num_rational` maintains those invariants on construction.
pub type Rational = BigRational;

/// `p/q` as an exact rational. Panics on a zero denominator.
pub fn rat(p: i64, q: i64) -> Rational {
    BigRational::new(BigInt::from(p), BigInt::from(q))
}

/// Integer as a rational.
pub fn rat_int(n: i64) -> Rational {
    BigRational::from_integer(BigInt::from(n))
}

/// `n!` as a rational.
pub fn factorial(n: u32) -> Rational {
    let mut acc = BigInt::one();
    for k in 2..=n {
        acc *= BigInt::from(k);
    }
    BigRational::from_integer(acc)
}

/// Binomial coefficient `C(n, k)` as a rational.
pub fn binomial(n: u64, k: u64) -> Rational {
    if k > n {
        return Rational::zero();
    }
    let mut acc = BigRational::one();
    for j in 0..k.min(n - k) {
        acc *= BigRational::new(BigInt::from(n - j), BigInt::from(j + 1));
    }
    acc
}

impl Ring for BigRational {
    fn zero() -> Self {
        Zero::zero()
    }

    fn one() -> Self {
        One::one()
    }

    fn from_rational(q: &Rational) -> Self {
        q.clone()
    }

    fn is_zero(&self) -> bool {
        Zero::is_zero(self)
    }

    fn add(&self, rhs: &Self) -> Self {
        self + rhs
    }

    fn neg(&self) -> Self {
        -self
    }

    fn mul(&self, rhs: &Self) -> Self {
        self * rhs
    }

    fn inverse(&self) -> Option<Self> {
        if Zero::is_zero(self) {
            None
        } else {
            Some(self.recip())
        }
    }
}

/// True when the rational is a non-negative integer.
pub(crate) fn is_nonneg_integer(q: &Rational) -> bool {
    q.is_integer() && !q.is_negative()
}
