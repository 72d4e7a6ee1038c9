//! The coefficient-ring abstraction shared by every algebra in the crate.

use std::fmt::{Debug, Display};

use crate::exact::Rational;

/// A commutative unital Q-algebra with exact arithmetic.
///
/// Everything here is an algebra over the rationals: the base field itself,
/// the symbolic polynomial ring Q[PI2, L], truncated Laurent series over
/// either, and linear combinations of Hopf-algebra basis elements. Methods
/// take references; values are immutable.
pub trait Ring: Clone + PartialEq + Debug + Display {
    fn zero() -> Self;
    fn one() -> Self;
    fn from_rational(q: &Rational) -> Self;
    fn is_zero(&self) -> bool;
    fn add(&self, rhs: &Self) -> Self;
    fn neg(&self) -> Self;
    fn mul(&self, rhs: &Self) -> Self;

    fn sub(&self, rhs: &Self) -> Self {
        self.add(&rhs.neg())
    }

    fn scale(&self, q: &Rational) -> Self {
        self.mul(&Self::from_rational(q))
    }

    /// Multiplicative inverse, when one exists in the ring.
    fn inverse(&self) -> Option<Self>;
}
