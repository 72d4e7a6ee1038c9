//! Exact arithmetic foundation: rationals, the symbolic coefficient ring
//! Q[PI2, L], univariate rational functions, and Bernoulli/zeta constants.

mod bernoulli;
mod rational;
mod ratfunc;
mod sympoly;

pub use bernoulli::{bernoulli, zeta_nonpositive};
pub use rational::{binomial, factorial, rat, rat_int, Rational};
pub use ratfunc::{Poly, RatFuncError, RationalFunction};
pub use sympoly::{Monomial, SymbolicPoly};
