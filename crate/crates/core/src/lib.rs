//! Exact computer algebra for renormalization over Rota-Baxter algebras.
//!
//! The crate provides, bottom up:
//!
//! - [`exact`]: arbitrary-precision rationals, the polynomial ring Q[PI2, L]
//!   used as a symbolic coefficient ring, univariate rational functions, and
//!   Bernoulli / zeta constants.
//! - [`laurent`]: truncated Laurent series in the regulator `eps` over any
//!   coefficient ring, with the pole-part projection (a Rota-Baxter operator
//!   of weight -1) and truncated `exp`/`log`.
//! - [`trees`]: canonical non-planar rooted forests with grafting, the
//!   subforest coproduct, and the operated-algebra fold.
//! - [`words`]: words over a commutative semigroup with quasi-shuffle,
//!   plain shuffle, and deconcatenation coproduct.
//! - [`hopf`]: the generic connected filtered cograded layer -- convolution,
//!   antipode (recursive and geometric), convolution exp/log, character
//!   tests, and the algebraic Birkhoff decomposition.
//! - [`rota`]: Rota-Baxter carriers and the classical identities: the
//!   Rota-Baxter axiom, Atkinson factorization by fixed-point iteration,
//!   Kingman's identity, the BCH series and recursion, Spitzer's identity.
//! - [`renorm`]: the two application pipelines -- the regularized rooted-tree
//!   integral character and the regularized multiple zeta value character at
//!   non-positive arguments -- and their renormalized values.

pub mod exact;
pub mod hopf;
pub mod laurent;
pub mod renorm;
pub mod ring;
pub mod rota;
pub mod trees;
pub mod words;

pub use exact::{bernoulli, zeta_nonpositive, Rational, RationalFunction, SymbolicPoly};
pub use laurent::LaurentSeries;
pub use ring::Ring;
pub use trees::{RootedForest, RootedTree};
pub use words::{Letter, Word};
