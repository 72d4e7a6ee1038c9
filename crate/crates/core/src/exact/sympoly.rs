//! The symbolic coefficient ring Q[PI2, L].
//!
//! `PI2` stands for pi^2 and `L` for ln c. The generator registry is closed:
//! pi only ever appears through even powers in the series we expand, so pi^2
//! is a single generator and odd powers of pi cannot be represented at all.

use std::collections::BTreeMap;
use std::fmt;

use num_traits::Zero;

use super::rational::Rational;
use crate::ring::Ring;

/// Exponent vector over the fixed generators, ordered `PI2` then `L`.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug, Default)]
pub struct Monomial {
    pub pi2: u32,
    pub ln_c: u32,
}

impl Monomial {
    pub const ONE: Monomial = Monomial { pi2: 0, ln_c: 0 };

    pub fn new(pi2: u32, ln_c: u32) -> Self {
        Monomial { pi2, ln_c }
    }

    fn mul(&self, rhs: &Monomial) -> Monomial {
        Monomial {
            pi2: self.pi2 + rhs.pi2,
            ln_c: self.ln_c + rhs.ln_c,
        }
    }

    fn is_one(&self) -> bool {
        *self == Monomial::ONE
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut parts = Vec::new();
        match self.pi2 {
            0 => {}
            1 => parts.push("PI2".to_string()),
            e => parts.push(format!("PI2^{e}")),
        }
        match self.ln_c {
            0 => {}
            1 => parts.push("L".to_string()),
            e => parts.push(format!("L^{e}")),
        }
        write!(f, "{}", parts.join("*"))
    }
}

/// Sparse polynomial in Q[PI2, L]. No zero coefficients are stored, so
/// structural equality is semantic equality.
#[derive(Clone, PartialEq, Eq, Debug, Default)]
pub struct SymbolicPoly {
    terms: BTreeMap<Monomial, Rational>,
}

impl SymbolicPoly {
    pub fn constant(q: Rational) -> Self {
        let mut terms = BTreeMap::new();
        if !q.is_zero() {
            terms.insert(Monomial::ONE, q);
        }
        SymbolicPoly { terms }
    }

    /// The generator pi^2.
    pub fn pi2() -> Self {
        Self::monomial(Monomial::new(1, 0), Rational::one())
    }

    /// The generator ln c.
    pub fn ln_c() -> Self {
        Self::monomial(Monomial::new(0, 1), Rational::one())
    }

    pub fn monomial(m: Monomial, coeff: Rational) -> Self {
        let mut terms = BTreeMap::new();
        if !coeff.is_zero() {
            terms.insert(m, coeff);
        }
        SymbolicPoly { terms }
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &Rational)> {
        self.terms.iter()
    }

    pub fn coeff(&self, m: &Monomial) -> Rational {
        self.terms.get(m).cloned().unwrap_or_else(Rational::zero)
    }

    /// Some(constant) when the polynomial has no generator part.
    pub fn as_constant(&self) -> Option<Rational> {
        if self.terms.is_empty() {
            return Some(Rational::zero());
        }
        if self.terms.len() == 1 {
            if let Some(c) = self.terms.get(&Monomial::ONE) {
                return Some(c.clone());
            }
        }
        None
    }

    fn add_term(terms: &mut BTreeMap<Monomial, Rational>, m: Monomial, c: Rational) {
        if c.is_zero() {
            return;
        }
        let entry = terms.entry(m).or_insert_with(Rational::zero);
        *entry += c;
        if entry.is_zero() {
            terms.remove(&m);
        }
    }

    /// Text rendering with `PI2` as a pi-squared sign and `L` as `ln c`.
    pub fn display_pretty(&self) -> String {
        self.to_string()
            .replace("PI2", "\u{3c0}\u{b2}")
            .replace('L', "(ln c)")
    }
}

impl Ring for SymbolicPoly {
    fn zero() -> Self {
        SymbolicPoly::default()
    }

    fn one() -> Self {
        SymbolicPoly::constant(Rational::one())
    }

    fn from_rational(q: &Rational) -> Self {
        SymbolicPoly::constant(q.clone())
    }

    fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    fn add(&self, rhs: &Self) -> Self {
        let mut terms = self.terms.clone();
        for (m, c) in &rhs.terms {
            Self::add_term(&mut terms, *m, c.clone());
        }
        SymbolicPoly { terms }
    }

    fn neg(&self) -> Self {
        SymbolicPoly {
            terms: self.terms.iter().map(|(m, c)| (*m, -c)).collect(),
        }
    }

    fn mul(&self, rhs: &Self) -> Self {
        let mut terms = BTreeMap::new();
        for (ma, ca) in &self.terms {
            for (mb, cb) in &rhs.terms {
                Self::add_term(&mut terms, ma.mul(mb), ca * cb);
            }
        }
        SymbolicPoly { terms }
    }

    fn inverse(&self) -> Option<Self> {
        self.as_constant()
            .and_then(|c| Ring::inverse(&c))
            .map(SymbolicPoly::constant)
    }
}

// Canonical rendering: terms ascending by (PI2 exponent, L exponent), each as
// `coeff*monomial`, joined by " + ". Pure-L terms therefore precede PI2 terms,
// e.g. "1/2*L^2 + 1/4*PI2".
impl fmt::Display for SymbolicPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let rendered: Vec<String> = self
            .terms
            .iter()
            .map(|(m, c)| {
                if m.is_one() {
                    format!("{c}")
                } else {
                    format!("{c}*{m}")
                }
            })
            .collect();
        write!(f, "{}", rendered.join(" + "))
    }
}
