//! Truncated Laurent series in the regulator `eps` over a coefficient ring.
//!
//! A series carries an explicit truncation order: exponents above `trunc`
//! are unknown, everything at or below it is exact. Arithmetic propagates
//! windows so that no coefficient is ever reported that could be
//! contaminated by an unknown tail: multiplying windows `[v1, N1]` and
//! `[v2, N2]` yields `[v1+v2, min(N1+v2, N2+v1)]`.

use std::collections::BTreeMap;
use std::fmt;

use thiserror::Error;

use crate::exact::{factorial, rat_int, Rational};
use crate::ring::Ring;

/// Truncation order of a series that is known at every exponent (a Laurent
/// polynomial). Kept far from `i64::MAX` so window arithmetic cannot
/// overflow under saturating ops.
pub const COMPLETE_ORDER: i64 = i64::MAX / 4;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum LaurentError {
    #[error("series has a pole: nonzero coefficient at eps^{exponent}")]
    Pole { exponent: i64 },
    #[error("window ends at eps^{trunc} but eps^{needed} is required")]
    Precision { trunc: i64, needed: i64 },
    #[error("valuation at least {required} required, found {found}")]
    Valuation { required: i64, found: i64 },
    #[error("coefficient mismatch at eps^{exponent}")]
    Mismatch { exponent: i64 },
    #[error("leading coefficient is not invertible")]
    NotInvertible,
}

/// Truncated Laurent series with exact coefficients in `C`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct LaurentSeries<C: Ring> {
    /// Nonzero coefficients by exponent; every stored exponent is <= trunc.
    coeffs: BTreeMap<i64, C>,
    /// Exponents > trunc are unknown.
    trunc: i64,
}

impl<C: Ring> LaurentSeries<C> {
    /// Zero known through `trunc`.
    pub fn zero(trunc: i64) -> Self {
        LaurentSeries {
            coeffs: BTreeMap::new(),
            trunc,
        }
    }

    /// The exact zero (known at every order).
    pub fn zero_exact() -> Self {
        Self::zero(COMPLETE_ORDER)
    }

    /// The exact unit.
    pub fn one() -> Self {
        Self::monomial(0, C::one())
    }

    /// `coeff * eps^exp`, exact.
    pub fn monomial(exp: i64, coeff: C) -> Self {
        let mut coeffs = BTreeMap::new();
        if !coeff.is_zero() {
            coeffs.insert(exp, coeff);
        }
        LaurentSeries {
            coeffs,
            trunc: COMPLETE_ORDER,
        }
    }

    /// Constant series from a scalar, exact.
    pub fn constant(c: C) -> Self {
        Self::monomial(0, c)
    }

    /// Build from `(exponent, coefficient)` pairs; zero coefficients and
    /// terms beyond the window are dropped.
    pub fn from_terms(terms: impl IntoIterator<Item = (i64, C)>, trunc: i64) -> Self {
        let mut coeffs: BTreeMap<i64, C> = BTreeMap::new();
        for (e, c) in terms {
            if e > trunc || c.is_zero() {
                continue;
            }
            let merged = match coeffs.remove(&e) {
                Some(prev) => prev.add(&c),
                None => c,
            };
            if !merged.is_zero() {
                coeffs.insert(e, merged);
            }
        }
        LaurentSeries { coeffs, trunc }
    }

    pub fn trunc_order(&self) -> i64 {
        self.trunc
    }

    pub fn is_complete(&self) -> bool {
        self.trunc == COMPLETE_ORDER
    }

    /// All known coefficients are zero. Says nothing about the unknown tail.
    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&i64, &C)> {
        self.coeffs.iter()
    }

    /// Least exponent that can carry a nonzero coefficient: the valuation
    /// when a nonzero term is stored, otherwise the first unknown slot.
    pub fn valuation_bound(&self) -> i64 {
        self.coeffs
            .keys()
            .next()
            .copied()
            .unwrap_or_else(|| self.trunc.saturating_add(1))
    }

    /// Coefficient at `exp`, or a precision error when the window ends first.
    pub fn coeff(&self, exp: i64) -> Result<C, LaurentError> {
        if exp > self.trunc {
            return Err(LaurentError::Precision {
                trunc: self.trunc,
                needed: exp,
            });
        }
        Ok(self.coeffs.get(&exp).cloned().unwrap_or_else(C::zero))
    }

    /// Restrict to a smaller window.
    pub fn truncate(&self, trunc: i64) -> Self {
        let trunc = trunc.min(self.trunc);
        LaurentSeries {
            coeffs: self
                .coeffs
                .iter()
                .filter(|(e, _)| **e <= trunc)
                .map(|(e, c)| (*e, c.clone()))
                .collect(),
            trunc,
        }
    }

    pub fn add(&self, rhs: &Self) -> Self {
        let trunc = self.trunc.min(rhs.trunc);
        let mut coeffs = self.truncate(trunc).coeffs;
        for (e, c) in rhs.coeffs.range(..=trunc) {
            let merged = match coeffs.remove(e) {
                Some(prev) => prev.add(c),
                None => c.clone(),
            };
            if !merged.is_zero() {
                coeffs.insert(*e, merged);
            }
        }
        LaurentSeries { coeffs, trunc }
    }

    pub fn neg(&self) -> Self {
        LaurentSeries {
            coeffs: self.coeffs.iter().map(|(e, c)| (*e, c.neg())).collect(),
            trunc: self.trunc,
        }
    }

    pub fn sub(&self, rhs: &Self) -> Self {
        self.add(&rhs.neg())
    }

    /// Cauchy product under the window propagation rule.
    pub fn mul(&self, rhs: &Self) -> Self {
        let trunc = (self.trunc.saturating_add(rhs.valuation_bound()))
            .min(rhs.trunc.saturating_add(self.valuation_bound()))
            .min(COMPLETE_ORDER);
        let mut out = BTreeMap::new();
        for (ea, ca) in &self.coeffs {
            for (eb, cb) in &rhs.coeffs {
                let e = ea + eb;
                if e > trunc {
                    continue;
                }
                let term = ca.mul(cb);
                if term.is_zero() {
                    continue;
                }
                let merged = match out.remove(&e) {
                    Some(prev) => term.add(&prev),
                    None => term,
                };
                if !merged.is_zero() {
                    out.insert(e, merged);
                }
            }
        }
        LaurentSeries { coeffs: out, trunc }
    }

    pub fn scale(&self, c: &C) -> Self {
        LaurentSeries {
            coeffs: self
                .coeffs
                .iter()
                .filter_map(|(e, v)| {
                    let w = v.mul(c);
                    (!w.is_zero()).then_some((*e, w))
                })
                .collect(),
            trunc: self.trunc,
        }
    }

    pub fn scale_rat(&self, q: &Rational) -> Self {
        self.scale(&C::from_rational(q))
    }

    /// Multiply by `eps^k`.
    pub fn shift(&self, k: i64) -> Self {
        LaurentSeries {
            coeffs: self.coeffs.iter().map(|(e, c)| (e + k, c.clone())).collect(),
            trunc: self.trunc.saturating_add(k).min(COMPLETE_ORDER),
        }
    }

    /// The pole part `sum_{n<0} a_n eps^n`. Complete whenever the window
    /// certifies every negative exponent.
    pub fn pole_part(&self) -> Self {
        LaurentSeries {
            coeffs: self
                .coeffs
                .range(..0)
                .map(|(e, c)| (*e, c.clone()))
                .collect(),
            trunc: if self.trunc >= -1 {
                COMPLETE_ORDER
            } else {
                self.trunc
            },
        }
    }

    /// The complement `(id - Q)`: non-negative exponents only.
    pub fn regular_part(&self) -> Self {
        LaurentSeries {
            coeffs: self
                .coeffs
                .range(0..)
                .map(|(e, c)| (*e, c.clone()))
                .collect(),
            trunc: self.trunc,
        }
    }

    /// Truncated exponential; requires valuation >= 1.
    pub fn exp(&self) -> Result<Self, LaurentError> {
        let v = self.valuation_bound();
        if v < 1 {
            return Err(LaurentError::Valuation {
                required: 1,
                found: v,
            });
        }
        let mut acc = Self::one().truncate(self.trunc);
        let mut power = Self::one();
        let mut n: i64 = 0;
        while n.saturating_mul(v) <= self.trunc {
            if n > 0 {
                power = power.mul(self);
                acc = acc.add(&power.scale_rat(&factorial(n as u32).recip()));
            }
            n += 1;
        }
        Ok(acc)
    }

    /// Truncated logarithm of `1 + y`; requires the input to be `1 + y`
    /// with valuation(y) >= 1.
    pub fn log(&self) -> Result<Self, LaurentError> {
        let y = self.sub(&Self::one());
        let v = y.valuation_bound();
        if v < 1 {
            return Err(LaurentError::Valuation {
                required: 1,
                found: v,
            });
        }
        let mut acc = Self::zero(y.trunc);
        let mut power = Self::one();
        let mut n: i64 = 0;
        while (n + 1).saturating_mul(v) <= y.trunc {
            n += 1;
            power = power.mul(&y);
            let sign = if n % 2 == 0 { -1 } else { 1 };
            acc = acc.add(&power.scale_rat(&(rat_int(sign) / rat_int(n))));
        }
        Ok(acc)
    }

    /// Multiplicative inverse; the leading coefficient must be invertible
    /// in `C` and the window must expose it.
    pub fn inverse(&self) -> Result<Self, LaurentError> {
        let (&v, lead) = self
            .coeffs
            .iter()
            .next()
            .ok_or(LaurentError::NotInvertible)?;
        let lead_inv = lead.inverse().ok_or(LaurentError::NotInvertible)?;
        // x = lead*eps^v (1 + w), with valuation(w) >= 1.
        let unit = self.shift(-v).scale(&lead_inv);
        let w = unit.sub(&Self::one());
        let wv = w.valuation_bound();
        let mut acc = Self::one().truncate(w.trunc);
        let mut power = Self::one();
        let mut n: i64 = 0;
        while (n + 1).saturating_mul(wv) <= w.trunc {
            n += 1;
            power = power.mul(&w);
            acc = if n % 2 == 0 {
                acc.add(&power)
            } else {
                acc.sub(&power)
            };
        }
        Ok(acc.scale(&lead_inv).shift(-v))
    }

    /// Constant coefficient, provided the series has no pole and the window
    /// reaches order zero.
    pub fn eval_at_zero(&self) -> Result<C, LaurentError> {
        if let Some((&e, _)) = self.coeffs.range(..0).next() {
            return Err(LaurentError::Pole { exponent: e });
        }
        self.coeff(0)
    }

    /// Window-aware equality. `Ok(())` when the series agree on every
    /// exponent both windows certify and neither has a known nonzero term
    /// the other cannot check; `Mismatch`/`Precision` otherwise.
    pub fn check_eq(&self, rhs: &Self) -> Result<(), LaurentError> {
        let shared = self.trunc.min(rhs.trunc);
        for (&e, c) in self.coeffs.iter().chain(rhs.coeffs.iter()) {
            if e > shared {
                return Err(LaurentError::Precision {
                    trunc: shared,
                    needed: e,
                });
            }
            if self.coeff(e)? != rhs.coeff(e)? {
                return Err(LaurentError::Mismatch { exponent: e });
            }
        }
        Ok(())
    }
}

impl<C: Ring> Ring for LaurentSeries<C> {
    fn zero() -> Self {
        Self::zero_exact()
    }

    fn one() -> Self {
        LaurentSeries::one()
    }

    fn from_rational(q: &Rational) -> Self {
        Self::constant(C::from_rational(q))
    }

    fn is_zero(&self) -> bool {
        LaurentSeries::is_zero(self)
    }

    fn add(&self, rhs: &Self) -> Self {
        LaurentSeries::add(self, rhs)
    }

    fn neg(&self) -> Self {
        LaurentSeries::neg(self)
    }

    fn mul(&self, rhs: &Self) -> Self {
        LaurentSeries::mul(self, rhs)
    }

    fn inverse(&self) -> Option<Self> {
        LaurentSeries::inverse(self).ok()
    }
}

// Canonical rendering: ascending exponent, composite coefficients
// parenthesized, finite windows closed by an O(eps^n) marker.
impl<C: Ring> fmt::Display for LaurentSeries<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut parts: Vec<String> = Vec::new();
        for (e, c) in &self.coeffs {
            let coeff = c.to_string();
            let coeff = if coeff.contains(' ') {
                format!("({coeff})")
            } else {
                coeff
            };
            parts.push(match e {
                0 => coeff,
                1 => format!("{coeff}*eps"),
                _ => format!("{coeff}*eps^{e}"),
            });
        }
        if !self.is_complete() {
            parts.push(format!("O(eps^{})", self.trunc + 1));
        }
        if parts.is_empty() {
            parts.push("0".to_string());
        }
        write!(f, "{}", parts.join(" + "))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::rat;

    type L = LaurentSeries<Rational>;

    fn series(terms: &[(i64, i64, i64)], trunc: i64) -> L {
        L::from_terms(terms.iter().map(|&(e, n, d)| (e, rat(n, d))), trunc)
    }

    #[test]
    fn pole_part_examples() {
        // 3 eps^-2 + 5 + 7 eps -> 3 eps^-2
        let x = series(&[(-2, 3, 1), (0, 5, 1), (1, 7, 1)], 6);
        let q = x.pole_part();
        assert_eq!(q, series(&[(-2, 3, 1)], 6).truncate(6).pole_part());
        assert!(q.is_complete());
        assert_eq!(q.coeff(-2).unwrap(), rat(3, 1));
        assert_eq!(q.coeff(0).unwrap(), rat(0, 1));
        // 1 + eps -> 0
        assert!(series(&[(0, 1, 1), (1, 1, 1)], 6).pole_part().is_zero());
    }

    #[test]
    fn pole_part_idempotent_and_complement_regular() {
        use rand::{Rng, SeedableRng};
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(7);
        for _ in 0..100 {
            let terms: Vec<(i64, Rational)> = (-3..=3)
                .map(|e| (e, rat(rng.gen_range(-4..5), rng.gen_range(1..4))))
                .collect();
            let x = L::from_terms(terms, 3);
            let q = x.pole_part();
            q.check_eq(&q.pole_part()).unwrap();
            assert!(x.regular_part().valuation_bound() >= 0);
            // Q + (id - Q) = id on the window.
            x.check_eq(&q.add(&x.regular_part())).unwrap();
        }
    }

    #[test]
    fn rota_baxter_axiom_weight_minus_one() {
        // Q(x)Q(y) = Q(xQ(y)) + Q(Q(x)y) - Q(xy), 100 random pairs.
        use rand::{Rng, SeedableRng};
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(11);
        for _ in 0..100 {
            let mut sample = || {
                let terms: Vec<(i64, Rational)> = (-3..=3)
                    .map(|e| (e, rat(rng.gen_range(-4..5), rng.gen_range(1..4))))
                    .collect();
                L::from_terms(terms, 3)
            };
            let (x, y) = (sample(), sample());
            let lhs = x.pole_part().mul(&y.pole_part());
            let rhs = x
                .mul(&y.pole_part())
                .pole_part()
                .add(&x.pole_part().mul(&y).pole_part())
                .sub(&x.mul(&y).pole_part());
            lhs.check_eq(&rhs).unwrap();
        }
    }

    #[test]
    fn mul_window_rule() {
        // eps^-1 * eps = 1
        let a = L::monomial(-1, rat(1, 1));
        let b = L::monomial(1, rat(1, 1));
        assert_eq!(a.mul(&b), L::one());
        // x*1 = x
        let x = series(&[(-2, 1, 2), (1, 3, 1)], 4);
        assert_eq!(x.mul(&L::one()), x);
        // window arithmetic: [-1,1] x [-1,1] -> [-2,0]
        let u = series(&[(-1, -1, 1), (0, -1, 2), (1, -1, 12)], 1);
        let v = series(&[(-1, -1, 2), (0, -1, 2), (1, -1, 6)], 1);
        let p = u.mul(&v);
        assert_eq!(p.trunc_order(), 0);
        assert_eq!(p.coeff(-2).unwrap(), rat(1, 2));
        assert_eq!(p.coeff(-1).unwrap(), rat(3, 4));
        assert_eq!(p.coeff(0).unwrap(), rat(11, 24));
    }

    #[test]
    fn exp_against_termwise_oracle() {
        // exp(-L eps) with rational stand-in L=5: coefficients (-5)^n/n!.
        let x = L::monomial(1, rat(-5, 1)).truncate(6);
        let e = x.exp().unwrap();
        let mut power = rat(1, 1);
        for n in 0..=6u32 {
            if n > 0 {
                power *= rat(-5, 1);
            }
            assert_eq!(e.coeff(n as i64).unwrap(), &power / factorial(n));
        }
    }

    #[test]
    fn exp_log_inverse() {
        let x = series(&[(1, 1, 1), (2, -1, 3), (3, 2, 5)], 6);
        x.exp().unwrap().log().unwrap().check_eq(&x).unwrap();
        let u = L::one().add(&series(&[(1, 2, 1), (2, 1, 7)], 6));
        u.log().unwrap().exp().unwrap().check_eq(&u).unwrap();
        assert_eq!(L::zero(6).exp().unwrap(), L::one().truncate(6));
        // log(exp(eps)) = eps
        let eps = L::monomial(1, rat(1, 1)).truncate(5);
        eps.exp().unwrap().log().unwrap().check_eq(&eps).unwrap();
    }

    #[test]
    fn exp_rejects_bad_valuation() {
        let x = series(&[(0, 1, 1)], 6);
        assert!(matches!(x.exp(), Err(LaurentError::Valuation { .. })));
        let u = series(&[(0, 1, 1), (1, 1, 1)], 6);
        // log wants 1 + (val >= 1); 1 + eps qualifies, 2 + eps does not.
        assert!(u.log().is_ok());
        let w = series(&[(0, 2, 1), (1, 1, 1)], 6);
        assert!(matches!(w.log(), Err(LaurentError::Valuation { .. })));
    }

    #[test]
    fn eval_at_zero_behaviour() {
        let x = series(&[(-1, 1, 1), (0, 3, 1)], 6);
        assert_eq!(
            x.eval_at_zero(),
            Err(LaurentError::Pole { exponent: -1 })
        );
        let y = series(&[(0, -7, 2), (1, 1, 1)], 6);
        assert_eq!(y.eval_at_zero().unwrap(), rat(-7, 2));
        assert_eq!(L::zero(3).eval_at_zero().unwrap(), rat(0, 1));
        // window short of order zero
        let z = series(&[(-2, 1, 1)], -2);
        assert!(matches!(
            z.eval_at_zero(),
            Err(LaurentError::Precision { .. })
        ));
    }

    #[test]
    fn check_eq_is_window_aware() {
        let a = series(&[(0, 1, 1)], 2);
        let b = series(&[(0, 1, 1)], 5);
        assert!(a.check_eq(&b).is_ok());
        let c = series(&[(0, 1, 1), (4, 1, 1)], 5);
        assert_eq!(
            a.check_eq(&c),
            Err(LaurentError::Precision { trunc: 2, needed: 4 })
        );
        let d = series(&[(0, 1, 2)], 5);
        assert_eq!(a.check_eq(&d), Err(LaurentError::Mismatch { exponent: 0 }));
    }

    #[test]
    fn inverse_round_trip() {
        let x = series(&[(-1, 2, 1), (0, 1, 1), (1, -1, 3)], 5);
        let y = x.inverse().unwrap();
        x.mul(&y).check_eq(&L::one()).unwrap();
        assert!(L::zero(4).inverse().is_err());
    }

    #[test]
    fn display_canonical() {
        let x = series(&[(-1, 1, 1), (0, -1, 2), (1, -1, 12)], 1);
        assert_eq!(x.to_string(), "1*eps^-1 + -1/2 + -1/12*eps + O(eps^2)");
        assert_eq!(L::one().to_string(), "1");
        assert_eq!(L::zero(2).to_string(), "O(eps^3)");
    }
}
