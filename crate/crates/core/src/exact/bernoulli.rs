//! Bernoulli numbers and Riemann zeta values at non-positive integers.

use num_traits::Zero;

use super::rational::{binomial, rat_int, Rational};

/// `B_k` in the convention `eps/(e^eps - 1) = sum B_k eps^k / k!`,
/// so `B_1 = -1/2`.
///
/// Computed from the defining recurrence
/// `sum_{j=0}^{k} C(k+1, j) B_j = 0` for `k >= 1`, with `B_0 = 1`.
pub fn bernoulli(k: u32) -> Rational {
    bernoulli_upto(k).pop().unwrap()
}

fn bernoulli_upto(k: u32) -> Vec<Rational> {
    let mut b: Vec<Rational> = Vec::with_capacity(k as usize + 1);
    b.push(rat_int(1));
    for n in 1..=k as u64 {
        let mut acc = Rational::zero();
        for (j, bj) in b.iter().enumerate() {
            acc += binomial(n + 1, j as u64) * bj;
        }
        b.push(-acc / binomial(n + 1, n));
    }
    b
}

/// `zeta(-k) = (-1)^k B_{k+1} / (k+1)` for `k >= 0`.
pub fn zeta_nonpositive(k: u32) -> Rational {
    let sign = if k % 2 == 0 { 1 } else { -1 };
    bernoulli(k + 1) * rat_int(sign) / rat_int(k as i64 + 1)
}
