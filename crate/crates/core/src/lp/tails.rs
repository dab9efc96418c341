//! Tail terms absorbing the dropped large-leg variables.

use num_traits::{One, Zero};

use super::LpError;
use crate::exactq::{binomial, int, rational_pow, Rational};

/// Finite-`n` tail: odd `k` from `k0 + 2` to `(n - 3l - 1)/2` contribute
/// `c^(2k+2l) / binom(2k+2l, k+l)`, and odd `k` from `(n - 3l - 1)/2 + 1` to
/// `(n - l - 1)/2` contribute `c^(n-1) / binom(n-l-1, k+l)`. Empty ranges give 0.
pub fn tail_tn(n: usize, l: usize, k0: usize, c: &Rational) -> Rational {
    let (n, l, k0) = (n as i64, l as i64, k0 as i64);
    let split = (n - 3 * l - 1).div_euclid(2);
    let top = (n - l - 1).div_euclid(2);
    let mut total = Rational::zero();
    for k in (k0 + 2..=split).filter(|k| k % 2 != 0) {
        let m = (2 * k + 2 * l) as u64;
        total += rational_pow(c, m as u32) / int(binomial(m, (k + l) as u64));
    }
    let cn = rational_pow(c, (n - 1).max(0) as u32);
    for k in (split + 1..=top).filter(|k| k % 2 != 0) {
        total += &cn / int(binomial((n - l - 1) as u64, (k + l) as u64));
    }
    total
}

/// Closed-form limit tail
/// `1.5 · ((2(k0+l)+4) q^(2(k0+l)+4) − 2(k0+l) q^(2(k0+l)+8)) / (1 − q^4)^2` with `q = c/2`.
pub fn tail_t(l: usize, k0: usize, c: &Rational) -> Result<Rational, LpError> {
    if *c >= int(2) || *c <= int(-2) {
        return Err(LpError::Param(format!("tail needs |c| < 2, got {c}")));
    }
    let q = c / int(2);
    let a = (k0 + l) as u32;
    let num =
        int(2 * a + 4) * rational_pow(&q, 2 * a + 4) - int(2 * a) * rational_pow(&q, 2 * a + 8);
    let den = rational_pow(&(Rational::one() - rational_pow(&q, 4)), 2);
    Ok(Rational::new(3.into(), 2.into()) * num / den)
}
