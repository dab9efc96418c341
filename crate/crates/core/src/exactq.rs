//! Exact rational scalars.
//!
//! Every quantity that reaches a linear program (the base `c`, powers `c^m`,
//! tail values, certificate entries) is an arbitrary-precision rational kept
//! in lowest terms. The arithmetic itself is [`num_rational::BigRational`];
//! this module adds the strict text codec used by files and the command line,
//! and directed rounding onto a dyadic grid.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};
use thiserror::Error;

/// Arbitrary-precision rational, always in canonical form (`gcd = 1`, positive denominator).
pub type Rational = num_rational::BigRational;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ParseRationalError {
    #[error("malformed rational {0:?}: expected `p/q` or `p` with decimal integers")]
    Malformed(String),
    #[error("zero denominator in {0:?}")]
    ZeroDenominator(String),
}

/// Direction for [`round_dyadic`].
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum RoundDir {
    Up,
    Down,
}

fn parse_decimal(s: &str, allow_sign: bool) -> Option<BigInt> {
    let digits = match s.as_bytes().first()? {
        b'-' | b'+' if allow_sign => &s[1..],
        _ => s,
    };
    if digits.is_empty() || !digits.bytes().all(|b| b.is_ascii_digit()) {
        return None;
    }
    s.parse().ok()
}

/// Parses `"p/q"` or `"p"`. The numerator may carry a sign; the denominator may not.
/// No decimal points, exponents or whitespace are accepted.
pub fn parse_rational(s: &str) -> Result<Rational, ParseRationalError> {
    let malformed = || ParseRationalError::Malformed(s.to_string());
    let (num, den) = match s.split_once('/') {
        Some((p, q)) => (
            parse_decimal(p, true).ok_or_else(malformed)?,
            parse_decimal(q, false).ok_or_else(malformed)?,
        ),
        None => (parse_decimal(s, true).ok_or_else(malformed)?, BigInt::one()),
    };
    if den.is_zero() {
        return Err(ParseRationalError::ZeroDenominator(s.to_string()));
    }
    Ok(Rational::new(num, den))
}

/// Formats as `"p/q"`, or `"p"` when the denominator is one.
pub fn format_rational(q: &Rational) -> String {
    q.to_string()
}

/// `q^e`; `q^0 = 1` for every `q`, including zero.
pub fn rational_pow(q: &Rational, e: u32) -> Rational {
    Rational::new(q.numer().pow(e), q.denom().pow(e))
}

/// Rounds `q` onto the grid `2^-bits · Z` in the requested direction.
///
/// The result `r` satisfies `r <= q` (down) or `r >= q` (up) and `|r - q| < 2^-bits`.
/// Values already on the grid are returned unchanged.
pub fn round_dyadic(q: &Rational, bits: u32, dir: RoundDir) -> Rational {
    assert!(bits >= 1, "round_dyadic needs at least one bit");
    let scale = BigInt::one() << bits;
    let scaled_num = q.numer() * &scale;
    let (quot, rem) = scaled_num.div_mod_floor(q.denom());
    let k = match dir {
        RoundDir::Down => quot,
        RoundDir::Up if rem.is_zero() => quot,
        RoundDir::Up => quot + 1,
    };
    Rational::new(k, scale)
}

/// `n choose k` as a big integer (zero when `k > n`).
pub fn binomial(n: u64, k: u64) -> BigInt {
    if k > n {
        return BigInt::zero();
    }
    let k = k.min(n - k);
    let mut acc = BigInt::one();
    for i in 0..k {
        acc = acc * BigInt::from(n - i) / BigInt::from(i + 1);
    }
    acc
}

/// `n!` as a big integer.
pub fn factorial(n: u64) -> BigInt {
    (1..=n).fold(BigInt::one(), |acc, i| acc * BigInt::from(i))
}

pub fn int(v: impl Into<BigInt>) -> Rational {
    Rational::from_integer(v.into())
}

pub fn ratio(p: i64, q: i64) -> Rational {
    Rational::new(BigInt::from(p), BigInt::from(q))
}

/// Serde adapter storing a [`Rational`] as its `"p/q"` text.
pub mod rational_text {
    use super::{format_rational, parse_rational, Rational};
    use serde::{Deserialize, Deserializer, Serializer};

    pub fn serialize<S: Serializer>(q: &Rational, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(&format_rational(q))
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<Rational, D::Error> {
        let text = String::deserialize(d)?;
        parse_rational(&text).map_err(serde::de::Error::custom)
    }
}
