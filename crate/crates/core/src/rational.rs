//! Exact rationals for every inequality that feeds a verdict.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

pub type Rational = BigRational;

#[inline]
pub fn int(value: usize) -> Rational {
    Rational::from_integer(BigInt::from(value))
}

#[inline]
pub fn ratio(numer: i64, denom: i64) -> Rational {
    Rational::new(BigInt::from(numer), BigInt::from(denom))
}

/// `binom(m, 2)` as an exact rational.
pub fn pairs(m: usize) -> Rational {
    int(m * m.saturating_sub(1) / 2)
}

/// `2^exp`.
pub fn pow2(exp: u32) -> Rational {
    Rational::from_integer(BigInt::one() << exp as usize)
}

/// Smallest integer `>= q`, for `q >= 0`.
pub fn ceil_usize(q: &Rational) -> usize {
    let c = q.ceil().to_integer();
    usize::try_from(c).expect("ceiling fits in usize")
}

/// Parses `p/q` or a bare integer `p`. Decimal points are rejected.
pub fn parse_rational(text: &str) -> Option<Rational> {
    let text = text.trim();
    let (num, den) = match text.split_once('/') {
        Some((n, d)) => (n.trim(), d.trim()),
        None => (text, "1"),
    };
    let valid = |s: &str| {
        let digits = s.strip_prefix('-').unwrap_or(s);
        !digits.is_empty() && digits.bytes().all(|b| b.is_ascii_digit())
    };
    if !valid(num) || !valid(den) {
        return None;
    }
    let num: BigInt = num.parse().ok()?;
    let den: BigInt = den.parse().ok()?;
    if den.is_zero() {
        return None;
    }
    Some(Rational::new(num, den))
}

/// `p/q` in lowest terms, or `p` when the denominator is one.
pub fn format_rational(q: &Rational) -> alloc::string::String {
    use alloc::string::ToString;
    if q.denom().is_one() {
        q.numer().to_string()
    } else {
        alloc::format!("{}/{}", q.numer(), q.denom())
    }
}

/// True when `q` is an integer.
pub fn is_integral(q: &Rational) -> bool {
    q.is_integer()
}
