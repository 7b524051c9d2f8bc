//! Exact rational scalars and the integer combinatorics used everywhere.
//!
//! `Rational` is `num`'s arbitrary-precision `BigRational`, which keeps
//! values canonical (reduced, positive denominator) after every operation.
//! Text form is `a` or `a/b` with an optional leading `-`, matching the
//! crate's external grammar.

use num::bigint::BigInt;
use num::{One, Signed, Zero};

use crate::error::{Error, Result};

pub type Rational = num::BigRational;

/// Rational from an integer.
pub fn rat(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

/// Rational from a numerator/denominator pair.
///
/// Panics on a zero denominator; callers pass literals.
pub fn ratio(n: i64, d: i64) -> Rational {
    Rational::new(BigInt::from(n), BigInt::from(d))
}

/// Parse `a` or `a/b` (optional leading `-`).
pub fn parse_rational(s: &str) -> Result<Rational> {
    s.parse::<Rational>()
        .map_err(|_| Error::Parse(format!("not a rational: {s:?}")))
}

/// n! as a big integer.
pub fn factorial(n: usize) -> BigInt {
    let mut acc = BigInt::one();
    for k in 2..=n {
        acc *= BigInt::from(k);
    }
    acc
}

/// Binomial coefficient for nonnegative arguments.
pub fn binomial(n: usize, k: usize) -> BigInt {
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

/// Binomial coefficient extended to signed arguments.
///
/// For `k >= 0` this is the falling factorial n(n-1)...(n-k+1)/k!, which
/// vanishes whenever a nonnegative `n` is smaller than `k` and gives
/// `binomial_signed(-1, 0) = 1`. The only negative-`k` value the derangement
/// identities rely on is `binomial_signed(-1, -1) = 1`; every other negative
/// `k` yields zero.
pub fn binomial_signed(n: i64, k: i64) -> BigInt {
    if k < 0 {
        return if n == k { BigInt::one() } else { BigInt::zero() };
    }
    let mut num = BigInt::one();
    for i in 0..k {
        num *= BigInt::from(n - i);
    }
    num / factorial(k as usize)
}

/// Render in the crate's canonical text form (`a` or `a/b`).
pub fn render(r: &Rational) -> String {
    r.to_string()
}

/// Nearest double, for the numeric branches only.
pub fn to_f64(r: &Rational) -> f64 {
    num::ToPrimitive::to_f64(r).unwrap_or_else(|| {
        if r.is_negative() {
            f64::NEG_INFINITY
        } else {
            f64::INFINITY
        }
    })
}
