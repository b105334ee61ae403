//! Exact arithmetic: big rationals and real quadratic irrationals.
//!
//! Nothing in this module touches floating point. Decimal expansions exist
//! for display only and are never consulted by a decision.

mod number;
mod surd;

pub use number::QuadraticNumber;
pub use surd::QuadraticSurd;

use num_bigint::{BigInt, Sign};
use num_integer::{Integer, Roots};
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};

/// Reduced fraction with a positive denominator.
pub type Rational = BigRational;

/// Parses `num/den` or a bare integer into a reduced rational.
pub fn parse_rational(text: &str) -> Result<Rational> {
    let text = text.trim();
    let bad = || Error::Parse(format!("invalid rational `{text}`"));
    match text.split_once('/') {
        Some((n, d)) => {
            let n: BigInt = n.trim().parse().map_err(|_| bad())?;
            let d: BigInt = d.trim().parse().map_err(|_| bad())?;
            if d.is_zero() {
                return Err(Error::ZeroDenominator);
            }
            Ok(Rational::new(n, d))
        }
        None => Ok(Rational::from_integer(text.parse().map_err(|_| bad())?)),
    }
}

/// `num/den`, or just `num` for integers.
pub fn format_rational(r: &Rational) -> String {
    if r.denom().is_one() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

pub(crate) fn is_perfect_square(n: &BigInt) -> bool {
    if n.is_negative() {
        return false;
    }
    let s = n.sqrt();
    &s * &s == *n
}

/// Floor division that rounds toward negative infinity.
pub(crate) fn floor_div(a: &BigInt, b: &BigInt) -> BigInt {
    a.div_floor(b)
}

pub(crate) fn rational_is_square(r: &Rational) -> bool {
    is_perfect_square(r.numer()) && is_perfect_square(r.denom())
}

const TRIAL_LIMIT: u64 = 2_000_000;

/// Splits `n > 0` as `core * k^2` with `core` square-free.
///
/// Exact whenever every prime factor of `n` below `TRIAL_LIMIT` is found and
/// the leftover cofactor has at most two prime factors, which covers every
/// `n < TRIAL_LIMIT^3`. Past that the returned core may retain a square of
/// two large primes; arithmetic stays correct, only canonical uniqueness of
/// surd encodings weakens.
pub(crate) fn squarefree_split(n: &BigInt) -> (BigInt, BigInt) {
    debug_assert!(n.sign() == Sign::Plus);
    if let Some(small) = n.to_u128() {
        let (c, k) = squarefree_split_u128(small);
        return (BigInt::from(c), BigInt::from(k));
    }
    let mut rest = n.clone();
    let mut core = BigInt::one();
    let mut k = BigInt::one();
    let mut p = 2u64;
    while p < TRIAL_LIMIT {
        let bp = BigInt::from(p);
        if &bp * &bp * &bp > rest {
            break;
        }
        let mut e = 0u32;
        while (&rest % &bp).is_zero() {
            rest /= &bp;
            e += 1;
        }
        if e > 0 {
            k *= bp.pow(e / 2);
            if e % 2 == 1 {
                core *= &bp;
            }
        }
        p += if p == 2 { 1 } else { 2 };
    }
    if is_perfect_square(&rest) {
        k *= rest.sqrt();
    } else {
        core *= rest;
    }
    (core, k)
}

fn squarefree_split_u128(mut n: u128) -> (u128, u128) {
    let mut core = 1u128;
    let mut k = 1u128;
    let mut p = 2u128;
    while p * p * p <= n && p < TRIAL_LIMIT as u128 {
        let mut e = 0u32;
        while n.is_multiple_of(p) {
            n /= p;
            e += 1;
        }
        if e > 0 {
            k *= p.pow(e / 2);
            if e % 2 == 1 {
                core *= p;
            }
        }
        p += if p == 2 { 1 } else { 2 };
    }
    let s = n.sqrt();
    if s * s == n {
        k *= s;
    } else {
        core *= n;
    }
    (core, k)
}

/// Renders `scaled / 10^digits` as a signed decimal with `digits` places.
pub(crate) fn decimal_floor_string(scaled: &BigInt, digits: usize) -> String {
    let ten = BigInt::from(10u32).pow(digits as u32);
    let sign = if scaled.is_negative() { "-" } else { "" };
    let (int_part, frac) = scaled.abs().div_rem(&ten);
    if digits == 0 {
        return format!("{sign}{int_part}");
    }
    format!("{sign}{int_part}.{:0>width$}", frac.to_string(), width = digits)
}

pub(crate) fn to_u64(term: &BigInt) -> Result<u64> {
    term.to_u64().ok_or_else(|| Error::TermOverflow(term.clone()))
}
