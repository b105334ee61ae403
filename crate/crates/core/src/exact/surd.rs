use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::number::sign_of;
use super::{decimal_floor_string, floor_div, squarefree_split, QuadraticNumber, Rational};
use crate::error::{Error, Result};

/// A real quadratic irrational `(p + √d)/q`.
///
/// The encoding is canonical: `q` divides `d − p²`, `√d ≥ 0`, the sign of the
/// value is carried by `q`, and `|q|` is the smallest denominator for which
/// the divisibility holds. Two surds with equal values therefore have equal
/// `(p, q, d)`, so the derived `Eq` and `Hash` are value equality.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct QuadraticSurd {
    p: BigInt,
    q: BigInt,
    d: BigInt,
    // d = core · k², core square-free
    core: BigInt,
    k: BigInt,
}

impl QuadraticSurd {
    /// The value `(p + √d)/q`, rescaled to canonical form.
    pub fn new(p: BigInt, q: BigInt, d: BigInt) -> Result<Self> {
        if q.is_zero() {
            return Err(Error::ZeroDenominator);
        }
        if d.is_negative() {
            return Err(Error::NegativeRadicand(d));
        }
        if d.is_zero() {
            return Err(Error::SquareRadicand(d));
        }
        let (core, k) = squarefree_split(&d);
        if core.is_one() {
            return Err(Error::SquareRadicand(d));
        }
        let x = Rational::new(p, q.clone());
        let y = Rational::new(k, q);
        Ok(Self::from_parts(&x, &y, &core))
    }

    pub fn from_i64(p: i64, q: i64, d: i64) -> Result<Self> {
        Self::new(p.into(), q.into(), d.into())
    }

    /// Canonical surd equal to `x + y·√core` (`y ≠ 0`, `core` square-free).
    pub(crate) fn from_parts(x: &Rational, y: &Rational, core: &BigInt) -> Self {
        debug_assert!(!y.is_zero());
        let l = x.denom().lcm(y.denom());
        let p1 = (x * Rational::from_integer(l.clone())).to_integer();
        let k1 = (y * Rational::from_integer(l.clone())).to_integer();
        let n = core * &k1 * &k1 - &p1 * &p1;
        let s = &l / l.gcd(&n);
        let sign = if k1.is_negative() { -BigInt::one() } else { BigInt::one() };
        let q = &sign * &s * &l;
        let p = &sign * &s * p1;
        let k = s * k1.abs();
        let d = core * &k * &k;
        Self {
            p,
            q,
            d,
            core: core.clone(),
            k,
        }
    }

    pub fn p(&self) -> &BigInt {
        &self.p
    }

    pub fn q(&self) -> &BigInt {
        &self.q
    }

    pub fn d(&self) -> &BigInt {
        &self.d
    }

    /// Square-free part of `d`; two surds live in the same field iff their
    /// cores agree.
    pub fn field_radicand(&self) -> &BigInt {
        &self.core
    }

    pub fn to_number(&self) -> QuadraticNumber {
        QuadraticNumber::from_core(
            Rational::new(self.p.clone(), self.q.clone()),
            Rational::new(self.k.clone(), self.q.clone()),
            self.core.clone(),
        )
    }

    /// `⌊(p + √d)/q⌋`, exact.
    pub fn floor(&self) -> BigInt {
        let s = self.d.sqrt();
        if self.q.is_positive() {
            floor_div(&(&self.p + &s), &self.q)
        } else {
            floor_div(&(-&self.p - s - 1), &-&self.q)
        }
    }

    /// `1/(self − m)`, the continued-fraction step when `m = ⌊self⌋`.
    pub fn recip_shift(&self, m: &BigInt) -> Self {
        let shifted = &self.p - m * &self.q;
        let q_next = (&self.d - &shifted * &shifted) / &self.q;
        let p_next = -shifted;
        let x = Rational::new(p_next, q_next.clone());
        let y = Rational::new(self.k.clone(), q_next);
        Self::from_parts(&x, &y, &self.core)
    }

    pub fn conjugate(&self) -> Self {
        // (p − √d)/q = (−p + √d)/(−q)
        Self {
            p: -&self.p,
            q: -&self.q,
            d: self.d.clone(),
            core: self.core.clone(),
            k: self.k.clone(),
        }
    }

    pub fn neg(&self) -> Self {
        self.to_number().scale(&-Rational::one()).to_surd().unwrap()
    }

    pub fn recip(&self) -> Self {
        self.to_number()
            .recip()
            .and_then(|n| n.to_surd())
            .expect("reciprocal of an irrational is irrational")
    }

    pub fn add_rational(&self, r: &Rational) -> Self {
        self.to_number().add_rational(r).to_surd().unwrap()
    }

    pub fn cmp_rational(&self, r: &Rational) -> Ordering {
        // sign of ((p − r·q) + √d)/q
        let a = Rational::from_integer(self.p.clone()) - r * Rational::from_integer(self.q.clone());
        let s = sign_of(&a, &Rational::one(), &self.d);
        if self.q.is_negative() {
            s.reverse()
        } else {
            s
        }
    }

    /// Compares the value with `num/den` (`den > 0`) using integer arithmetic
    /// only.
    pub fn cmp_ratio(&self, num: &BigInt, den: &BigInt) -> Ordering {
        debug_assert!(den.is_positive());
        // sign of (p·den − num·q + den·√d) / (q·den)
        let a = &self.p * den - num * &self.q;
        let s = if !a.is_negative() || den * den * &self.d > &a * &a {
            Ordering::Greater
        } else {
            Ordering::Less
        };
        if self.q.is_negative() {
            s.reverse()
        } else {
            s
        }
    }

    /// Decimal expansion to `digits` places, truncated. Display only.
    pub fn approx(&self, digits: usize) -> String {
        let scale = BigInt::from(10u32).pow(digits as u32);
        let root = (&self.d * &scale * &scale).sqrt();
        // floor((p·scale + √(d·scale²)) / q)
        let scaled = if self.q.is_positive() {
            floor_div(&(&self.p * &scale + &root), &self.q)
        } else {
            floor_div(&(-&self.p * &scale - &root - 1), &-&self.q)
        };
        decimal_floor_string(&scaled, digits)
    }
}

impl PartialOrd for QuadraticSurd {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for QuadraticSurd {
    fn cmp(&self, other: &Self) -> Ordering {
        self.to_number().cmp(&other.to_number())
    }
}

impl fmt::Display for QuadraticSurd {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}+sqrt({}))/{}", self.p, self.d, self.q)
    }
}

impl FromStr for QuadraticSurd {
    type Err = Error;

    /// Accepts `(p+sqrt(d))/q`, `(p-sqrt(d))/q`, `p+sqrt(d)`, `sqrt(d)`,
    /// `-sqrt(d)/q` and the like; whitespace is ignored.
    fn from_str(text: &str) -> Result<Self> {
        let s: String = text.chars().filter(|c| !c.is_whitespace()).collect();
        let bad = || Error::Parse(format!("invalid surd `{text}`"));
        let (numerator, q) = match s.rfind('/') {
            Some(i) if s[..i].ends_with(')') => {
                let q: BigInt = s[i + 1..].parse().map_err(|_| bad())?;
                let head = &s[..i];
                let inner = if head.starts_with('(') && head.ends_with("))") {
                    &head[1..head.len() - 1]
                } else {
                    head
                };
                (inner.to_string(), q)
            }
            Some(_) => return Err(bad()),
            None => (s.clone(), BigInt::one()),
        };
        let at = numerator.find("sqrt(").ok_or_else(bad)?;
        if !numerator.ends_with(')') {
            return Err(bad());
        }
        let d: BigInt = numerator[at + 5..numerator.len() - 1]
            .parse()
            .map_err(|_| bad())?;
        let (p, negative_root) = match &numerator[..at] {
            "" | "+" => (BigInt::zero(), false),
            "-" => (BigInt::zero(), true),
            prefix => {
                let (p, sign) = prefix.split_at(prefix.len() - 1);
                let negative = match sign {
                    "+" => false,
                    "-" => true,
                    _ => return Err(bad()),
                };
                (p.parse().map_err(|_| bad())?, negative)
            }
        };
        if negative_root {
            Self::new(-p, -q, d)
        } else {
            Self::new(p, q, d)
        }
    }
}
