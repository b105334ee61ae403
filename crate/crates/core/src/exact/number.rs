use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use super::{squarefree_split, QuadraticSurd, Rational};
use crate::error::{Error, Result};

/// Element `x + y·√r` of the real quadratic field ℚ(√r).
///
/// `r` is the square-free radicand (≥ 2). `y` may be zero, in which case the
/// value is rational. Mixing elements of different fields in arithmetic is a
/// programming error and panics; comparison across fields is supported.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct QuadraticNumber {
    rational: Rational,
    coeff: Rational,
    radicand: BigInt,
}

impl QuadraticNumber {
    /// `x + y·√n` for any non-square `n > 0`; square factors of `n` are moved
    /// into `y`.
    pub fn new(x: Rational, y: Rational, n: &BigInt) -> Result<Self> {
        if n.is_negative() {
            return Err(Error::NegativeRadicand(n.clone()));
        }
        if n.is_zero() {
            return Err(Error::SquareRadicand(n.clone()));
        }
        let (core, k) = squarefree_split(n);
        if core.is_one() {
            return Err(Error::SquareRadicand(n.clone()));
        }
        Ok(Self::from_core(x, y * Rational::from_integer(k), core))
    }

    pub(crate) fn from_core(rational: Rational, coeff: Rational, radicand: BigInt) -> Self {
        Self {
            rational,
            coeff,
            radicand,
        }
    }

    pub fn from_rational(x: Rational, radicand: &BigInt) -> Result<Self> {
        Self::new(x, Rational::zero(), radicand)
    }

    pub fn rational_part(&self) -> &Rational {
        &self.rational
    }

    pub fn irrational_coeff(&self) -> &Rational {
        &self.coeff
    }

    pub fn radicand(&self) -> &BigInt {
        &self.radicand
    }

    pub fn is_zero(&self) -> bool {
        self.rational.is_zero() && self.coeff.is_zero()
    }

    pub fn as_rational(&self) -> Option<&Rational> {
        self.coeff.is_zero().then_some(&self.rational)
    }

    pub fn to_surd(&self) -> Option<QuadraticSurd> {
        if self.coeff.is_zero() {
            None
        } else {
            Some(QuadraticSurd::from_parts(
                &self.rational,
                &self.coeff,
                &self.radicand,
            ))
        }
    }

    pub fn conjugate(&self) -> Self {
        Self::from_core(self.rational.clone(), -&self.coeff, self.radicand.clone())
    }

    /// `x² − r·y²`
    pub fn norm(&self) -> Rational {
        &self.rational * &self.rational
            - &self.coeff * &self.coeff * Rational::from_integer(self.radicand.clone())
    }

    pub fn trace(&self) -> Rational {
        &self.rational + &self.rational
    }

    pub fn recip(&self) -> Option<Self> {
        if self.is_zero() {
            return None;
        }
        let n = self.norm();
        Some(Self::from_core(
            &self.rational / &n,
            -&self.coeff / &n,
            self.radicand.clone(),
        ))
    }

    pub fn signum(&self) -> Ordering {
        sign_of(&self.rational, &self.coeff, &self.radicand)
    }

    pub fn add_rational(&self, r: &Rational) -> Self {
        Self::from_core(&self.rational + r, self.coeff.clone(), self.radicand.clone())
    }

    pub fn scale(&self, r: &Rational) -> Self {
        Self::from_core(&self.rational * r, &self.coeff * r, self.radicand.clone())
    }

    fn same_field(&self, other: &Self) {
        assert_eq!(
            self.radicand, other.radicand,
            "arithmetic across different quadratic fields"
        );
    }
}

/// Sign of `x + y·√r` for rationals `x, y` and a non-square `r > 0`.
pub(crate) fn sign_of(x: &Rational, y: &Rational, r: &BigInt) -> Ordering {
    let sx = x.cmp(&Rational::zero());
    let sy = y.cmp(&Rational::zero());
    if sy == Ordering::Equal {
        return sx;
    }
    if sx == Ordering::Equal || sx == sy {
        return sy;
    }
    // opposite signs: compare x² with r·y²
    let lhs = x * x;
    let rhs = y * y * Rational::from_integer(r.clone());
    match lhs.cmp(&rhs) {
        Ordering::Greater => sx,
        Ordering::Less => sy,
        Ordering::Equal => Ordering::Equal,
    }
}

impl PartialOrd for QuadraticNumber {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for QuadraticNumber {
    fn cmp(&self, other: &Self) -> Ordering {
        if self.radicand == other.radicand {
            return (self - other).signum();
        }
        // sign of (c + y1·√r1) − y2·√r2 with c = x1 − x2
        let c = &self.rational - &other.rational;
        let left = sign_of(&c, &self.coeff, &self.radicand);
        let right = other.coeff.cmp(&Rational::zero());
        if right == Ordering::Equal {
            return left;
        }
        if left != right {
            return if left == Ordering::Equal {
                right.reverse()
            } else {
                left
            };
        }
        // same nonzero sign: compare squares
        let r1 = Rational::from_integer(self.radicand.clone());
        let r2 = Rational::from_integer(other.radicand.clone());
        let diff_rational =
            &c * &c + &self.coeff * &self.coeff * r1 - &other.coeff * &other.coeff * r2;
        let diff_coeff = Rational::from_integer(BigInt::from(2)) * &c * &self.coeff;
        let squares = sign_of(&diff_rational, &diff_coeff, &self.radicand);
        if left == Ordering::Greater {
            squares
        } else {
            squares.reverse()
        }
    }
}

impl Add for &QuadraticNumber {
    type Output = QuadraticNumber;
    fn add(self, rhs: &QuadraticNumber) -> QuadraticNumber {
        self.same_field(rhs);
        QuadraticNumber::from_core(
            &self.rational + &rhs.rational,
            &self.coeff + &rhs.coeff,
            self.radicand.clone(),
        )
    }
}

impl Sub for &QuadraticNumber {
    type Output = QuadraticNumber;
    fn sub(self, rhs: &QuadraticNumber) -> QuadraticNumber {
        self + &(-rhs)
    }
}

impl Mul for &QuadraticNumber {
    type Output = QuadraticNumber;
    fn mul(self, rhs: &QuadraticNumber) -> QuadraticNumber {
        self.same_field(rhs);
        let r = Rational::from_integer(self.radicand.clone());
        QuadraticNumber::from_core(
            &self.rational * &rhs.rational + &self.coeff * &rhs.coeff * r,
            &self.rational * &rhs.coeff + &self.coeff * &rhs.rational,
            self.radicand.clone(),
        )
    }
}

impl Neg for &QuadraticNumber {
    type Output = QuadraticNumber;
    fn neg(self) -> QuadraticNumber {
        QuadraticNumber::from_core(-&self.rational, -&self.coeff, self.radicand.clone())
    }
}

impl fmt::Display for QuadraticNumber {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{} + {}*sqrt({})",
            super::format_rational(&self.rational),
            super::format_rational(&self.coeff),
            self.radicand
        )
    }
}
