//! Integer-lattice geometry in the plane: integer length, integer area,
//! integer sine, primitivity and the unimodular group.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use serde::{Serialize, Serializer};

use crate::error::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct LatticeVector {
    pub x: BigInt,
    pub y: BigInt,
}

impl LatticeVector {
    pub fn new(x: impl Into<BigInt>, y: impl Into<BigInt>) -> Self {
        Self {
            x: x.into(),
            y: y.into(),
        }
    }

    pub fn zero() -> Self {
        Self::new(0, 0)
    }

    pub fn is_zero(&self) -> bool {
        self.x.is_zero() && self.y.is_zero()
    }

    /// gcd of the coordinates; zero only for the zero vector.
    pub fn content(&self) -> BigInt {
        self.x.gcd(&self.y)
    }

    pub fn is_primitive(&self) -> bool {
        self.content().is_one()
    }

    /// Representative of the lax vector `±self` with `x > 0`, or `x = 0` and
    /// `y > 0`.
    pub fn lax(&self) -> Self {
        if self.x.is_negative() || (self.x.is_zero() && self.y.is_negative()) {
            -self
        } else {
            self.clone()
        }
    }

    pub fn scale(&self, k: &BigInt) -> Self {
        Self::new(&self.x * k, &self.y * k)
    }
}

/// `det(u, v) = u.x·v.y − u.y·v.x`
pub fn det(u: &LatticeVector, v: &LatticeVector) -> BigInt {
    &u.x * &v.y - &u.y * &v.x
}

impl Add for &LatticeVector {
    type Output = LatticeVector;
    fn add(self, rhs: &LatticeVector) -> LatticeVector {
        LatticeVector::new(&self.x + &rhs.x, &self.y + &rhs.y)
    }
}

impl Sub for &LatticeVector {
    type Output = LatticeVector;
    fn sub(self, rhs: &LatticeVector) -> LatticeVector {
        LatticeVector::new(&self.x - &rhs.x, &self.y - &rhs.y)
    }
}

impl Neg for &LatticeVector {
    type Output = LatticeVector;
    fn neg(self) -> LatticeVector {
        LatticeVector::new(-&self.x, -&self.y)
    }
}

impl fmt::Display for LatticeVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {})", self.x, self.y)
    }
}

impl Serialize for LatticeVector {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        use serde::ser::SerializeTuple;
        let mut t = serializer.serialize_tuple(2)?;
        t.serialize_element(&crate::report::JsonInt(&self.x))?;
        t.serialize_element(&crate::report::JsonInt(&self.y))?;
        t.end()
    }
}

/// Number of lattice points in the open segment `AB`, plus one.
pub fn integer_length(a: &LatticeVector, b: &LatticeVector) -> Result<BigInt> {
    if a == b {
        return Err(Error::DegenerateSegment);
    }
    Ok((b - a).content())
}

/// `|det(B − A, C − B)|`, the index of the sublattice spanned by the two
/// edge vectors. Zero iff the points are collinear.
pub fn integer_area(a: &LatticeVector, b: &LatticeVector, c: &LatticeVector) -> BigInt {
    det(&(b - a), &(c - b)).abs()
}

/// Integer sine of the angle `∠ABC`.
///
/// Panics if the area is not divisible by the product of the two integer
/// lengths, which would contradict the lattice theory this crate rests on.
pub fn integer_sine(a: &LatticeVector, b: &LatticeVector, c: &LatticeVector) -> Result<BigInt> {
    if a == b || b == c {
        return Err(Error::DegenerateAngle);
    }
    let area = integer_area(a, b, c);
    if area.is_zero() {
        return Err(Error::DegenerateAngle);
    }
    let lengths = integer_length(a, b)? * integer_length(b, c)?;
    let (sine, rem) = area.div_rem(&lengths);
    assert!(
        rem.is_zero(),
        "integer area {area} not divisible by length product {lengths}"
    );
    Ok(sine)
}

/// 2×2 integer matrix `[[a, b], [c, d]]` with determinant ±1, acting on
/// column vectors.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct UnimodularMap {
    a: BigInt,
    b: BigInt,
    c: BigInt,
    d: BigInt,
}

impl UnimodularMap {
    pub fn new(
        a: impl Into<BigInt>,
        b: impl Into<BigInt>,
        c: impl Into<BigInt>,
        d: impl Into<BigInt>,
    ) -> Result<Self> {
        let m = Self {
            a: a.into(),
            b: b.into(),
            c: c.into(),
            d: d.into(),
        };
        let det = m.det();
        if det.abs().is_one() {
            Ok(m)
        } else {
            Err(Error::NotUnimodular(det))
        }
    }

    pub fn identity() -> Self {
        Self::new(1, 0, 0, 1).unwrap()
    }

    /// Matrix whose columns are `first` and `second`.
    pub fn from_columns(first: &LatticeVector, second: &LatticeVector) -> Result<Self> {
        Self::new(
            first.x.clone(),
            second.x.clone(),
            first.y.clone(),
            second.y.clone(),
        )
    }

    /// Rows `[[a, b], [c, d]]`.
    pub fn entries(&self) -> [[&BigInt; 2]; 2] {
        [[&self.a, &self.b], [&self.c, &self.d]]
    }

    pub fn det(&self) -> BigInt {
        &self.a * &self.d - &self.b * &self.c
    }

    pub fn is_orientation_preserving(&self) -> bool {
        self.det().is_positive()
    }

    pub fn apply(&self, v: &LatticeVector) -> LatticeVector {
        LatticeVector::new(
            &self.a * &v.x + &self.b * &v.y,
            &self.c * &v.x + &self.d * &v.y,
        )
    }

    /// `self · other`, i.e. apply `other` first.
    pub fn compose(&self, other: &Self) -> Self {
        Self {
            a: &self.a * &other.a + &self.b * &other.c,
            b: &self.a * &other.b + &self.b * &other.d,
            c: &self.c * &other.a + &self.d * &other.c,
            d: &self.c * &other.b + &self.d * &other.d,
        }
    }

    pub fn invert(&self) -> Self {
        let det = self.det();
        Self {
            a: &det * &self.d,
            b: -(&det * &self.b),
            c: -(&det * &self.c),
            d: &det * &self.a,
        }
    }
}

impl Mul for &UnimodularMap {
    type Output = UnimodularMap;
    fn mul(self, rhs: &UnimodularMap) -> UnimodularMap {
        self.compose(rhs)
    }
}

impl fmt::Display for UnimodularMap {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[[{}, {}], [{}, {}]]", self.a, self.b, self.c, self.d)
    }
}

impl Serialize for UnimodularMap {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        use crate::report::JsonInt;
        [
            [JsonInt(&self.a), JsonInt(&self.b)],
            [JsonInt(&self.c), JsonInt(&self.d)],
        ]
        .serialize(serializer)
    }
}
