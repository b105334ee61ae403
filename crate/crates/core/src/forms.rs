//! Binary quadratic forms `Q(x, y) = a·x² + h·x·y + b·y²` with rational
//! coefficients.

use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use serde::Serialize;

use crate::error::{Error, Result};
use crate::exact::{
    format_rational, parse_rational, rational_is_square, QuadraticNumber, QuadraticSurd, Rational,
};
use crate::lattice::{LatticeVector, UnimodularMap};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum FormClass {
    PositiveDefinite,
    NegativeDefinite,
    IndefiniteAnisotropic,
    IndefiniteIsotropic,
    Degenerate,
}

impl fmt::Display for FormClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            FormClass::PositiveDefinite => "positive-definite",
            FormClass::NegativeDefinite => "negative-definite",
            FormClass::IndefiniteAnisotropic => "indefinite-anisotropic",
            FormClass::IndefiniteIsotropic => "indefinite-isotropic",
            FormClass::Degenerate => "degenerate",
        };
        f.write_str(s)
    }
}

#[derive(Clone, Debug)]
pub struct BinaryQuadraticForm {
    a: Rational,
    h: Rational,
    b: Rational,
    // integer multiples of (a, h, b) by the common denominator
    scaled: [BigInt; 3],
    denom: BigInt,
}

impl PartialEq for BinaryQuadraticForm {
    fn eq(&self, other: &Self) -> bool {
        (&self.a, &self.h, &self.b) == (&other.a, &other.h, &other.b)
    }
}

impl Eq for BinaryQuadraticForm {}

impl BinaryQuadraticForm {
    pub fn new(a: Rational, h: Rational, b: Rational) -> Result<Self> {
        if a.is_zero() && h.is_zero() && b.is_zero() {
            return Err(Error::ZeroForm);
        }
        let denom = a.denom().lcm(h.denom()).lcm(b.denom());
        let lift = |r: &Rational| (r * Rational::from_integer(denom.clone())).to_integer();
        let scaled = [lift(&a), lift(&h), lift(&b)];
        Ok(Self {
            a,
            h,
            b,
            scaled,
            denom,
        })
    }

    pub fn from_ints(a: i64, h: i64, b: i64) -> Result<Self> {
        Self::new(
            Rational::from_integer(a.into()),
            Rational::from_integer(h.into()),
            Rational::from_integer(b.into()),
        )
    }

    pub fn a(&self) -> &Rational {
        &self.a
    }

    pub fn h(&self) -> &Rational {
        &self.h
    }

    pub fn b(&self) -> &Rational {
        &self.b
    }

    /// `Δ = h² − 4ab`
    pub fn discriminant(&self) -> Rational {
        &self.h * &self.h - Rational::from_integer(BigInt::from(4)) * &self.a * &self.b
    }

    pub fn evaluate(&self, v: &LatticeVector) -> Rational {
        Rational::new(self.scaled_value(v), self.denom.clone())
    }

    /// Sign of `Q(v)`, in integer arithmetic.
    pub fn sign_at(&self, v: &LatticeVector) -> Ordering {
        self.scaled_value(v).sign().cmp(&num_bigint::Sign::NoSign)
    }

    fn scaled_value(&self, v: &LatticeVector) -> BigInt {
        let [a, h, b] = &self.scaled;
        a * &v.x * &v.x + h * &v.x * &v.y + b * &v.y * &v.y
    }

    pub fn classify(&self) -> FormClass {
        let disc = self.discriminant();
        match disc.cmp(&Rational::zero()) {
            Ordering::Less if self.a.is_positive() => FormClass::PositiveDefinite,
            Ordering::Less => FormClass::NegativeDefinite,
            Ordering::Equal => FormClass::Degenerate,
            Ordering::Greater if rational_is_square(&disc) => FormClass::IndefiniteIsotropic,
            Ordering::Greater => FormClass::IndefiniteAnisotropic,
        }
    }

    /// Errors unless the form is indefinite and does not represent zero.
    pub fn require_anisotropic(&self) -> Result<()> {
        match self.classify() {
            FormClass::IndefiniteAnisotropic => Ok(()),
            other => Err(Error::Classification(other)),
        }
    }

    /// Roots `α > β` of `b·t² + h·t + a = 0`, so that
    /// `Q(x, y) = b·(y − α·x)·(y − β·x)`: the slopes of the two zero lines.
    pub fn slope_roots(&self) -> Result<(QuadraticSurd, QuadraticSurd)> {
        self.require_anisotropic()?;
        Ok(quadratic_roots(&self.b, &self.h, &self.discriminant()))
    }

    /// Roots of `a·s² + h·s + b = 0`, i.e. of `Q(s, 1) = 0`, larger first.
    /// These are the Farey-tree endpoints of the river and the reciprocals
    /// of the slope roots.
    pub fn farey_roots(&self) -> Result<(QuadraticSurd, QuadraticSurd)> {
        self.require_anisotropic()?;
        Ok(quadratic_roots(&self.a, &self.h, &self.discriminant()))
    }

    /// The form `v ↦ Q(M·v)`.
    pub fn transform(&self, m: &UnimodularMap) -> Self {
        let [[m11, m12], [m21, m22]] = m.entries();
        let r = |x: &BigInt| Rational::from_integer(x.clone());
        let two = Rational::from_integer(BigInt::from(2));
        let a = self.evaluate(&LatticeVector::new(m11.clone(), m21.clone()));
        let b = self.evaluate(&LatticeVector::new(m12.clone(), m22.clone()));
        let h = &two * &self.a * r(m11) * r(m12)
            + &self.h * (r(m11) * r(m22) + r(m12) * r(m21))
            + &two * &self.b * r(m21) * r(m22);
        Self::new(a, h, b).expect("unimodular images of nonzero forms are nonzero")
    }

    pub fn negate(&self) -> Self {
        Self::new(-&self.a, -&self.h, -&self.b).unwrap()
    }
}

/// Roots of `lead·t² + mid·t + c` given its discriminant `mid² − 4·lead·c`,
/// which must be positive and not a rational square.
fn quadratic_roots(
    lead: &Rational,
    mid: &Rational,
    disc: &Rational,
) -> (QuadraticSurd, QuadraticSurd) {
    // √(n/m) = √(n·m)/m
    let radicand = disc.numer() * disc.denom();
    let two_lead = Rational::from_integer(BigInt::from(2)) * lead;
    let x = -mid / &two_lead;
    let y = Rational::one() / (&two_lead * Rational::from_integer(disc.denom().clone()));
    let root = QuadraticNumber::new(x, y, &radicand)
        .ok()
        .and_then(|n| n.to_surd())
        .expect("anisotropic discriminant is positive and not a square");
    let other = root.conjugate();
    if root > other {
        (root, other)
    } else {
        (other, root)
    }
}

impl fmt::Display for BinaryQuadraticForm {
    /// The CLI literal `a,h,b`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{},{},{}",
            format_rational(&self.a),
            format_rational(&self.h),
            format_rational(&self.b)
        )
    }
}

impl FromStr for BinaryQuadraticForm {
    type Err = Error;

    /// Parses `a,h,b` with rational components, e.g. `11/2,-5,1`.
    fn from_str(s: &str) -> Result<Self> {
        let parts: Vec<&str> = s.split(',').collect();
        if parts.len() != 3 {
            return Err(Error::Parse(format!(
                "form literal must be `a,h,b`, got `{s}`"
            )));
        }
        Self::new(
            parse_rational(parts[0])?,
            parse_rational(parts[1])?,
            parse_rational(parts[2])?,
        )
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn form(a: i64, h: i64, b: i64) -> BinaryQuadraticForm {
        BinaryQuadraticForm::from_ints(a, h, b).unwrap()
    }

    fn int(n: i64) -> Rational {
        Rational::from_integer(n.into())
    }

    fn s(p: i64, q: i64, d: i64) -> QuadraticSurd {
        QuadraticSurd::from_i64(p, q, d).unwrap()
    }

    #[test]
    fn evaluation() {
        let q = form(1, -2, -5);
        assert_eq!(q.evaluate(&LatticeVector::new(1, 0)), int(1));
        assert_eq!(q.evaluate(&LatticeVector::new(0, 1)), int(-5));
        assert_eq!(q.evaluate(&LatticeVector::new(1, 1)), int(-6));
        let half: BinaryQuadraticForm = "11/2,-5,1".parse().unwrap();
        assert_eq!(half.evaluate(&LatticeVector::new(1, 1)), Rational::new(3.into(), 2.into()));
        assert_eq!(half.sign_at(&LatticeVector::new(1, 1)), Ordering::Greater);
    }

    #[test]
    fn classification() {
        assert_eq!(form(1, 0, 1).classify(), FormClass::PositiveDefinite);
        assert_eq!(form(-1, 1, -1).classify(), FormClass::NegativeDefinite);
        assert_eq!(form(1, -2, -5).classify(), FormClass::IndefiniteAnisotropic);
        assert_eq!(form(1, 0, -1).classify(), FormClass::IndefiniteIsotropic);
        assert_eq!(form(1, 2, 1).classify(), FormClass::Degenerate);
        assert_eq!(form(0, 1, 0).classify(), FormClass::IndefiniteIsotropic);
        let quarter: BinaryQuadraticForm = "1/4,0,-1".parse().unwrap();
        assert_eq!(quarter.classify(), FormClass::IndefiniteIsotropic);
        assert_eq!(BinaryQuadraticForm::from_ints(0, 0, 0), Err(Error::ZeroForm));
    }

    #[test]
    fn slope_root_examples() {
        assert_eq!(form(1, -2, -5).slope_roots().unwrap(), (s(-1, 5, 6), s(1, -5, 6)));
        assert_eq!(form(11, -10, 2).slope_roots().unwrap(), (s(5, 2, 3), s(-5, -2, 3)));
        assert_eq!(form(1, 1, -1).slope_roots().unwrap(), (s(1, 2, 5), s(-1, -2, 5)));
        assert_eq!(
            form(1, 0, 1).slope_roots(),
            Err(Error::Classification(FormClass::PositiveDefinite))
        );
    }

    #[test]
    fn farey_root_examples() {
        assert_eq!(form(11, -10, 2).farey_roots().unwrap(), (s(5, 11, 3), s(-5, -11, 3)));
        assert_eq!(form(1, -2, -5).farey_roots().unwrap(), (s(1, 1, 6), s(-1, -1, 6)));
        assert_eq!(form(1, 1, -1).farey_roots().unwrap(), (s(-1, 2, 5), s(1, -2, 5)));
    }

    #[test]
    fn transform_examples() {
        let id = UnimodularMap::identity();
        assert_eq!(form(1, 0, 1).transform(&id), form(1, 0, 1));
        let swap = UnimodularMap::new(0, 1, 1, 0).unwrap();
        assert_eq!(form(1, -2, -5).transform(&swap), form(-5, -2, 1));
    }

    #[test]
    fn literal_parsing() {
        assert_eq!("1,-2,-5".parse::<BinaryQuadraticForm>().unwrap(), form(1, -2, -5));
        assert_eq!(" 1 , -2 , -5 ".parse::<BinaryQuadraticForm>().unwrap(), form(1, -2, -5));
        assert!("1,-2".parse::<BinaryQuadraticForm>().is_err());
        assert!("1,x,2".parse::<BinaryQuadraticForm>().is_err());
        assert_eq!(form(1, -2, -5).to_string(), "1,-2,-5");
    }

    fn arb_form() -> impl Strategy<Value = BinaryQuadraticForm> {
        (-20i64..=20, -20i64..=20, -20i64..=20, 1i64..4)
            .prop_filter_map("zero form", |(a, h, b, den)| {
                BinaryQuadraticForm::new(
                    Rational::new(a.into(), den.into()),
                    int(h),
                    Rational::new(b.into(), 1.into()),
                )
                .ok()
            })
    }

    fn arb_anisotropic() -> impl Strategy<Value = BinaryQuadraticForm> {
        arb_form().prop_filter("anisotropic", |q| {
            q.classify() == FormClass::IndefiniteAnisotropic
        })
    }

    fn arb_map() -> impl Strategy<Value = UnimodularMap> {
        prop::collection::vec(0u8..4, 0..6).prop_map(|word| {
            let gens = [
                UnimodularMap::new(0, -1, 1, 0).unwrap(),
                UnimodularMap::new(1, 1, 0, 1).unwrap(),
                UnimodularMap::new(1, 0, 1, 1).unwrap(),
                UnimodularMap::new(0, 1, 1, 0).unwrap(),
            ];
            word.iter()
                .fold(UnimodularMap::identity(), |m, &g| m.compose(&gens[g as usize]))
        })
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(500))]

        #[test]
        fn transform_is_substitution(q in arb_form(), m in arb_map(), x in -9i64..9, y in -9i64..9) {
            let v = LatticeVector::new(x, y);
            let t = q.transform(&m);
            prop_assert_eq!(t.evaluate(&v), q.evaluate(&m.apply(&v)));
            prop_assert_eq!(t.discriminant(), q.discriminant());
        }

        #[test]
        fn roots_factor_the_form(q in arb_anisotropic()) {
            let (alpha, beta) = q.slope_roots().unwrap();
            prop_assert!(alpha > beta);
            let (a, b) = (alpha.to_number(), beta.to_number());
            // α + β = −h/b, αβ = a/b
            let sum = (&a + &b).as_rational().cloned();
            let prod = (&a * &b).as_rational().cloned();
            prop_assert_eq!(sum, Some(-q.h() / q.b()));
            prop_assert_eq!(prod, Some(q.a() / q.b()));
            // Q(1, α) = 0
            let val = (&(&a * &a).scale(q.b()) + &a.scale(q.h())).add_rational(q.a());
            prop_assert!(val.is_zero());
        }

        #[test]
        fn farey_roots_are_reciprocal_slopes(q in arb_anisotropic()) {
            let (alpha, beta) = q.slope_roots().unwrap();
            let (fa, fb) = q.farey_roots().unwrap();
            let mut recips = vec![alpha.recip(), beta.recip()];
            recips.sort();
            let mut fs = vec![fa, fb];
            fs.sort();
            prop_assert_eq!(recips, fs);
        }
    }
}
