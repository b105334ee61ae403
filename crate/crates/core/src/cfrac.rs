//! Continued fractions of rationals and quadratic surds, convergents, and
//! walks on the Stern–Brocot (Farey) tree.

use std::cmp::Ordering;
use std::collections::HashMap;
use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::exact::{QuadraticNumber, QuadraticSurd, Rational};
use crate::topograph::{Turn, TurnSequence};

/// Simple continued fraction `[a0; a1, a2, …]`, possibly eventually periodic.
///
/// Finite fractions have an empty `period` and end in a term ≥ 2 unless they
/// consist of a single term. A non-empty `period` is minimal.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct ContinuedFraction {
    preperiod: Vec<BigInt>,
    period: Vec<BigInt>,
}

/// Exact value of a continued fraction.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum CfValue {
    Rational(Rational),
    Surd(QuadraticSurd),
}

impl ContinuedFraction {
    /// Builds a fraction from raw terms, validating positivity of every term
    /// after the first and canonicalizing the finite tail.
    pub fn new(preperiod: Vec<BigInt>, period: Vec<BigInt>) -> Result<Self> {
        if preperiod.is_empty() && period.is_empty() {
            return Err(Error::OutOfDomain("empty continued fraction".into()));
        }
        let all = preperiod.iter().chain(period.iter());
        if all.skip(1).any(|t| !t.is_positive()) || period.iter().any(|t| !t.is_positive()) {
            return Err(Error::OutOfDomain(
                "continued fraction terms after the first must be positive".into(),
            ));
        }
        let mut cf = Self { preperiod, period };
        cf.canonicalize();
        Ok(cf)
    }

    fn canonicalize(&mut self) {
        if self.period.is_empty() {
            // [.., a, 1] == [.., a + 1]
            if self.preperiod.len() > 1 && self.preperiod.last().unwrap().is_one() {
                self.preperiod.pop();
                *self.preperiod.last_mut().unwrap() += 1;
            }
            return;
        }
        // minimal period
        let n = self.period.len();
        if let Some(len) = (1..=n).find(|&len| {
            n.is_multiple_of(len) && (0..n).all(|i| self.period[i] == self.period[i % len])
        }) {
            self.period.truncate(len);
        }
        // absorb preperiod tail into the period: [.., x, (y.., x)] == [.., (x, y..)]
        while self.preperiod.len() > 1 && self.preperiod.last() == self.period.last() {
            let x = self.preperiod.pop().unwrap();
            self.period.pop();
            self.period.insert(0, x);
        }
        if self.preperiod.len() == 1
            && self.preperiod.last() == self.period.last()
            && self.preperiod[0].is_positive()
        {
            let x = self.preperiod.pop().unwrap();
            self.period.pop();
            self.period.insert(0, x);
        }
    }

    pub fn preperiod(&self) -> &[BigInt] {
        &self.preperiod
    }

    pub fn period(&self) -> &[BigInt] {
        &self.period
    }

    pub fn is_finite(&self) -> bool {
        self.period.is_empty()
    }

    /// Terms in order; infinite for periodic fractions.
    pub fn terms(&self) -> impl Iterator<Item = &BigInt> + '_ {
        let cycle: Box<dyn Iterator<Item = &BigInt>> = if self.period.is_empty() {
            Box::new(std::iter::empty())
        } else {
            Box::new(self.period.iter().cycle())
        };
        self.preperiod.iter().chain(cycle)
    }

    pub fn leading_term(&self) -> &BigInt {
        self.terms().next().unwrap()
    }

    /// Exact value. Periodic fractions evaluate to the surd they expand.
    pub fn value(&self) -> CfValue {
        if self.period.is_empty() {
            return CfValue::Rational(eval_finite(&self.preperiod));
        }
        // purely periodic tail x = [b1, …, bk, x] satisfies
        // Q_k·x² + (Q_{k-1} − P_k)·x − P_{k-1} = 0 with x > 1
        let (p_prev, q_prev, p_k, q_k) = last_two_convergents(&self.period);
        let g = q_k.gcd(&(&q_prev - &p_k)).gcd(&p_prev);
        let a = q_k / &g;
        let b = (&q_prev - &p_k) / &g;
        let c = -p_prev / &g;
        let disc = &b * &b - BigInt::from(4) * &a * &c;
        let two_a = Rational::from_integer(BigInt::from(2) * &a);
        let tail = QuadraticNumber::new(
            Rational::from_integer(-b) / &two_a,
            Rational::one() / &two_a,
            &disc,
        )
        .expect("periodic continued fractions are irrational");
        // fold the preperiod: v = a_i + 1/v
        let value = self.preperiod.iter().rev().fold(tail, |acc, term| {
            acc.recip()
                .unwrap()
                .add_rational(&Rational::from_integer(term.clone()))
        });
        CfValue::Surd(value.to_surd().unwrap())
    }
}

fn eval_finite(terms: &[BigInt]) -> Rational {
    let mut it = terms.iter().rev();
    let last = Rational::from_integer(it.next().unwrap().clone());
    it.fold(last, |acc, t| Rational::from_integer(t.clone()) + acc.recip())
}

/// `(P_{k-1}, Q_{k-1}, P_k, Q_k)` for a term list, with `P_{-1}/Q_{-1} = 1/0`.
fn last_two_convergents(terms: &[BigInt]) -> (BigInt, BigInt, BigInt, BigInt) {
    let (mut p0, mut q0) = (BigInt::one(), BigInt::zero());
    let (mut p1, mut q1) = (terms[0].clone(), BigInt::one());
    for t in &terms[1..] {
        let p2 = t * &p1 + &p0;
        let q2 = t * &q1 + &q0;
        p0 = std::mem::replace(&mut p1, p2);
        q0 = std::mem::replace(&mut q1, q2);
    }
    (p0, q0, p1, q1)
}

impl fmt::Display for ContinuedFraction {
    /// `[a0; a1, a2, (b1, b2)]`, parentheses marking the period.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let join = |ts: &[BigInt]| {
            ts.iter()
                .map(|t| t.to_string())
                .collect::<Vec<_>>()
                .join(", ")
        };
        let period = (!self.period.is_empty()).then(|| format!("({})", join(&self.period)));
        match self.preperiod.split_first() {
            None => write!(f, "[{}]", period.unwrap()),
            Some((first, rest)) => {
                let mut tail: Vec<String> = rest.iter().map(|t| t.to_string()).collect();
                tail.extend(period);
                if tail.is_empty() {
                    write!(f, "[{first}]")
                } else {
                    write!(f, "[{first}; {}]", tail.join(", "))
                }
            }
        }
    }
}

/// Canonical finite expansion by the Euclidean algorithm.
pub fn cf_of_rational(r: &Rational) -> ContinuedFraction {
    let mut num = r.numer().clone();
    let mut den = r.denom().clone();
    let mut terms = Vec::new();
    while !den.is_zero() {
        let (q, rem) = num.div_mod_floor(&den);
        terms.push(q);
        num = std::mem::replace(&mut den, rem);
    }
    ContinuedFraction {
        preperiod: terms,
        period: Vec::new(),
    }
}

/// Expansion of a quadratic irrational, with the period found as the first
/// repeated canonical `(p, q, d)` state.
pub fn cf_of_surd(s: &QuadraticSurd, max_terms: usize) -> Result<ContinuedFraction> {
    let mut seen: HashMap<QuadraticSurd, usize> = HashMap::new();
    let mut terms = Vec::new();
    let mut state = s.clone();
    while terms.len() <= max_terms {
        if let Some(&start) = seen.get(&state) {
            let period = terms.split_off(start);
            return Ok(ContinuedFraction {
                preperiod: terms,
                period,
            });
        }
        seen.insert(state.clone(), terms.len());
        let a = state.floor();
        state = state.recip_shift(&a);
        terms.push(a);
    }
    Err(Error::PeriodNotFound(max_terms))
}

/// Fraction `p/q` with `q ≥ 0`, `gcd(|p|, q) = 1`; `1/0` is the point at
/// infinity.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct FareyFraction {
    p: BigInt,
    q: BigInt,
}

impl FareyFraction {
    pub fn new(p: impl Into<BigInt>, q: impl Into<BigInt>) -> Result<Self> {
        let (mut p, mut q) = (p.into(), q.into());
        if p.is_zero() && q.is_zero() {
            return Err(Error::OutOfDomain("0/0 is not a Farey fraction".into()));
        }
        if q.is_negative() || (q.is_zero() && p.is_negative()) {
            p = -p;
            q = -q;
        }
        if !p.gcd(&q).is_one() {
            return Err(Error::NotPrimitive(p, q));
        }
        Ok(Self { p, q })
    }

    pub fn infinity() -> Self {
        Self {
            p: BigInt::one(),
            q: BigInt::zero(),
        }
    }

    pub fn numer(&self) -> &BigInt {
        &self.p
    }

    pub fn denom(&self) -> &BigInt {
        &self.q
    }

    pub fn is_infinite(&self) -> bool {
        self.q.is_zero()
    }

    pub fn mediant(&self, other: &Self) -> Self {
        Self {
            p: &self.p + &other.p,
            q: &self.q + &other.q,
        }
    }

    pub fn to_rational(&self) -> Option<Rational> {
        (!self.q.is_zero()).then(|| Rational::new(self.p.clone(), self.q.clone()))
    }

    /// Compares a surd against this fraction; everything is below `1/0`.
    pub fn cmp_surd(&self, s: &QuadraticSurd) -> Ordering {
        if self.q.is_zero() {
            Ordering::Greater
        } else {
            s.cmp_ratio(&self.p, &self.q).reverse()
        }
    }
}

impl fmt::Display for FareyFraction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}/{}", self.p, self.q)
    }
}

/// First `k` convergents `p_ν/q_ν`; fewer if the fraction is finite and
/// shorter.
pub fn convergents(cf: &ContinuedFraction, k: usize) -> Vec<FareyFraction> {
    convergents_of_terms(cf.terms().cloned(), k)
}

pub(crate) fn convergents_of_terms(
    terms: impl Iterator<Item = BigInt>,
    k: usize,
) -> Vec<FareyFraction> {
    let (mut p0, mut q0) = (BigInt::one(), BigInt::zero());
    let (mut p1, mut q1) = (BigInt::zero(), BigInt::one());
    let mut out = Vec::with_capacity(k);
    for a in terms.take(k) {
        let p2 = &a * &p0 + &p1;
        let q2 = &a * &q0 + &q1;
        p1 = std::mem::replace(&mut p0, p2);
        q1 = std::mem::replace(&mut q0, q2);
        out.push(FareyFraction {
            p: p0.clone(),
            q: q0.clone(),
        });
    }
    out
}

/// Lazy continued-fraction terms of a surd, without period detection.
pub fn surd_terms(s: &QuadraticSurd) -> impl Iterator<Item = BigInt> {
    let mut state = s.clone();
    std::iter::repeat_with(move || {
        let a = state.floor();
        state = state.recip_shift(&a);
        a
    })
}

/// First `n` letters of `L^{a0} R^{a1} L^{a2} …`, the Farey-tree path toward
/// the value of `cf`.
pub fn farey_turns(cf: &ContinuedFraction, n: usize) -> Result<TurnSequence> {
    let a0 = cf.leading_term();
    let has_more = cf.terms().nth(1).is_some();
    if a0.is_negative() || (a0.is_zero() && !has_more) {
        return Err(Error::OutOfDomain(format!(
            "Farey paths need a positive value, got {cf}"
        )));
    }
    let mut letters = Vec::with_capacity(n);
    let mut turn = Turn::Left;
    for a in cf.terms() {
        if letters.len() >= n {
            break;
        }
        let mut left = a.clone();
        while left.is_positive() && letters.len() < n {
            letters.push(turn);
            left -= 1;
        }
        turn = turn.flip();
    }
    Ok(TurnSequence::new(letters))
}

/// Result of a Stern–Brocot descent: `left < β, α < right` as Farey
/// fractions and `mediant` is the first mediant strictly between them.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Separation {
    pub left: FareyFraction,
    pub mediant: FareyFraction,
    pub right: FareyFraction,
}

/// Descends from `(0/1, 1/0)` taking mediants until one separates the two
/// positive surds.
pub fn separate(alpha: &QuadraticSurd, beta: &QuadraticSurd) -> Result<Separation> {
    if alpha == beta {
        return Err(Error::EqualInputs);
    }
    for x in [alpha, beta] {
        if x.cmp_rational(&Rational::zero()) != Ordering::Greater {
            return Err(Error::OutOfDomain(format!("{x} is not positive")));
        }
    }
    let mut left = FareyFraction::new(0, 1).unwrap();
    let mut right = FareyFraction::infinity();
    loop {
        let mediant = left.mediant(&right);
        match (mediant.cmp_surd(alpha), mediant.cmp_surd(beta)) {
            (Ordering::Less, Ordering::Less) => left = mediant,
            (Ordering::Greater, Ordering::Greater) => right = mediant,
            _ => {
                return Ok(Separation {
                    left,
                    mediant,
                    right,
                })
            }
        }
    }
}
