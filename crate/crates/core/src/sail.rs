//! Arnold sails of the zero-line pair of an indefinite anisotropic form.
//!
//! Every form is first moved by a unimodular change of basis into reduced
//! position, where the slopes satisfy `α > 1` and `−1 < β < 0`. In that
//! frame the sail of the angle containing `(1, 0)` has its corner at
//! `A₀ = (1, 0)`, climbs toward the line `y = α·x` through the even
//! convergents of `α`, and descends toward `y = β·x` through the even
//! convergents of `−β`. Reading edge lengths and vertex sines along it gives
//! the LLS sequence
//!
//! ```text
//! …, b₃, b₂, b₁, a₀, a₁, a₂, …    α = [a₀; a₁, a₂, …],  −β = [0; b₁, b₂, …]
//! ```
//!
//! with `a₀` the length of the edge `A₀A₁` and `b₁` the sine at `A₀`.

mod brute;

pub use brute::brute_sail;

use std::cmp::Ordering;

use num_bigint::BigInt;
use num_traits::{One, Zero};
use serde::Serialize;

use crate::cfrac::{convergents_of_terms, surd_terms};
use crate::error::{Error, Result};
use crate::exact::{to_u64, QuadraticSurd, Rational};
use crate::forms::BinaryQuadraticForm;
use crate::lattice::{integer_length, integer_sine, LatticeVector, UnimodularMap};

/// A form together with the change of basis that puts it in reduced
/// position: `reduced(v) = original(map · v)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NormalizedForm {
    pub original: BinaryQuadraticForm,
    pub map: UnimodularMap,
    pub reduced: BinaryQuadraticForm,
    pub alpha: QuadraticSurd,
    pub beta: QuadraticSurd,
}

/// Contiguous window of the bi-infinite LLS sequence. `anchor` is the
/// position of `a₀`, the length of the edge leaving the corner vertex.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct LLSWindow {
    pub terms: Vec<u64>,
    pub anchor: usize,
}

impl LLSWindow {
    /// Term `a_i` by its sequence index (`i = 0` at the anchor).
    pub fn get(&self, i: isize) -> Option<u64> {
        let pos = self.anchor as isize + i;
        (pos >= 0).then(|| self.terms.get(pos as usize).copied()).flatten()
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Frame {
    Original,
    Reduced,
}

/// Consecutive sail vertices, ordered from the `β` arm toward the `α` arm.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SailPolyline {
    pub frame: Frame,
    pub vertices: Vec<LatticeVector>,
    /// Position of the corner `A₀` in `vertices`, when it is known.
    pub corner: Option<usize>,
}

fn is_reduced(alpha: &QuadraticSurd, beta: &QuadraticSurd) -> bool {
    alpha.cmp_rational(&Rational::one()) == Ordering::Greater
        && beta.cmp_rational(&Rational::zero()) == Ordering::Less
        && beta.cmp_rational(&-Rational::one()) == Ordering::Greater
}

fn normalize_budget(form: &BinaryQuadraticForm) -> usize {
    let disc = form.discriminant();
    let bits = disc.numer().bits() + disc.denom().bits();
    4 * bits as usize + 64
}

/// Moves `q` into reduced position by repeating
/// `(α, β) ↦ (1/(α − m), 1/(β − m))`, `m = ⌊α⌋`, re-sorting the pair when
/// the step swaps their order.
pub fn normalize(q: &BinaryQuadraticForm) -> Result<NormalizedForm> {
    let (mut alpha, mut beta) = q.slope_roots()?;
    let mut map = UnimodularMap::identity();
    let budget = normalize_budget(q);
    let mut steps = 0;
    while !is_reduced(&alpha, &beta) {
        if steps == budget {
            return Err(Error::BudgetExceeded(budget));
        }
        steps += 1;
        let m = alpha.floor();
        // (x, y) ↦ (y, x + m·y) sends slope t to 1/(t − m)
        let step = UnimodularMap::new(0, 1, 1, m.clone()).unwrap();
        map = map.compose(&step);
        let (a, b) = (alpha.recip_shift(&m), beta.recip_shift(&m));
        (alpha, beta) = if a > b { (a, b) } else { (b, a) };
    }
    let reduced = q.transform(&map);
    assert_eq!(
        reduced.slope_roots()?,
        (alpha.clone(), beta.clone()),
        "tracked slopes disagree with the reduced form"
    );
    Ok(NormalizedForm {
        original: q.clone(),
        map,
        reduced,
        alpha,
        beta,
    })
}

/// LLS terms `b_{n_left}, …, b₁, a₀, …, a_{n_right−1}`, anchored at `a₀`.
pub fn lls_window(q: &BinaryQuadraticForm, n_left: usize, n_right: usize) -> Result<LLSWindow> {
    if n_right == 0 {
        return Err(Error::OutOfDomain("window must include a₀".into()));
    }
    let nf = normalize(q)?;
    window_from_slopes(&nf.alpha, &nf.beta, n_left, n_right)
}

pub(crate) fn window_from_slopes(
    alpha: &QuadraticSurd,
    beta: &QuadraticSurd,
    n_left: usize,
    n_right: usize,
) -> Result<LLSWindow> {
    let neg_beta = beta.neg();
    // −β = [0; b₁, b₂, …]: drop the leading zero
    let left: Vec<BigInt> = surd_terms(&neg_beta).skip(1).take(n_left).collect();
    let right: Vec<BigInt> = surd_terms(alpha).take(n_right).collect();
    let terms = left
        .iter()
        .rev()
        .chain(right.iter())
        .map(to_u64)
        .collect::<Result<Vec<_>>>()?;
    Ok(LLSWindow {
        terms,
        anchor: n_left,
    })
}

/// Vertices `A_{−k}, …, A_k` of the canonical sail of a reduced pair, in
/// reduced coordinates.
pub(crate) fn reduced_vertices(
    alpha: &QuadraticSurd,
    beta: &QuadraticSurd,
    k: usize,
) -> Vec<LatticeVector> {
    // A_j = (q_{2j−2}, p_{2j−2}) of α for j ≥ 1
    let up = convergents_of_terms(surd_terms(alpha), 2 * k);
    // A_{−j} = (q_{2j}, −p_{2j}) of −β for j ≥ 1
    let down = convergents_of_terms(surd_terms(&beta.neg()), 2 * k + 1);
    let mut out = Vec::with_capacity(2 * k + 1);
    for j in (1..=k).rev() {
        let c = &down[2 * j];
        out.push(LatticeVector::new(c.denom().clone(), -c.numer()));
    }
    out.push(LatticeVector::new(1, 0));
    for j in 1..=k {
        let c = &up[2 * j - 2];
        out.push(LatticeVector::new(c.denom().clone(), c.numer().clone()));
    }
    out
}

/// Sail vertices `A_{−k}, …, A_k` in the original coordinates of `q`.
pub fn sail_vertices(q: &BinaryQuadraticForm, k: usize) -> Result<SailPolyline> {
    let nf = normalize(q)?;
    Ok(SailPolyline {
        frame: Frame::Original,
        vertices: reduced_vertices(&nf.alpha, &nf.beta, k)
            .iter()
            .map(|v| nf.map.apply(v))
            .collect(),
        corner: Some(k),
    })
}

/// Same vertices as [`sail_vertices`], left in the reduced frame.
pub fn reduced_sail_vertices(q: &BinaryQuadraticForm, k: usize) -> Result<SailPolyline> {
    let nf = normalize(q)?;
    Ok(SailPolyline {
        frame: Frame::Reduced,
        vertices: reduced_vertices(&nf.alpha, &nf.beta, k),
        corner: Some(k),
    })
}

/// Reads the LLS sequence off a polyline: edge lengths at even positions,
/// vertex sines in between. The anchor sits on the edge leaving the corner
/// (the first vertex when no corner is marked).
pub fn lls_from_vertices(s: &SailPolyline) -> Result<LLSWindow> {
    let vs = &s.vertices;
    if vs.len() < 2 {
        return Err(Error::DegeneratePolyline {
            needed: 2,
            got: vs.len(),
        });
    }
    let mut terms = Vec::with_capacity(2 * vs.len() - 3);
    for i in 0..vs.len() - 1 {
        if i > 0 {
            terms.push(to_u64(&integer_sine(&vs[i - 1], &vs[i], &vs[i + 1])?)?);
        }
        terms.push(to_u64(&integer_length(&vs[i], &vs[i + 1])?)?);
    }
    let anchor = s
        .corner
        .map(|c| 2 * c)
        .filter(|&a| a < terms.len())
        .unwrap_or(0);
    Ok(LLSWindow { terms, anchor })
}

/// Which edge-angle identity failed.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum DualIdentity {
    /// `lsin ∠A_i A_{i+1} A_{i+2} = ll B_i B_{i+1}`
    SineOfAEqualsLengthOfB,
    /// `lsin ∠B_i B_{i+1} B_{i+2} = ll A_{i+1} A_{i+2}`
    SineOfBEqualsLengthOfA,
    /// a vertex of the adjacent sail lies outside its angle
    OutsideAngle,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct DualCounterexample {
    pub index: i64,
    pub identity: DualIdentity,
    pub lhs: String,
    pub rhs: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct DualReport {
    pub passed: bool,
    pub checked: usize,
    pub counterexample: Option<DualCounterexample>,
}

/// Builds the canonical sail `A` and the sail `B` of the adjacent angle
/// (across the `α` line), both in original coordinates, and checks the
/// edge-angle duality on indices `i ∈ [−k, k)`.
pub fn dual_check(q: &BinaryQuadraticForm, k: usize) -> Result<DualReport> {
    let nf = normalize(q)?;
    let span = k + 2;
    let a_red = reduced_vertices(&nf.alpha, &nf.beta, span);
    // Rotating the adjacent angle by −90° gives the reduced pair
    // (−1/β, −1/α); rotate its canonical sail back.
    let rot = UnimodularMap::new(0, -1, 1, 0).unwrap();
    let alpha_star = nf.beta.recip().neg();
    let beta_star = nf.alpha.recip().neg();
    let b_red: Vec<LatticeVector> = reduced_vertices(&alpha_star, &beta_star, span)
        .iter()
        .map(|v| rot.apply(v))
        .collect();

    let a = |i: i64| nf.map.apply(&a_red[(i + span as i64) as usize]);
    // B'_m = B_{−m}
    let b_at = |m: i64| &b_red[(span as i64 - m) as usize];
    let b = |m: i64| nf.map.apply(b_at(m));

    let k = k as i64;
    let mut checked = 0;
    for i in -k..k {
        for m in [i, i + 1, i + 2] {
            let v = b_at(m);
            // above both lines y = αx and y = βx
            let above = |s: &QuadraticSurd| match v.x.sign() {
                num_bigint::Sign::NoSign => v.y > BigInt::zero(),
                num_bigint::Sign::Plus => s.cmp_ratio(&v.y, &v.x) == Ordering::Less,
                num_bigint::Sign::Minus => s.cmp_ratio(&-&v.y, &-&v.x) == Ordering::Greater,
            };
            if !(above(&nf.alpha) && above(&nf.beta)) {
                return Ok(fail(checked, m, DualIdentity::OutsideAngle, v.to_string(), String::new()));
            }
        }
        let sine_a = integer_sine(&a(i), &a(i + 1), &a(i + 2))?;
        let len_b = integer_length(&b(i), &b(i + 1))?;
        if sine_a != len_b {
            return Ok(fail(
                checked,
                i,
                DualIdentity::SineOfAEqualsLengthOfB,
                sine_a.to_string(),
                len_b.to_string(),
            ));
        }
        let sine_b = integer_sine(&b(i), &b(i + 1), &b(i + 2))?;
        let len_a = integer_length(&a(i + 1), &a(i + 2))?;
        if sine_b != len_a {
            return Ok(fail(
                checked,
                i,
                DualIdentity::SineOfBEqualsLengthOfA,
                sine_b.to_string(),
                len_a.to_string(),
            ));
        }
        checked += 1;
    }
    Ok(DualReport {
        passed: true,
        checked,
        counterexample: None,
    })
}

fn fail(checked: usize, index: i64, identity: DualIdentity, lhs: String, rhs: String) -> DualReport {
    DualReport {
        passed: false,
        checked,
        counterexample: Some(DualCounterexample {
            index,
            identity,
            lhs,
            rhs,
        }),
    }
}
