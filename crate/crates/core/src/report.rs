//! Serializable summaries of an analysis, as emitted by the command-line
//! tool. Integers that fit in `i64` are JSON numbers and larger ones are
//! decimal strings; rationals are strings such as `"-3/2"`; surds are
//! strings such as `"(1+sqrt(5))/2"`.

use num_bigint::BigInt;
use num_traits::ToPrimitive;
use serde::{Serialize, Serializer};

use crate::concord::{check_theorem, theorem_windows, MatchReport};
use crate::error::Result;
use crate::exact::{format_rational, Rational};
use crate::forms::{BinaryQuadraticForm, FormClass};
use crate::lattice::{LatticeVector, UnimodularMap};
use crate::sail::{lls_window, normalize, sail_vertices, LLSWindow};
use crate::topograph::{farey_label, river, turn_runs, Direction, TopographEdge, TurnSequence};

/// JSON number when it fits in `i64`, decimal string otherwise.
pub struct JsonInt<'a>(pub &'a BigInt);

impl Serialize for JsonInt<'_> {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        match self.0.to_i64() {
            Some(n) => s.serialize_i64(n),
            None => s.collect_str(self.0),
        }
    }
}

pub(crate) fn rational<S: Serializer>(r: &Rational, s: S) -> std::result::Result<S::Ok, S::Error> {
    s.collect_str(&format_rational(r))
}

pub(crate) fn rationals<S: Serializer>(
    rs: &[Rational],
    s: S,
) -> std::result::Result<S::Ok, S::Error> {
    s.collect_seq(rs.iter().map(format_rational))
}

fn text<T: ToString>(items: &[T]) -> Vec<String> {
    items.iter().map(ToString::to_string).collect()
}

#[derive(Clone, Debug, Serialize)]
pub struct FormSummary {
    pub text: String,
    #[serde(serialize_with = "rational")]
    pub a: Rational,
    #[serde(serialize_with = "rational")]
    pub h: Rational,
    #[serde(serialize_with = "rational")]
    pub b: Rational,
    #[serde(serialize_with = "rational")]
    pub discriminant: Rational,
    pub classification: FormClass,
}

impl FormSummary {
    pub fn new(q: &BinaryQuadraticForm) -> Self {
        Self {
            text: q.to_string(),
            a: q.a().clone(),
            h: q.h().clone(),
            b: q.b().clone(),
            discriminant: q.discriminant(),
            classification: q.classify(),
        }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct Reduction {
    pub form: String,
    pub map: UnimodularMap,
    pub alpha: String,
    pub beta: String,
}

#[derive(Clone, Debug, Serialize)]
pub struct SailReport {
    pub form: FormSummary,
    pub reduction: Reduction,
    /// Vertices `A_{−k}, …, A_k` in original coordinates.
    pub vertices: Vec<LatticeVector>,
    pub corner: usize,
    pub lls_window: LLSWindow,
}

#[derive(Clone, Debug, Serialize)]
pub struct RegionReport {
    pub vector: LatticeVector,
    pub label: String,
    #[serde(serialize_with = "rational")]
    pub value: Rational,
}

#[derive(Clone, Debug, Serialize)]
pub struct EdgeReport {
    pub left: RegionReport,
    pub right: RegionReport,
}

#[derive(Clone, Debug, Serialize)]
pub struct RiverReport {
    pub form: FormSummary,
    pub direction: Direction,
    pub edges: Vec<EdgeReport>,
    pub turns: TurnSequence,
    pub runs: Vec<u64>,
}

#[derive(Clone, Debug, Serialize)]
pub struct VerifyReport {
    pub form: FormSummary,
    pub window: usize,
    pub lls_terms: Vec<u64>,
    pub runs: Vec<u64>,
    #[serde(flatten)]
    pub result: MatchReport,
}

#[derive(Clone, Debug, Serialize)]
pub struct AnalysisReport {
    pub form: FormSummary,
    pub slope_roots: Vec<String>,
    pub farey_roots: Vec<String>,
    pub reduction: Reduction,
    pub lls_window: LLSWindow,
    pub river_turns: TurnSequence,
    pub river_runs: Vec<u64>,
    pub theorem: MatchReport,
}

fn reduction(q: &BinaryQuadraticForm) -> Result<Reduction> {
    let nf = normalize(q)?;
    Ok(Reduction {
        form: nf.reduced.to_string(),
        map: nf.map,
        alpha: nf.alpha.to_string(),
        beta: nf.beta.to_string(),
    })
}

fn region(q: &BinaryQuadraticForm, v: &LatticeVector) -> RegionReport {
    RegionReport {
        vector: v.clone(),
        label: farey_label(v).map(|f| f.to_string()).unwrap_or_default(),
        value: q.evaluate(v),
    }
}

pub fn edge_report(q: &BinaryQuadraticForm, e: &TopographEdge) -> EdgeReport {
    EdgeReport {
        left: region(q, &e.left),
        right: region(q, &e.right),
    }
}

/// Sail with `k` vertices either side of the corner and its LLS sequence,
/// read from `n_left` terms before the anchor to `n_right` terms from it.
pub fn sail_report(q: &BinaryQuadraticForm, n_left: usize, n_right: usize) -> Result<SailReport> {
    let k = n_left.max(n_right).div_ceil(2).max(1);
    let sail = sail_vertices(q, k)?;
    Ok(SailReport {
        form: FormSummary::new(q),
        reduction: reduction(q)?,
        vertices: sail.vertices,
        corner: k,
        lls_window: lls_window(q, n_left, n_right)?,
    })
}

pub fn river_report(q: &BinaryQuadraticForm, steps: usize, direction: Direction) -> Result<RiverReport> {
    let path = river(q, steps, direction)?;
    Ok(RiverReport {
        form: FormSummary::new(q),
        direction,
        edges: path.edges.iter().map(|e| edge_report(q, e)).collect(),
        runs: turn_runs(&path.turns),
        turns: path.turns,
    })
}

pub fn verify_report(q: &BinaryQuadraticForm, window: usize) -> Result<VerifyReport> {
    let (lls, turns) = theorem_windows(q, window)?;
    Ok(VerifyReport {
        form: FormSummary::new(q),
        window,
        lls_terms: lls.terms,
        runs: turn_runs(&turns),
        result: check_theorem(q, window)?,
    })
}

/// Everything at once: classification, roots, reduction, LLS window, river
/// turns and the theorem check.
pub fn analyze(q: &BinaryQuadraticForm, window: usize) -> Result<AnalysisReport> {
    let (alpha, beta) = q.slope_roots()?;
    let (f1, f2) = q.farey_roots()?;
    let (lls, turns) = theorem_windows(q, window)?;
    Ok(AnalysisReport {
        form: FormSummary::new(q),
        slope_roots: text(&[alpha, beta]),
        farey_roots: text(&[f1, f2]),
        reduction: reduction(q)?,
        lls_window: lls,
        river_runs: turn_runs(&turns),
        river_turns: turns,
        theorem: check_theorem(q, window)?,
    })
}
