use num_bigint::BigInt;
use thiserror::Error;

use crate::forms::FormClass;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("radicand {0} is a perfect square")]
    SquareRadicand(BigInt),
    #[error("radicand {0} is negative")]
    NegativeRadicand(BigInt),
    #[error("zero denominator")]
    ZeroDenominator,
    #[error("parse error: {0}")]
    Parse(String),
    #[error("degenerate segment: endpoints coincide")]
    DegenerateSegment,
    #[error("degenerate angle: points are collinear or coincide")]
    DegenerateAngle,
    #[error("matrix is not unimodular (determinant {0})")]
    NotUnimodular(BigInt),
    #[error("vector ({0}, {1}) is not primitive")]
    NotPrimitive(BigInt, BigInt),
    #[error("all coefficients of the form are zero")]
    ZeroForm,
    #[error("{}", classification_message(.0))]
    Classification(FormClass),
    #[error("no period found within {0} terms")]
    PeriodNotFound(usize),
    #[error("out of domain: {0}")]
    OutOfDomain(String),
    #[error("inputs must be distinct")]
    EqualInputs,
    #[error("iteration budget of {0} steps exceeded")]
    BudgetExceeded(usize),
    #[error("search region contains no sail vertex")]
    EmptyOracle,
    #[error("polyline needs at least {needed} vertices, got {got}")]
    DegeneratePolyline { needed: usize, got: usize },
    #[error("insufficient overlap: need {needed} complete terms, have {available}")]
    InsufficientOverlap { needed: usize, available: usize },
    #[error("term {0} does not fit in 64 bits")]
    TermOverflow(BigInt),
}

fn classification_message(class: &FormClass) -> &'static str {
    match class {
        FormClass::PositiveDefinite | FormClass::NegativeDefinite => {
            "form is definite: no sail/river"
        }
        FormClass::IndefiniteIsotropic => "form represents zero",
        FormClass::Degenerate => "form is degenerate: no sail/river",
        FormClass::IndefiniteAnisotropic => "form is indefinite and anisotropic",
    }
}
