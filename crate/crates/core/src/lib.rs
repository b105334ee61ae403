//! Exact arithmetic for the sails and rivers of indefinite binary quadratic
//! forms.
//!
//! For a form `Q(x, y) = a·x² + h·xy + b·y²` with rational coefficients that
//! takes both signs but never vanishes on nonzero integer vectors, two
//! combinatorial objects can be read off:
//!
//! * the LLS sequence of the Arnold sail of an angle between the zero lines
//!   of `Q` ([`sail`]),
//! * the left/right turns of the river in Conway's topograph of `Q`
//!   ([`topograph`]).
//!
//! The run lengths of the turns coincide with the LLS sequence, up to shift
//! and reversal. [`concord`] checks this on finite windows.
//!
//! ```
//! use qriver::forms::BinaryQuadraticForm;
//! use qriver::concord::check_theorem;
//!
//! let q: BinaryQuadraticForm = "1,-2,-5".parse()?;
//! assert_eq!(qriver::sail::lls_window(&q, 2, 2)?.terms, vec![2, 4, 2, 4]);
//! assert!(check_theorem(&q, 6)?.matched);
//! # Ok::<(), qriver::Error>(())
//! ```
//!
//! All arithmetic is exact: rationals are [`num_rational::BigRational`] and
//! quadratic irrationals are [`exact::QuadraticSurd`].

pub mod cfrac;
pub mod concord;
pub mod error;
pub mod exact;
pub mod forms;
pub mod lattice;
pub mod report;
pub mod sail;
pub mod topograph;

pub use error::{Error, Result};

#[cfg(doctest)]
mod book {
    #[doc = include_str!("../../../README.md")]
    mod readme {}
    #[doc = include_str!("../../../book/src/intro.md")]
    mod intro {}
    #[doc = include_str!("../../../book/src/continued-fractions.md")]
    mod continued_fractions {}
    #[doc = include_str!("../../../book/src/forms.md")]
    mod forms {}
    #[doc = include_str!("../../../book/src/sails.md")]
    mod sails {}
    #[doc = include_str!("../../../book/src/topograph.md")]
    mod topograph {}
    #[doc = include_str!("../../../book/src/concordance.md")]
    mod concordance {}
    #[doc = include_str!("../../../book/src/cli.md")]
    mod cli {}
}
