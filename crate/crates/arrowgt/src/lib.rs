//! Exact enumeration of arrowed Gelfand-Tsetlin patterns.
//!
//! This crate provides:
//!
//! - exact rational arithmetic helpers (extended Pochhammer symbols,
//!   generalized binomials, exact determinants, sparse Laurent polynomials)
//!   in [`exactnum`];
//! - the combinatorial core — Gelfand-Tsetlin patterns decorated with
//!   arrows, their admissibility rules, signs, and weights — in [`patterns`];
//! - signless specializations that count plain and decorated patterns in
//!   [`signless`];
//! - symmetric-function machinery (extended complete homogeneous functions,
//!   antisymmetrizers, extended Schur functions, bialternant and determinant
//!   forms of the generating function) in [`symfunc`];
//! - explicit LU factorizations of the two determinant families together
//!   with the product formulas their determinants evaluate to, in [`lu`];
//! - the hypergeometric multi-sums and recurrences that certify the
//!   determinant evaluations, in [`hypersum`];
//! - machine-readable verification reports in [`report`] and seeded
//!   sampling helpers in [`sample`].
//!
//! All arithmetic is exact: every value is an arbitrary-precision rational
//! or a sparse Laurent polynomial with rational coefficients. Nothing in
//! this crate rounds.
//!
//! # Quick start
//!
//! ```
//! use arrowgt::patterns::{enumerate_arrowed, gf_bottom_row, WeightSpec};
//! use arrowgt::exactnum::rat;
//!
//! // All arrowed patterns with bottom row (0, 1).
//! let patterns: Vec<_> = enumerate_arrowed(&[0, 1]).unwrap().collect();
//! assert_eq!(patterns.len(), 64);
//!
//! // Their signed generating function specialized at t = u = v = 1, w = -1,
//! // X1 = X2 = 1 (all four decoration variables and both row variables).
//! let spec = WeightSpec::ones(2, rat(-1));
//! let total = gf_bottom_row(&[0, 1], &spec).unwrap();
//! assert_eq!(total.into_rational().unwrap(), rat(16));
//! ```

pub mod exactnum;
pub mod hypersum;
pub mod lu;
pub mod patterns;
pub mod report;
pub mod sample;
pub mod signless;
pub mod symfunc;

/// Errors shared across the crate.
///
/// Every fallible operation returns one of these variants; none of them
/// panic on bad mathematical input.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    /// A value is undefined at the requested point (division by zero
    /// inside a Pochhammer symbol, a power of zero with negative exponent,
    /// or a zero denominator in a closed form).
    #[error("pole: {0}")]
    Pole(String),
    /// Input has the wrong shape (non-triangular pattern, mismatched
    /// matrix dimensions, wrong tuple length).
    #[error("shape error: {0}")]
    Shape(String),
    /// Input is outside the mathematical domain of the operation.
    #[error("domain error: {0}")]
    Domain(String),
    /// An evaluation point violates a genericity requirement (repeated
    /// coordinates, a coordinate equal to 0 or 1 where forbidden, ...).
    #[error("degenerate point: {0}")]
    Degenerate(String),
    /// The request exceeds a built-in size guard.
    #[error("size limit exceeded: {0}")]
    Size(String),
}

/// Crate-wide result alias.
pub type Result<T> = std::result::Result<T, Error>;
