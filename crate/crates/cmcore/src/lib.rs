//! Exact symbolic computation kernel for projective algebraic geometry.
//!
//! The crate is layered bottom-up:
//!
//! * [`polyring`] — exact coefficient fields (ℚ and 𝔽_p), monomials and
//!   monomial orders, sparse multivariate polynomials, polynomial matrices,
//!   ring maps, differentiation, dense exact linear algebra, and a text
//!   grammar for rings/polynomials.
//! * [`groebner`] — multivariate division, Buchberger's algorithm, reduced
//!   Gröbner bases (cached on ideals), module Gröbner bases, and syzygies.
//! * [`idealops`] — ideal quotient, saturation, elimination, intersection,
//!   Hilbert series/function/polynomial, Fitting ideals, annihilators, and
//!   torsion witnesses.
//! * [`deform`] — normal-module generators, graded tangent-space dimensions,
//!   and lifting/obstruction verification for deformed presentations.
//! * [`cmcurves`] — the domain layer: determinantal twisted-cubic families,
//!   Fitting images of pushforwards, matrix factorizations of singular plane
//!   cubics, round-trip verification, and the named verification catalog.
//!
//! Every computation is exact: rational arithmetic is arbitrary precision and
//! prime-field arithmetic is modular. No rounding occurs anywhere.

// The linear-algebra kernels walk several parallel buffers by row/column
// index; rewriting them with iterator adapters obscures the pivoting logic.
#![allow(clippy::needless_range_loop)]

pub mod cmcurves;
pub mod deform;
pub mod groebner;
pub mod idealops;
pub mod polyring;

use thiserror::Error;

/// Crate-wide error type.
///
/// Operations that can fail return `Result<_, CaError>`; mathematically
/// infallible operations panic only on programmer error (e.g. mixing rings
/// without going through an explicit ring map is a `RingMismatch`).
#[derive(Debug, Clone, Error, PartialEq, Eq)]
pub enum CaError {
    #[error("ring mismatch: {0}")]
    RingMismatch(String),
    #[error("unknown variable `{0}`")]
    UnknownVariable(String),
    #[error("shape mismatch: {0}")]
    ShapeMismatch(String),
    #[error("minor size {k} out of range for a {rows}x{cols} matrix")]
    MinorSize { k: usize, rows: usize, cols: usize },
    #[error("input is not homogeneous: {0}")]
    NotHomogeneous(String),
    #[error("ideal is not saturated: {0}")]
    NotSaturated(String),
    #[error("parse error at line {line}, column {col}: {msg}")]
    Parse { line: usize, col: usize, msg: String },
    #[error("{0} is not a prime")]
    NotPrime(u64),
    #[error("division by zero")]
    DivisionByZero,
    #[error("the section is not singular: {0}")]
    NotSingularSection(String),
    #[error("invalid deformation setup: {0}")]
    InvalidSetup(String),
    #[error("invalid input: {0}")]
    Invalid(String),
}

impl CaError {
    /// Shorthand for the general-purpose `Invalid` variant.
    pub fn invalid(msg: impl Into<String>) -> CaError {
        CaError::Invalid(msg.into())
    }
}

pub type Result<T> = std::result::Result<T, CaError>;
