//! Products of factorial Schur functions, expanded exactly.
//!
//! A factorial Schur function s_lambda(x|y) is a sum over semistandard
//! tableaux of products of binomials (x_a + y_{a+c-r}). This crate computes
//! the expansion of a product
//!
//! ```text
//! s_{lambda(1)}(x|y(1)) * ... * s_{lambda(r)}(x|y(r))
//!   = sum_mu  c^mu(y) s_mu(x)
//! ```
//!
//! in the ordinary Schur basis, where each diagram carries its own family of
//! shift parameters. The coefficients are computed combinatorially, as
//! weighted counts of barred fillings of a skew diagram assembled
//! corner-to-corner from the lambda(i), and independently by an alternant
//! oracle; determinantal change-of-basis matrices between the Schur and
//! factorial Schur bases round the picture out. Everything is exact integer
//! arithmetic.
//!
//! Module layout:
//!
//! * [`poly`]: sparse exact polynomials, alternants, e/h symmetric functions
//! * [`tableau`]: partitions, multishapes, barred fillings, the value-swap
//!   involutions and the cancellation pairing
//! * [`lr`]: factorial Schur functions and the coefficient expansion
//! * [`basis`]: determinantal change of basis and complement duality
//! * [`verify`]: exhaustive identity sweeps shared by the CLI and the tests

pub mod basis;
pub mod lr;
pub mod poly;
pub mod tableau;
pub mod verify;

pub use basis::IndexSet;
pub use lr::CoeffTable;
pub use poly::{Monomial, Polynomial, VarId};
pub use tableau::{BarredEntry, BarredSkewTableau, MultiShape, Partition};

use std::fmt;

/// Errors reported by fallible operations. Preconditions that hold by
/// construction elsewhere in the crate are asserted instead.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Error {
    /// Parts not weakly decreasing (or not nonnegative).
    NotAPartition(Vec<u32>),
    /// A partition has more nonzero parts than the ambient n allows.
    TooManyParts { parts: usize, n: usize },
    /// A length does not match the expected arity.
    ArityMismatch { expected: usize, got: usize },
    /// Entry value or involution index outside 1..=n (or 1..n).
    IndexOutOfRange { index: u32, limit: u32 },
    /// Complement rectangle has fewer columns than the partition.
    RectangleTooNarrow { m: u32, needed: u32 },
    /// Operation defined only for a specific number of diagrams.
    UnsupportedDiagramCount { expected: usize, got: usize },
    /// Malformed variable name in serialized form.
    BadVariable(String),
    /// Malformed JSON for one of the documented schemas.
    BadJson(String),
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::NotAPartition(parts) => {
                write!(f, "not a partition: {parts:?}")
            }
            Error::TooManyParts { parts, n } => {
                write!(f, "partition has {parts} nonzero parts but n = {n}")
            }
            Error::ArityMismatch { expected, got } => {
                write!(f, "expected length {expected}, got {got}")
            }
            Error::IndexOutOfRange { index, limit } => {
                write!(f, "index {index} out of range (limit {limit})")
            }
            Error::RectangleTooNarrow { m, needed } => {
                write!(f, "rectangle width {m} is smaller than the partition width {needed}")
            }
            Error::UnsupportedDiagramCount { expected, got } => {
                write!(f, "operation needs exactly {expected} diagrams, got {got}")
            }
            Error::BadVariable(s) => write!(f, "bad variable name: {s:?}"),
            Error::BadJson(msg) => write!(f, "bad JSON: {msg}"),
        }
    }
}

impl std::error::Error for Error {}
