//! Laurent polynomial coefficients and the graded noncommutative algebra.

pub mod algebra;
pub mod laurent;
pub mod text;

use thiserror::Error;

pub use algebra::{apply_differential, AlgebraElement, DifferentialTable, Gen, Word};
pub use laurent::{LaurentPoly, Space};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum SymbolicError {
    #[error("not a unit monomial")]
    NotAUnit,
    #[error("variable {0} assigned zero")]
    ZeroAssignment(String),
    #[error("parse error: {0}")]
    Parse(String),
}
