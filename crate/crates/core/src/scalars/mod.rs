//! The scalar tower: integer polynomials in `q`, the fraction field `ℚ(q)`,
//! Laurent coefficient rings over it, and their diagonal automorphisms.

mod intpoly;
mod laurent;
mod scalar;

pub use intpoly::IntPoly;
pub use laurent::{DiagonalAutomorphism, LaurentCoefficient};
pub use scalar::Scalar;

use core::fmt;

/// Errors raised by scalar and coefficient arithmetic.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ScalarError {
    /// Inversion of zero, or a zero denominator.
    DivisionByZero,
    /// Inversion of a Laurent element that is not a single term.
    NonUnit,
    /// Objects from coefficient rings of different rank met.
    DimensionMismatch { expected: usize, found: usize },
}

impl fmt::Display for ScalarError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ScalarError::DivisionByZero => write!(f, "division by zero"),
            ScalarError::NonUnit => write!(f, "element is not a unit of the coefficient ring"),
            ScalarError::DimensionMismatch { expected, found } => {
                write!(
                    f,
                    "coefficient ring rank mismatch: expected {expected}, found {found}"
                )
            }
        }
    }
}

impl core::error::Error for ScalarError {}
