//! Exact computer algebra for q-commutation algebras.
//!
//! The crate works with algebras presented by a finite set of generators
//! `x_1, .., x_s` over a commutative coefficient ring `Λ` (the rational
//! function field in `q`, or a Laurent polynomial ring over it), subject to
//! relations of the form
//!
//! ```text
//! x_j x_i = q_ji x_i x_j + p_ji        (j > i)
//! x_k a   = σ_k(a) x_k                 (a ∈ Λ)
//! ```
//!
//! where `q_ji` is a unit, `σ_k` is a diagonal automorphism of `Λ` and the
//! tail `p_ji` is a polynomial in standard form. Provided every tail is
//! smaller than `x_i x_j` under an admissible order, these algebras carry a
//! PBW basis of standard monomials, and everything here is computed exactly
//! in that basis:
//!
//! * [`orders`] — admissible orders on exponent vectors (lexicographic,
//!   weighted, matrix-refined) and weight vectors.
//! * [`scalars`] — the scalar tower: integer polynomials in `q`, the
//!   fraction field `ℚ(q)`, Laurent coefficients and their diagonal
//!   automorphisms.
//! * [`pbw`] — presentations, standard polynomials, normal-form
//!   multiplication by rewriting, and consistency diagnostics.
//! * [`refilter`] — turning tail bounds into a strictly positive weight
//!   vector by exact linear programming, and passing to the associated
//!   graded algebra it defines.
//! * [`qspace`] — multiplicatively anti-symmetric quantum affine spaces and
//!   tori, monomial counting, and Gelfand–Kirillov dimension witnesses.
//! * [`homology`] — q-twisted Koszul complexes on variable subsets, graded
//!   Ext ranks, grade computation and the Cohen–Macaulay balance check.
//! * [`catalog`] — ready-made presentations used throughout the test suite.
#![no_std]

extern crate alloc;

#[cfg(test)]
extern crate std;

pub mod catalog;
pub mod homology;
pub mod orders;
pub mod pbw;
pub mod qspace;
pub mod refilter;
pub mod scalars;

pub use homology::{CmReport, GradeResult, QKoszulComplex};
pub use orders::{AdmissibleOrder, ExponentVector, IntMatrix, WeightVector};
pub use pbw::{AlgebraPresentation, CoefficientDomain, StandardPolynomial};
pub use qspace::{GkDim, GkEstimate, QuantumSpacePresentation, TorusElement};
pub use refilter::{CSet, RefilterOutcome, WeightCertificate};
pub use scalars::{DiagonalAutomorphism, IntPoly, LaurentCoefficient, Scalar};
