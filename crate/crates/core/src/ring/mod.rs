//! Exact arithmetic: big integers and rationals, Laurent polynomials in τ,
//! truncated multivariate polynomials, matrices and determinants.

mod checks;
mod laurent;
mod matrix;
mod multipoly;
mod scalar;
mod sparse;

pub use checks::{random_tau_poly, verify_ring_properties};
pub use laurent::{tau_qnumber, tp, Laurent, QTauPoly, TauPoly};
pub use matrix::{pluecker_check, pluecker_sides, Matrix};
pub use multipoly::MultiPoly;
pub use scalar::{binomial, format_rational, parse_rational, rat, Ring, Scalar};
pub use sparse::SparsePoly;

pub use num_bigint::BigInt;
pub use num_rational::BigRational;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum RingError {
    #[error("matrix is {rows}x{cols}, expected square")]
    NotSquare { rows: usize, cols: usize },
    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },
    #[error("wrong number of variables: expected {expected}, found {found}")]
    Arity { expected: usize, found: usize },
    #[error("monomial lies outside the truncation cap")]
    OutsideCap,
    #[error("division was not exact")]
    InexactDivision,
}
