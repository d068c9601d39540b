//! Exact computations around the homogeneous qKZ solution of the O(1) loop
//! model: components ψ_α on Dyck paths, partial sums S±(L,p), the determinant
//! family T(L,p,k), the octahedron recurrence and λ-determinant, and the
//! alternating-sign-matrix, fully-packed-loop and lattice-path enumerations
//! that the identities between them are checked against.
//!
//! All values are exact: integers, rationals, and Laurent polynomials in τ.
//! The one exception is [`combin::sfactor`], a Γ-function product evaluated in
//! fixed point with an explicit error bound.

pub mod ring;
pub mod qkz;
pub mod report;
pub mod tee;
pub mod hirota;
pub mod combin;
pub mod cli;
