//! Dyck-path combinatorics and the homogeneous-limit qKZ components ψ_α.
//!
//! The components are recovered from constant-term integrals ψ̄_b by
//! inverting the triangular change of basis ψ_a = Σ_α C_{a;α} ψ_α, and then
//! summed over the restricted families D_{L,p} with weights τ^{±c_{α,p}}.

mod coeff;
mod dyck;
mod integral;
mod solve;
mod sums;

pub use coeff::{admissible_sequences, c_coeff, c_coeff_with, AdmissibleSequence, PeakChoice};
pub use dyck::{
    c_value, enumerate_dyck, in_family, omega_path, ptilde, restricted_family, DyckPath, RestrictedFamily,
};
pub use integral::{integrand, psi_bar, IntegrandTable};
pub use solve::{solve_psi, PsiVector};
pub use sums::{
    check_eps_classes, check_positivity, eps_b_sequence, eps_class, partial_sum, partial_sum_eps,
    partial_sum_eps_symbolic, partial_sum_with, EpsClassReport, EpsilonSequence,
};

use crate::ring::RingError;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum QkzError {
    #[error("invalid Dyck path {0}")]
    InvalidPath(String),
    #[error("p={p} out of range for L={l}")]
    POutOfRange { l: usize, p: usize },
    #[error("path {path} is not in D_(L,{p})")]
    NotInFamily { path: String, p: usize },
    #[error("invalid sequence: {0}")]
    InvalidSequence(String),
    #[error("L={l} is below the supported minimum {min}")]
    LTooSmall { l: usize, min: usize },
    #[error("linear system for L={l} is rank deficient ({rank} of {unknowns})")]
    RankDeficient { l: usize, rank: usize, unknowns: usize },
    #[error("linear system for L={l} is inconsistent: {detail}")]
    Inconsistent { l: usize, detail: String },
    #[error("internal consistency failure: {0}")]
    Internal(String),
    #[error(transparent)]
    Ring(#[from] RingError),
}

/// The sign in S_±(L,p), selecting the weight τ^{+c} or τ^{−c}.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Sign {
    Plus,
    Minus,
}

impl Sign {
    pub fn as_i32(self) -> i32 {
        match self {
            Sign::Plus => 1,
            Sign::Minus => -1,
        }
    }
}

impl std::str::FromStr for Sign {
    type Err = String;
    fn from_str(s: &str) -> Result<Self, String> {
        match s {
            "plus" | "+" | "+1" | "1" => Ok(Sign::Plus),
            "minus" | "-" | "-1" => Ok(Sign::Minus),
            _ => Err(format!("sign must be plus or minus, got {s:?}")),
        }
    }
}

impl std::fmt::Display for Sign {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(match self {
            Sign::Plus => "plus",
            Sign::Minus => "minus",
        })
    }
}
