//! Combinatorial models and closed forms that the determinant family and the
//! partial sums are checked against: nonintersecting lattice paths, fully
//! packed loops, link patterns, vertically symmetric ASMs, the Γ-product at
//! τ = 1, and three residue identities.

mod fpl;
mod lgv;
mod linkpattern;
mod residue;
mod sfactor;
mod verify;
mod vsasm;

pub use fpl::{enumerate_fpl, enumerate_fpl_patterns, p_restricted_count, MAX_FPL_L};
pub use lgv::{lgv_tee, path_count, PathFamily, PATH_BUDGET};
pub use linkpattern::{LinkPattern, YoungTableau};
pub use residue::{residue_identity_check, residue_sum, verify_residues, ResidueCheck, ResidueIdentity};
pub use sfactor::{log2_big, sfactor, SFactor, MAX_BITS, MIN_BITS};
pub use verify::{verify_fpl, verify_lgv, verify_prop4_lines, verify_sfactor, verify_vsasm};
pub use vsasm::{enumerate_vsasm, vsasm_generating_function, MAX_VSASM_SIZE};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum CombinError {
    #[error("out of domain: {0}")]
    OutOfDomain(String),
    #[error("refused, exceeds budget: {0}")]
    Budget(String),
    #[error("parse error: {0}")]
    Parse(String),
    #[error("pole or degenerate point: {0}")]
    Pole(String),
    #[error("internal consistency failure: {0}")]
    Internal(String),
}
