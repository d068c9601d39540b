//! The three residue identities at a fixed point and at random rational points.
//!
//! cargo run --example residues -- 200

use qkz_hirota::combin::{residue_identity_check, verify_residues, ResidueIdentity};
use qkz_hirota::ring::{format_rational, rat};

fn main() {
    let trials: usize = std::env::args().nth(1).and_then(|s| s.parse().ok()).unwrap_or(100);
    let (x, y, a) = (rat(2, 3), rat(5, 7), rat(3, 11));
    for w in ResidueIdentity::ALL {
        let c = residue_identity_check(w, &x, &y, &a).unwrap();
        println!("{w:<4} lhs = {}  rhs = {}", format_rational(&c.lhs), format_rational(&c.rhs));
    }
    println!("{}", verify_residues(trials, 1).summary());
}
