//! Count fully packed loops by link pattern and compare with ψ_α at τ = 1.
//!
//! cargo run --release --example fpl_census -- 8

use qkz_hirota::combin::{enumerate_fpl, LinkPattern};
use qkz_hirota::qkz::solve_psi;

fn main() {
    let l: usize = std::env::args().nth(1).and_then(|s| s.parse().ok()).unwrap_or(6);
    let counts = enumerate_fpl(l).expect("L within the enumeration cap");
    let psi = solve_psi(l).expect("system solves");
    let mut agree = 0;
    for (alpha, v) in psi.iter() {
        let n = counts.get(alpha).copied().unwrap_or(0);
        let ok = num_bigint::BigInt::from(n) == v.at_one();
        agree += ok as usize;
        println!("{:<14} {:>6}  ψ(1) = {:<6} {}", LinkPattern::from_dyck(alpha).to_parens(), n, v.at_one(), if ok { "" } else { "MISMATCH" });
    }
    let total: u64 = counts.values().sum();
    println!("L={l}: {total} configurations, {agree}/{} patterns agree", psi.paths.len());
}
