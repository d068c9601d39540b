//! Solve for every component ψ_α at one size and print them.
//!
//! cargo run --example qkz_components -- 6

use qkz_hirota::qkz::{check_positivity, solve_psi};

fn main() {
    let l: usize = std::env::args().nth(1).and_then(|s| s.parse().ok()).unwrap_or(6);
    let psi = solve_psi(l).expect("system solves");
    for (alpha, v) in psi.iter() {
        println!("{alpha:<12} {v}");
    }
    let bad = check_positivity(&psi);
    println!("{} components, {} fail τ²-positivity", psi.paths.len(), bad.len());
}
