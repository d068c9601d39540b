//! Vertically symmetric ASMs: counts, the τ-generating function against
//! T(2n, n−1, 2), and the two companion identities with partial sums.
//!
//! cargo run --release --example vsasm -- 4

use qkz_hirota::combin::{enumerate_vsasm, verify_prop4_lines, vsasm_generating_function};
use qkz_hirota::tee::tee;

fn main() {
    let n_max: usize = std::env::args().nth(1).and_then(|s| s.parse().ok()).unwrap_or(3);
    for n in 1..=n_max {
        let size = 2 * n + 1;
        let all = enumerate_vsasm(size).expect("size within the cap");
        let g = vsasm_generating_function(size).unwrap();
        let t = tee(2 * n as i64, n as i64 - 1, 2);
        println!("size {size:<2} count {:<5} {g}   T = {t}   {}", all.len(), if g == t { "ok" } else { "MISMATCH" });
    }
    if n_max >= 2 {
        if let Some(b) = enumerate_vsasm(5).unwrap().last() {
            println!("\none of size 5:\n{b:?}");
        }
    }
    let rep = verify_prop4_lines(n_max.max(2) + 1).unwrap();
    println!("{}", rep.summary());
}
