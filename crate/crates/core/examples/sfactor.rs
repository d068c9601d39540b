//! Evaluate the Γ-product for S(L,p) at τ = 1 and compare with the exact integer.
//!
//! cargo run --release --example sfactor -- 12 256

use qkz_hirota::combin::sfactor;
use qkz_hirota::qkz::Sign;
use qkz_hirota::tee::{prop1_k, tee};

fn main() {
    let mut args = std::env::args().skip(1).map(|s| s.parse::<u32>().expect("integer argument"));
    let l_max = args.next().unwrap_or(12);
    let bits = args.next().unwrap_or(256);
    for l in 1..=l_max {
        for p in 0..=(l - 1) / 2 {
            let (li, pi) = (l as i64, p as i64);
            let exact = tee(li, pi, prop1_k(li, pi, Sign::Minus)).at_one();
            let s = sfactor(l, p, bits).expect("valid parameters");
            println!(
                "L={l:<3} p={p:<2} {:>16}  {}  error 10^{:.1} (bound 10^{:.1})",
                exact.to_string(),
                s.to_decimal(24),
                s.rel_error_log2_to(&exact) * std::f64::consts::LOG10_2,
                s.rel_error_log10()
            );
        }
    }
}
