//! S_±(L,p) as sums over restricted families of Dyck paths, as determinants,
//! and as T(L,p,k) up to a power of τ.
//!
//! cargo run --release --example partial_sums -- 8

use qkz_hirota::qkz::{partial_sum_with, restricted_family, solve_psi, Sign};
use qkz_hirota::tee::{nu_int, prop1_k, s_det_sign, tee};

fn main() {
    let l: usize = std::env::args().nth(1).and_then(|s| s.parse().ok()).unwrap_or(6);
    let psi = solve_psi(l).expect("system solves");
    for p in 0..=(l - 1) / 2 {
        let fam = restricted_family(l, p).unwrap();
        for sign in [Sign::Plus, Sign::Minus] {
            let s = partial_sum_with(&psi, p, sign).unwrap();
            let det = s_det_sign(l, p, sign).unwrap();
            let (li, pi) = (l as i64, p as i64);
            let t = tee(li, pi, prop1_k(li, pi, sign)).shift(nu_int(li, pi).unwrap());
            println!(
                "S_{sign}({l},{p}) over {:>3} paths = {s}   det form {}   τ^ν T {}",
                fam.members.len(),
                if det == s { "agrees" } else { "DIFFERS" },
                if t == s { "agrees" } else { "DIFFERS" }
            );
        }
    }
}
