//! Run the exhaustive identity sweeps around T(L,p,k) and print one line each.
//!
//! cargo run --example identity_web -- 10 12

use std::time::Instant;

use qkz_hirota::tee::{verify_lemma2, verify_lemma3, verify_prop1, verify_sdet, verify_trecur};

fn main() {
    let mut args = std::env::args().skip(1).map(|s| s.parse::<usize>().expect("integer argument"));
    let l_sum = args.next().unwrap_or(8);
    let l_det = args.next().unwrap_or(10);
    let p_max = args.next().unwrap_or(3);

    let timed = |name: &str, f: &dyn Fn() -> qkz_hirota::report::Report| {
        let t = Instant::now();
        let r = f();
        println!("{}  ({name}, {:.2}s)", r.summary(), t.elapsed().as_secs_f64());
    };
    timed("S± = τ^ν T", &|| verify_prop1(l_sum).unwrap());
    timed("determinant forms of S", &|| verify_sdet(l_sum).unwrap());
    timed("bilinear recurrence", &|| verify_trecur(l_det as i64));
    timed("(p+1)-determinant form", &|| verify_lemma3(l_det as i64));
    timed("antisymmetrization", &|| verify_lemma2(p_max));
}
