//! The octahedron recurrence: τ²-determinants of a rational matrix, the
//! ordinary determinant at τ² = −1, and the ASM expansion as a cross-check.
//!
//! cargo run --example octahedron

use qkz_hirota::hirota::{asm_expansion, enumerate_asm, tau2_det, verify_symbolic, OctState};
use qkz_hirota::ring::{rat, Matrix};

fn main() {
    let a = Matrix::from_fn(4, 4, |i, j| rat((i * 4 + j) as i64 % 7 + 1, (j as i64) + 1));
    println!("ordinary det   {}", a.det().unwrap());
    println!("τ² = −1        {}", tau2_det(&a, &rat(-1, 1)).unwrap());
    for lam in [rat(2, 1), rat(-3, 5)] {
        let d = tau2_det(&a, &lam).unwrap();
        let e = asm_expansion(&a, &lam).unwrap();
        println!("τ² = {lam:<6}    {d}   ASM sum agrees: {}", d == e);
    }

    let mut st = OctState::from_matrix(&a, rat(2, 1)).unwrap().keep_history(true);
    while st.next_layer() <= 4 {
        st.step().unwrap();
    }
    for n in 0..=4 {
        println!("layer {n}: {} points", st.layer(n).unwrap().len());
    }

    println!("ASM counts: {:?}", (1..=6).map(|n| enumerate_asm(n).unwrap().len()).collect::<Vec<_>>());
    println!("{}", verify_symbolic(&[2, 3, 4]).unwrap().summary());
}
