//! Laurent polynomials in τ, q-numbers, and a Bareiss determinant over Z[τ, τ⁻¹].
//!
//! cargo run --example tau_arithmetic

use qkz_hirota::ring::{tau_qnumber, tp, Matrix, TauPoly};

fn main() {
    let a = tp(&[(-1, 1), (0, 2), (2, 1)]);
    let b = TauPoly::parse("1 - t").unwrap();
    let prod = &a * &b;
    println!("a = {a}\nb = {b}\na·b = {prod}");
    println!("(a·b)/b = {}", prod.div_exact(&b).unwrap());
    println!("a at τ = 1: {}", a.at_one());
    println!("JSON: {}", a.to_json());

    for k in 0..6 {
        println!("[{k}] = {}", tau_qnumber(k));
    }

    let m = Matrix::from_fn(3, 3, |i, j| tau_qnumber((i + j + 1) as u32));
    println!("det([i+j+1])_(0≤i,j<3) = {}", m.det().unwrap());
}
