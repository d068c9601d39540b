//! Link patterns, Dyck paths and two-row tableaux.
//!
//! cargo run --example link_patterns -- "( (( (()) (()) ))"

use qkz_hirota::combin::LinkPattern;

fn main() {
    let word = std::env::args().nth(1).unwrap_or_else(|| "( (( (()) (()) ))".to_string());
    let lp = LinkPattern::from_parens(&word).expect("a noncrossing word");
    let t = lp.to_tableau();
    println!("pattern  {lp}  (L = {})", lp.len());
    println!("path     {}", lp.to_dyck());
    println!("tableau  {:?}\n         {:?}", t.top, t.bottom);
    for i in 0..lp.len() {
        match lp.partner(i) {
            Some(j) if j > i => println!("  {} - {}", i + 1, j + 1),
            None => println!("  {} - top", i + 1),
            _ => {}
        }
    }
    assert_eq!(LinkPattern::from_tableau(&t).unwrap(), lp);
}
