//! Vertically symmetric alternating sign matrices of odd size 2n+1.

use num_bigint::BigInt;

use crate::hirota::{count_negatives, ASMatrix};
use crate::ring::TauPoly;

use super::CombinError;

/// Largest size [`enumerate_vsasm`] accepts.
pub const MAX_VSASM_SIZE: usize = 11;

/// Symmetric rows of odd length m whose partial sums stay in {0, 1} and end at 1.
fn symmetric_rows(m: usize) -> Vec<Vec<i8>> {
    let half = m / 2 + 1;
    let mut out = Vec::new();
    let mut left = vec![0i8; half];
    let total = 3usize.pow(half as u32);
    for code in 0..total {
        let mut c = code;
        for x in left.iter_mut() {
            *x = [0, 1, -1][c % 3];
            c /= 3;
        }
        let row: Vec<i8> = left.iter().chain(left[..half - 1].iter().rev()).copied().collect();
        let mut s = 0i8;
        if row.iter().all(|&x| {
            s += x;
            (0..=1).contains(&s)
        }) && s == 1
        {
            out.push(row);
        }
    }
    out.sort();
    out
}

/// Every vertically symmetric ASM of the given odd size, sorted.
pub fn enumerate_vsasm(size: usize) -> Result<Vec<ASMatrix>, CombinError> {
    if size.is_multiple_of(2) {
        return Err(CombinError::OutOfDomain(format!("size {size}: vertically symmetric ASMs have odd size")));
    }
    if size > MAX_VSASM_SIZE {
        return Err(CombinError::Budget(format!("VSASM enumeration of size {size} (max {MAX_VSASM_SIZE})")));
    }
    let rows = symmetric_rows(size);
    let mut out = Vec::new();
    let mut chosen: Vec<usize> = Vec::new();
    let mut colsum = vec![0i8; size];
    fn rec(rows: &[Vec<i8>], size: usize, chosen: &mut Vec<usize>, colsum: &mut [i8], out: &mut Vec<ASMatrix>) {
        if chosen.len() == size {
            if colsum.iter().all(|&s| s == 1) {
                let entries = chosen.iter().flat_map(|&i| rows[i].iter().copied()).collect();
                out.push(ASMatrix::new(size, entries).expect("valid by construction"));
            }
            return;
        }
        for (i, row) in rows.iter().enumerate() {
            if colsum.iter().zip(row).any(|(&s, &x)| !(0..=1).contains(&(s + x))) {
                continue;
            }
            colsum.iter_mut().zip(row).for_each(|(s, &x)| *s += x);
            chosen.push(i);
            rec(rows, size, chosen, colsum, out);
            chosen.pop();
            colsum.iter_mut().zip(row).for_each(|(s, &x)| *s -= x);
        }
    }
    rec(&rows, size, &mut chosen, &mut colsum, &mut out);
    out.sort();
    Ok(out)
}

/// Σ τ^{N₋(B) − n} over VSASMs of size 2n+1: one τ per −1 off the central
/// column, whose n entries −1 are forced. Equivalently τ² per mirror pair.
pub fn vsasm_generating_function(size: usize) -> Result<TauPoly, CombinError> {
    let n = (size / 2) as i32;
    let all = enumerate_vsasm(size)?;
    let mut counts = std::collections::BTreeMap::<i32, u64>::new();
    for b in &all {
        *counts.entry(count_negatives(b) as i32 - n).or_default() += 1;
    }
    Ok(TauPoly::from_terms(counts.into_iter().map(|(e, c)| (e, BigInt::from(c)))))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::tee::tee;

    #[test]
    fn counts_and_symmetry() {
        let c: Vec<usize> = [1, 3, 5, 7].iter().map(|&m| enumerate_vsasm(m).unwrap().len()).collect();
        assert_eq!(c, vec![1, 1, 3, 26]);
        assert!(enumerate_vsasm(7).unwrap().iter().all(|b| b.is_vertically_symmetric()));
        assert!(enumerate_vsasm(4).is_err());
    }

    #[test]
    fn generating_function_is_tee() {
        for n in 1..=3i64 {
            let g = vsasm_generating_function(2 * n as usize + 1).unwrap();
            assert_eq!(g, tee(2 * n, n - 1, 2), "n={n}");
        }
    }
}
