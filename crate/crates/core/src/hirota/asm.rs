use std::fmt;

use num_traits::{One, Zero};

use crate::ring::{BigRational, Matrix};

use super::HirotaError;

/// Largest size [`enumerate_asm`] accepts (7436 matrices).
pub const MAX_ASM_SIZE: usize = 6;

/// An alternating sign matrix: entries in {−1, 0, 1}, every row and column
/// sums to 1 and the nonzero entries alternate in sign along rows and columns.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ASMatrix {
    n: usize,
    entries: Vec<i8>,
}

impl ASMatrix {
    pub fn new(n: usize, entries: Vec<i8>) -> Option<Self> {
        let m = ASMatrix { n, entries };
        (m.entries.len() == n * n && m.is_valid()).then_some(m)
    }

    pub fn size(&self) -> usize {
        self.n
    }

    pub fn get(&self, i: usize, j: usize) -> i8 {
        self.entries[i * self.n + j]
    }

    pub fn rows(&self) -> impl Iterator<Item = &[i8]> {
        self.entries.chunks(self.n.max(1))
    }

    fn is_valid(&self) -> bool {
        let line_ok = |it: &mut dyn Iterator<Item = i8>| {
            let mut partial = 0i32;
            for x in it {
                if !(-1..=1).contains(&x) {
                    return false;
                }
                partial += x as i32;
                if !(0..=1).contains(&partial) {
                    return false;
                }
            }
            partial == 1
        };
        let n = self.n;
        (0..n).all(|i| line_ok(&mut (0..n).map(|j| self.get(i, j))))
            && (0..n).all(|j| line_ok(&mut (0..n).map(|i| self.get(i, j))))
    }

    /// Left-right mirror image.
    pub fn mirrored(&self) -> Self {
        let n = self.n;
        ASMatrix { n, entries: (0..n * n).map(|k| self.get(k / n, n - 1 - k % n)).collect() }
    }

    pub fn is_vertically_symmetric(&self) -> bool {
        *self == self.mirrored()
    }
}

impl fmt::Debug for ASMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for row in self.rows() {
            let cells: Vec<&str> = row.iter().map(|&x| match x { 1 => "+", -1 => "-", _ => "." }).collect();
            writeln!(f, "{}", cells.join(" "))?;
        }
        Ok(())
    }
}

/// Number of −1 entries.
pub fn count_negatives(b: &ASMatrix) -> usize {
    b.entries.iter().filter(|&&x| x < 0).count()
}

/// inv(B) = Σ B_ij B_kl over pairs with i > k and j < l.
pub fn inversions(b: &ASMatrix) -> i64 {
    let n = b.n;
    let mut s = 0i64;
    for i in 0..n {
        for j in 0..n {
            let x = b.get(i, j) as i64;
            if x == 0 {
                continue;
            }
            for k in 0..i {
                for l in j + 1..n {
                    s += x * b.get(k, l) as i64;
                }
            }
        }
    }
    s
}

/// Every n×n ASM, built row by row: after k rows the columns with partial sum 1
/// form a k-set, and consecutive sets interlace (a monotone triangle).
pub fn enumerate_asm(n: usize) -> Result<Vec<ASMatrix>, HirotaError> {
    if n > MAX_ASM_SIZE {
        return Err(HirotaError::TooLarge { n, max: MAX_ASM_SIZE });
    }
    let mut out = Vec::new();
    let mut rows: Vec<Vec<usize>> = vec![Vec::new()];
    extend(n, &mut rows, &mut out);
    out.sort();
    Ok(out)
}

fn extend(n: usize, sets: &mut Vec<Vec<usize>>, out: &mut Vec<ASMatrix>) {
    let k = sets.len() - 1;
    if k == n {
        let mut entries = vec![0i8; n * n];
        for r in 0..n {
            for &c in &sets[r + 1] {
                entries[r * n + c] += 1;
            }
            for &c in &sets[r] {
                entries[r * n + c] -= 1;
            }
        }
        out.push(ASMatrix { n, entries });
        return;
    }
    let prev = sets[k].clone();
    // Choose b₀ < b₁ < … < b_k with b_i ∈ [prev_{i−1}, prev_i].
    let mut cur = Vec::with_capacity(k + 1);
    choose(n, &prev, &mut cur, sets, out);
}

fn choose(n: usize, prev: &[usize], cur: &mut Vec<usize>, sets: &mut Vec<Vec<usize>>, out: &mut Vec<ASMatrix>) {
    let i = cur.len();
    if i == prev.len() + 1 {
        sets.push(cur.clone());
        extend(n, sets, out);
        sets.pop();
        return;
    }
    let lo = if i == 0 { 0 } else { prev[i - 1].max(cur[i - 1] + 1) };
    let hi = if i < prev.len() { prev[i] } else { n - 1 };
    for b in lo..=hi {
        cur.push(b);
        choose(n, prev, cur, sets, out);
        cur.pop();
    }
}

/// Σ_B λ^{inv(B)} (1 + λ⁻¹)^{N₋(B)} Π a_ij^{B_ij} over all n×n ASMs B.
///
/// Needs λ ≠ 0 and a_ij ≠ 0 wherever some ASM has a −1.
pub fn asm_expansion(a: &Matrix<BigRational>, lam: &BigRational) -> Result<BigRational, HirotaError> {
    let n = a.rows();
    let asms = enumerate_asm(n)?;
    let one = BigRational::one();
    let shift = if lam.is_zero() { None } else { Some(&one + &lam.recip()) };
    let mut acc = BigRational::zero();
    for b in &asms {
        let neg = count_negatives(b);
        let mut term = match (&shift, neg) {
            (_, 0) => one.clone(),
            (Some(s), k) => num_traits::pow(s.clone(), k),
            (None, _) => return Err(HirotaError::Degenerate { n: n as i64, i: 0, j: 0 }),
        };
        let inv = inversions(b);
        let lp = if inv >= 0 {
            num_traits::pow(lam.clone(), inv as usize)
        } else {
            num_traits::pow(lam.recip(), (-inv) as usize)
        };
        term *= lp;
        for i in 0..n {
            for j in 0..n {
                match b.get(i, j) {
                    1 => term *= a.get(i, j),
                    -1 => {
                        if a.get(i, j).is_zero() {
                            return Err(HirotaError::Degenerate { n: n as i64, i: i as i64, j: j as i64 });
                        }
                        term /= a.get(i, j)
                    }
                    _ => {}
                }
            }
        }
        acc += term;
    }
    Ok(acc)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ring::rat;

    #[test]
    fn counts() {
        let c: Vec<usize> = (0..=6).map(|n| enumerate_asm(n).unwrap().len()).collect();
        assert_eq!(c, vec![1, 1, 2, 7, 42, 429, 7436]);
        assert!(enumerate_asm(7).is_err());
    }

    #[test]
    fn enumerated_are_valid_and_distinct() {
        let all = enumerate_asm(4).unwrap();
        for b in &all {
            assert!(ASMatrix::new(4, b.entries.clone()).is_some());
        }
        let mut d = all.clone();
        d.dedup();
        assert_eq!(d.len(), all.len());
        assert!(ASMatrix::new(2, vec![1, 1, 0, 0]).is_none());
    }

    #[test]
    fn two_by_two() {
        let a = Matrix::from_rows(vec![vec![rat(2, 1), rat(3, 1)], vec![rat(5, 1), rat(7, 1)]]).unwrap();
        let lam = rat(4, 3);
        assert_eq!(asm_expansion(&a, &lam).unwrap(), rat(14, 1) + rat(4, 3) * rat(15, 1));
    }
}
