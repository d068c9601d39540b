//! Fully packed loops on a ⌊L/2⌋ × L grid (L + 1 columns for odd L), counted
//! by the link pattern their external bonds form.
//!
//! Boundary slots are listed counter-clockwise: the left side top to bottom,
//! the bottom row left to right, the right side bottom to top (corner
//! vertices contribute one slot per side). Every other slot, starting with
//! the first, carries an external bond; these are labelled 1..L in order. For
//! odd L one more bond leaves the top row and is connected to infinity; its
//! column is summed over.

use std::collections::BTreeMap;

use rayon::prelude::*;

use crate::qkz::{restricted_family, DyckPath};

use super::{CombinError, LinkPattern};

/// Largest L accepted by [`enumerate_fpl`].
pub const MAX_FPL_L: usize = 9;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
enum Node {
    Vertex(usize, usize),
    Terminal(usize),
    Top,
}

struct Grid {
    rows: usize,
    cols: usize,
    /// External bonds at each vertex.
    ext: Vec<Vec<Node>>,
    labelled: Vec<(usize, usize)>,
}

impl Grid {
    fn new(l: usize, top_col: Option<usize>) -> Self {
        let rows = l / 2;
        let cols = if l.is_multiple_of(2) { l } else { l + 1 };
        let mut slots: Vec<(usize, usize)> = (0..rows).map(|r| (r, 0)).collect();
        slots.extend((0..cols).map(|c| (rows - 1, c)));
        slots.extend((0..rows).rev().map(|r| (r, cols - 1)));
        let labelled: Vec<(usize, usize)> = slots.into_iter().step_by(2).take(l).collect();
        let mut ext = vec![Vec::new(); rows * cols];
        for (t, &(r, c)) in labelled.iter().enumerate() {
            ext[r * cols + c].push(Node::Terminal(t));
        }
        if let Some(c) = top_col {
            ext[c].push(Node::Top);
        }
        Grid { rows, cols, ext, labelled }
    }

    fn count(&self, out: &mut BTreeMap<Vec<u32>, u64>) {
        let n = self.rows * self.cols;
        let mut h = vec![false; n];
        let mut v = vec![false; n];
        self.fill(0, &mut h, &mut v, out);
    }

    /// Vertices in row-major order; each one takes exactly the bonds to its
    /// right and below that bring its degree to 2.
    fn fill(&self, idx: usize, h: &mut [bool], v: &mut [bool], out: &mut BTreeMap<Vec<u32>, u64>) {
        if idx == h.len() {
            *out.entry(self.heights(h, v)).or_default() += 1;
            return;
        }
        let (r, c) = (idx / self.cols, idx % self.cols);
        let mut deg = self.ext[idx].len();
        if c > 0 && h[idx - 1] {
            deg += 1;
        }
        if r > 0 && v[idx - self.cols] {
            deg += 1;
        }
        if deg > 2 {
            return;
        }
        let need = 2 - deg;
        for (hh, vv) in [(false, false), (false, true), (true, false), (true, true)] {
            if hh as usize + vv as usize != need || (hh && c + 1 == self.cols) || (vv && r + 1 == self.rows) {
                continue;
            }
            h[idx] = hh;
            v[idx] = vv;
            self.fill(idx + 1, h, v, out);
        }
        h[idx] = false;
        v[idx] = false;
    }

    fn neighbours(&self, r: usize, c: usize, h: &[bool], v: &[bool]) -> Vec<Node> {
        let idx = r * self.cols + c;
        let mut nb = self.ext[idx].clone();
        if c > 0 && h[idx - 1] {
            nb.push(Node::Vertex(r, c - 1));
        }
        if h[idx] {
            nb.push(Node::Vertex(r, c + 1));
        }
        if r > 0 && v[idx - self.cols] {
            nb.push(Node::Vertex(r - 1, c));
        }
        if v[idx] {
            nb.push(Node::Vertex(r + 1, c));
        }
        nb
    }

    /// Follow each terminal's path to its other end; step t goes up when the
    /// partner comes later or is the top.
    fn heights(&self, h: &[bool], v: &[bool]) -> Vec<u32> {
        let mut heights = vec![0u32];
        for (t, &(r0, c0)) in self.labelled.iter().enumerate() {
            let mut prev = Node::Terminal(t);
            let mut cur = Node::Vertex(r0, c0);
            let end = loop {
                let Node::Vertex(r, c) = cur else { break cur };
                let nb = self.neighbours(r, c, h, v);
                // Degree is 2; step to the neighbour we did not come from.
                let next = if nb[0] == prev { nb[1] } else { nb[0] };
                prev = cur;
                cur = next;
            };
            let up = match end {
                Node::Top => true,
                Node::Terminal(s) => s > t,
                Node::Vertex(..) => unreachable!(),
            };
            let last = *heights.last().unwrap();
            heights.push(if up { last + 1 } else { last - 1 });
        }
        heights
    }
}

/// Number of fully packed loop configurations for each link pattern, keyed by
/// the corresponding Dyck path.
pub fn enumerate_fpl(l: usize) -> Result<BTreeMap<DyckPath, u64>, CombinError> {
    if l < 2 {
        return Err(CombinError::OutOfDomain(format!("L={l}: the grid needs L ≥ 2")));
    }
    if l > MAX_FPL_L {
        return Err(CombinError::Budget(format!("FPL enumeration for L={l} (max {MAX_FPL_L})")));
    }
    let tops: Vec<Option<usize>> = if l.is_multiple_of(2) { vec![None] } else { (0..=l).map(Some).collect() };
    let parts: Vec<BTreeMap<Vec<u32>, u64>> = tops
        .par_iter()
        .map(|&top| {
            let mut m = BTreeMap::new();
            Grid::new(l, top).count(&mut m);
            m
        })
        .collect();
    let mut out = BTreeMap::new();
    for m in parts {
        for (h, n) in m {
            let path = DyckPath::new(h).map_err(|e| CombinError::Internal(e.to_string()))?;
            *out.entry(path).or_default() += n;
        }
    }
    Ok(out)
}

/// The same counts keyed by link pattern.
pub fn enumerate_fpl_patterns(l: usize) -> Result<BTreeMap<LinkPattern, u64>, CombinError> {
    Ok(enumerate_fpl(l)?.into_iter().map(|(a, n)| (LinkPattern::from_dyck(&a), n)).collect())
}

/// Number of configurations whose link pattern lies in D_{L,p}.
pub fn p_restricted_count(l: usize, p: usize) -> Result<u64, CombinError> {
    let counts = enumerate_fpl(l)?;
    let fam = restricted_family(l, p).map_err(|e| CombinError::OutOfDomain(e.to_string()))?;
    Ok(fam.members.iter().map(|a| counts.get(a).copied().unwrap_or(0)).sum())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::qkz::solve_psi;

    #[test]
    fn totals() {
        let t: Vec<u64> = (4..=7).map(|l| enumerate_fpl(l).unwrap().values().sum()).collect();
        assert_eq!(t, vec![3, 11, 26, 170]);
        assert!(enumerate_fpl(10).is_err());
    }

    #[test]
    fn counts_are_psi_at_one() {
        for l in 4..=7 {
            let counts = enumerate_fpl(l).unwrap();
            let psi = solve_psi(l).unwrap();
            for (a, v) in psi.iter() {
                assert_eq!(num_bigint::BigInt::from(counts.get(a).copied().unwrap_or(0)), v.at_one(), "L={l} {a}");
            }
        }
    }

    #[test]
    fn restricted_counts_are_partial_sums_at_one() {
        use crate::qkz::{partial_sum, Sign};
        assert_eq!(p_restricted_count(6, 0).unwrap(), 1);
        assert_eq!(p_restricted_count(6, 2).unwrap(), 26);
        for (l, p) in [(6, 1), (6, 2), (7, 1), (7, 2)] {
            let s = partial_sum(l, p, Sign::Plus).unwrap().at_one();
            assert_eq!(num_bigint::BigInt::from(p_restricted_count(l, p).unwrap()), s);
        }
    }
}
