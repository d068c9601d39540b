use std::fmt;

use super::QkzError;

/// A Dyck path of length L given by its heights α₀..α_L.
///
/// Steps are ±1 and heights stay nonnegative; α₀ = 0 and α_L = L mod 2, so
/// odd-length paths end one unit above the axis.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct DyckPath {
    heights: Vec<u32>,
}

impl DyckPath {
    pub fn new(heights: Vec<u32>) -> Result<Self, QkzError> {
        let bad = |why: &str| QkzError::InvalidPath(format!("{heights:?}: {why}"));
        let Some(&last) = heights.last() else {
            return Err(bad("empty"));
        };
        let l = heights.len() - 1;
        if heights[0] != 0 {
            return Err(bad("must start at height 0"));
        }
        if last as usize != l % 2 {
            return Err(bad("wrong end height"));
        }
        if heights.windows(2).any(|w| w[0].abs_diff(w[1]) != 1) {
            return Err(bad("steps must be ±1"));
        }
        Ok(DyckPath { heights })
    }

    /// Parse an up/down word such as `"UUDUDD"`.
    pub fn from_steps(word: &str) -> Result<Self, QkzError> {
        let mut h = vec![0u32];
        for ch in word.chars() {
            let cur = *h.last().unwrap();
            match ch {
                'U' | 'u' | '(' => h.push(cur + 1),
                'D' | 'd' | ')' => {
                    if cur == 0 {
                        return Err(QkzError::InvalidPath(format!("{word}: goes below zero")));
                    }
                    h.push(cur - 1)
                }
                _ => return Err(QkzError::InvalidPath(format!("{word}: unexpected {ch:?}"))),
            }
        }
        Self::new(h)
    }

    /// Length L (number of steps).
    pub fn len(&self) -> usize {
        self.heights.len() - 1
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    pub fn heights(&self) -> &[u32] {
        &self.heights
    }

    pub fn height(&self, i: usize) -> u32 {
        self.heights[i]
    }

    /// The up/down word, `U` for a step up.
    pub fn steps(&self) -> String {
        self.heights.windows(2).map(|w| if w[1] > w[0] { 'U' } else { 'D' }).collect()
    }

    /// Interior positions i with α_{i−1} < α_i > α_{i+1}.
    pub fn local_maxima(&self) -> Vec<usize> {
        (1..self.len()).filter(|&i| self.heights[i - 1] < self.heights[i] && self.heights[i] > self.heights[i + 1]).collect()
    }

    /// True if this path lies weakly above `other` everywhere.
    pub fn is_above(&self, other: &DyckPath) -> bool {
        self.len() == other.len() && self.heights.iter().zip(&other.heights).all(|(a, b)| a >= b)
    }

    /// The highest path Ω, with Ω_i = min(i, L + (L mod 2) − i).
    pub fn maximal(l: usize) -> Self {
        DyckPath { heights: (0..=l).map(|i| i.min(l + l % 2 - i) as u32).collect() }
    }

    /// The lowest path: alternating 0,1,0,1,…
    pub fn minimal(l: usize) -> Self {
        DyckPath { heights: (0..=l).map(|i| (i % 2) as u32).collect() }
    }
}

impl fmt::Display for DyckPath {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.steps())
    }
}

impl fmt::Debug for DyckPath {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let h: Vec<String> = self.heights.iter().map(u32::to_string).collect();
        write!(f, "({})", h.join(""))
    }
}

/// All Dyck paths of length L, sorted lexicographically by heights.
pub fn enumerate_dyck(l: usize) -> Vec<DyckPath> {
    fn rec(l: usize, h: &mut Vec<u32>, out: &mut Vec<DyckPath>) {
        let i = h.len() - 1;
        let cur = h[i];
        if i == l {
            if cur as usize == l % 2 {
                out.push(DyckPath { heights: h.clone() });
            }
            return;
        }
        let remaining = l - i - 1;
        for next in [cur.wrapping_sub(1), cur + 1] {
            if next == u32::MAX {
                continue;
            }
            // Must still be able to come down to the end height.
            if next as usize > remaining + l % 2 {
                continue;
            }
            h.push(next);
            rec(l, h, out);
            h.pop();
        }
    }
    let mut out = Vec::new();
    rec(l, &mut vec![0], &mut out);
    out
}

/// p̃ = ⌊(L−1)/2⌋ − p, the plateau height of Ω(L,p).
pub fn ptilde(l: usize, p: usize) -> Result<usize, QkzError> {
    let top = l.saturating_sub(1) / 2;
    if l == 0 || p > top {
        return Err(QkzError::POutOfRange { l, p });
    }
    Ok(top - p)
}

/// Ω(L,p): the pyramid Ω cut at height p̃ and continued as a zigzag
/// p̃, p̃+1, p̃, … so that every local minimum sits at height p̃.
pub fn omega_path(l: usize, p: usize) -> Result<DyckPath, QkzError> {
    let pt = ptilde(l, p)? as u32;
    let top = DyckPath::maximal(l);
    let heights = top
        .heights
        .iter()
        .enumerate()
        .map(|(i, &h)| if h <= pt { h } else { pt + ((i as u32 - pt) % 2) })
        .collect();
    Ok(DyckPath { heights })
}

/// Membership in D_{L,p}: α_i ≥ min(Ω_i, p̃) for all i.
pub fn in_family(alpha: &DyckPath, p: usize) -> Result<bool, QkzError> {
    let l = alpha.len();
    let pt = ptilde(l, p)? as u32;
    let top = DyckPath::maximal(l);
    Ok(alpha.heights.iter().zip(&top.heights).all(|(&a, &o)| a >= o.min(pt)))
}

/// The paths of D_{L,p} with their parameters.
#[derive(Clone, Debug)]
pub struct RestrictedFamily {
    pub l: usize,
    pub p: usize,
    pub ptilde: usize,
    pub members: Vec<DyckPath>,
}

pub fn restricted_family(l: usize, p: usize) -> Result<RestrictedFamily, QkzError> {
    let pt = ptilde(l, p)?;
    let members = enumerate_dyck(l).into_iter().filter(|a| in_family(a, p).unwrap_or(false)).collect();
    Ok(RestrictedFamily { l, p, ptilde: pt, members })
}

/// The statistic c_{α,p} = (−1)^{p̃}/2 · Σ_{i=2}^{L−1} (−1)^i (α_i − Ω(L,p)_i),
/// a signed box count between α and Ω(L,p).
pub fn c_value(alpha: &DyckPath, p: usize) -> Result<u32, QkzError> {
    let l = alpha.len();
    if !in_family(alpha, p)? {
        return Err(QkzError::NotInFamily { path: alpha.steps(), p });
    }
    let base = omega_path(l, p)?;
    let pt = ptilde(l, p)?;
    let mut s: i64 = 0;
    for i in 2..l {
        let d = alpha.heights[i] as i64 - base.heights[i] as i64;
        s += if i % 2 == 0 { d } else { -d };
    }
    if pt % 2 == 1 {
        s = -s;
    }
    if s % 2 != 0 || s < 0 {
        return Err(QkzError::Internal(format!("c-statistic {s}/2 for {alpha:?}, p={p}")));
    }
    Ok((s / 2) as u32)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn path(h: &[u32]) -> DyckPath {
        DyckPath::new(h.to_vec()).unwrap()
    }

    #[test]
    fn catalan_like_counts() {
        let counts: Vec<usize> = (1..=10).map(|l| enumerate_dyck(l).len()).collect();
        // Even L: Catalan numbers; odd L ends at height 1, giving C(L, ⌊L/2⌋).
        assert_eq!(counts, vec![1, 1, 2, 2, 5, 5, 14, 14, 42, 42]);
        let six = enumerate_dyck(6);
        let mut sorted = six.clone();
        sorted.sort();
        assert_eq!(six, sorted);
    }

    #[test]
    fn validation() {
        assert!(DyckPath::new(vec![0, 1, 0]).is_ok());
        assert!(DyckPath::new(vec![0, 1, 2, 1]).is_ok());
        assert!(DyckPath::new(vec![0, 1, 2]).is_err());
        assert!(DyckPath::new(vec![1, 0]).is_err());
        assert!(DyckPath::new(vec![0, 2, 0]).is_err());
        assert!(DyckPath::from_steps("UDD").is_err());
        assert_eq!(DyckPath::from_steps("UUDUDD").unwrap().steps(), "UUDUDD");
    }

    #[test]
    fn omega_paths() {
        assert_eq!(omega_path(4, 1).unwrap(), path(&[0, 1, 0, 1, 0]));
        assert_eq!(omega_path(8, 0).unwrap(), DyckPath::maximal(8));
        assert_eq!(omega_path(7, 0).unwrap(), DyckPath::maximal(7));
        // p̃ = 2 for (12,3): pyramid base of height 2 then zigzag 2,3,2,…
        assert_eq!(omega_path(12, 3).unwrap(), path(&[0, 1, 2, 3, 2, 3, 2, 3, 2, 3, 2, 1, 0]));
        assert!(omega_path(4, 2).is_err());
        for l in 2..=10 {
            for p in 0..=(l - 1) / 2 {
                let w = omega_path(l, p).unwrap();
                assert!(in_family(&w, p).unwrap());
                assert_eq!(c_value(&w, p).unwrap(), 0);
            }
        }
    }

    #[test]
    fn c_values() {
        assert_eq!(c_value(&DyckPath::maximal(4), 1).unwrap(), 1);
        // Ω(6,1) = 0121210; the pyramid differs by 2 at the odd position 3
        // and p̃ = 1 is odd, so c = 1.
        assert_eq!(c_value(&DyckPath::maximal(6), 1).unwrap(), 1);
        assert_eq!(c_value(&path(&[0, 1, 2, 1, 2, 1, 0]), 1).unwrap(), 0);
        assert!(c_value(&path(&[0, 1, 0, 1, 0]), 0).is_err());
    }
}
