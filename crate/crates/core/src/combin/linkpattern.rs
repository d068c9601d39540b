//! Link patterns on L points, and their bijections with Dyck paths and
//! two-row standard Young tableaux.

use std::fmt;

use crate::qkz::DyckPath;

use super::CombinError;

/// A noncrossing perfect matching of points 1..L, where for odd L exactly one
/// point is connected to infinity ("top").
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct LinkPattern {
    partner: Vec<Option<usize>>,
}

impl LinkPattern {
    /// Parse a parenthesis word. Whitespace is ignored and an unmatched `(`
    /// is a point connected to the top.
    pub fn from_parens(s: &str) -> Result<Self, CombinError> {
        let chars: Vec<char> = s.chars().filter(|c| !c.is_whitespace()).collect();
        let mut partner = vec![None; chars.len()];
        let mut open = Vec::new();
        for (i, &ch) in chars.iter().enumerate() {
            match ch {
                '(' => open.push(i),
                ')' => {
                    let j = open.pop().ok_or_else(|| CombinError::Parse(format!("{s}: unmatched ')' at {}", i + 1)))?;
                    partner[i] = Some(j);
                    partner[j] = Some(i);
                }
                _ => return Err(CombinError::Parse(format!("{s}: unexpected {ch:?}"))),
            }
        }
        if open.len() > 1 || open.len() != chars.len() % 2 {
            return Err(CombinError::Parse(format!("{s}: {} points left open", open.len())));
        }
        Ok(LinkPattern { partner })
    }

    pub fn len(&self) -> usize {
        self.partner.len()
    }

    pub fn is_empty(&self) -> bool {
        self.partner.is_empty()
    }

    /// Partner of point i (0-based), or None for the point connected to the top.
    pub fn partner(&self, i: usize) -> Option<usize> {
        self.partner[i]
    }

    pub fn to_parens(&self) -> String {
        (0..self.len()).map(|i| if self.opens(i) { '(' } else { ')' }).collect()
    }

    fn opens(&self, i: usize) -> bool {
        self.partner[i].is_none_or(|j| j > i)
    }

    /// Openers are up steps, closers down steps.
    pub fn to_dyck(&self) -> DyckPath {
        let mut h = vec![0u32];
        for i in 0..self.len() {
            let cur = *h.last().unwrap();
            h.push(if self.opens(i) { cur + 1 } else { cur - 1 });
        }
        DyckPath::new(h).expect("link patterns give valid paths")
    }

    pub fn from_dyck(path: &DyckPath) -> Self {
        let word: String = path.steps().chars().map(|c| if c == 'U' { '(' } else { ')' }).collect();
        Self::from_parens(&word).expect("Dyck paths give valid words")
    }

    /// Row one holds the positions (1-based) of the openers, row two those of the closers.
    pub fn to_tableau(&self) -> YoungTableau {
        let (top, bottom) = (1..=self.len()).partition(|&i| self.opens(i - 1));
        YoungTableau { top, bottom }
    }

    pub fn from_tableau(t: &YoungTableau) -> Result<Self, CombinError> {
        t.validate()?;
        let n = t.top.len() + t.bottom.len();
        let mut word = vec![')'; n];
        for &i in &t.top {
            word[i - 1] = '(';
        }
        Self::from_parens(&word.into_iter().collect::<String>())
    }
}

impl fmt::Display for LinkPattern {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_parens())
    }
}

impl fmt::Debug for LinkPattern {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "LinkPattern({})", self.to_parens())
    }
}

/// A standard Young tableau with two rows of lengths ⌈L/2⌉ and ⌊L/2⌋.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct YoungTableau {
    pub top: Vec<usize>,
    pub bottom: Vec<usize>,
}

impl YoungTableau {
    pub fn validate(&self) -> Result<(), CombinError> {
        let n = self.top.len() + self.bottom.len();
        let bad = |why: &str| Err(CombinError::Parse(format!("tableau {:?}/{:?}: {why}", self.top, self.bottom)));
        if self.top.len() != n.div_ceil(2) {
            return bad("wrong shape");
        }
        let mut seen = vec![false; n + 1];
        for &x in self.top.iter().chain(&self.bottom) {
            if x == 0 || x > n || seen[x] {
                return bad("entries must be 1..L, each once");
            }
            seen[x] = true;
        }
        let increasing = |v: &[usize]| v.windows(2).all(|w| w[0] < w[1]);
        if !increasing(&self.top) || !increasing(&self.bottom) {
            return bad("rows must increase");
        }
        if self.top.iter().zip(&self.bottom).any(|(a, b)| a >= b) {
            return bad("columns must increase");
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::qkz::enumerate_dyck;

    #[test]
    fn spaced_word_with_open_point() {
        let lp = LinkPattern::from_parens("( (( (()) (()) ))").unwrap();
        assert_eq!(lp.len(), 13);
        assert_eq!(lp.partner(0), None);
        assert_eq!(lp.partner(1), Some(12));
        assert_eq!(lp.to_parens(), "((((())(())))");
        assert!(LinkPattern::from_parens("(()").is_ok());
        assert!(LinkPattern::from_parens("((()").is_err());
        assert!(LinkPattern::from_parens(")(").is_err());
    }

    #[test]
    fn round_trips() {
        for l in 1..=10 {
            for path in enumerate_dyck(l) {
                let lp = LinkPattern::from_dyck(&path);
                assert_eq!(lp.to_dyck(), path);
                let t = lp.to_tableau();
                t.validate().unwrap();
                assert_eq!(LinkPattern::from_tableau(&t).unwrap(), lp);
                assert_eq!(LinkPattern::from_parens(&lp.to_parens()).unwrap(), lp);
            }
        }
    }
}
