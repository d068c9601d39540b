//! The octahedron recurrence (discrete Hirota equation)
//!
//!   f(n,i,j) f(n−2,i,j) = f(n−1,i−1,j) f(n−1,i+1,j) + τ² f(n−1,i,j−1) f(n−1,i,j+1),
//!
//! solved forward from matrix boundary data to give the τ²-determinant, and
//! the alternating-sign-matrix expansion that serves as its oracle.
//!
//! Lattice convention: the connected minor of size n whose top-left entry is
//! (r, c) (0-based) of an N×N matrix lives at i = r + c + n + 1 − N,
//! j = r − c + 1. The two coefficient-1 neighbours of a minor are then the
//! minors shifted along the diagonal, the two τ²-neighbours the anti-diagonal
//! ones, and the whole matrix sits at (N, 1, 1).

mod asm;
mod verify;

pub use asm::{asm_expansion, count_negatives, enumerate_asm, inversions, ASMatrix, MAX_ASM_SIZE};
pub use verify::{
    check_stencil, symbolic_exactness, tee_stencil, verify_asm_oracle, verify_ordinary_det, verify_symbolic,
};

use std::collections::HashMap;

use rayon::prelude::*;

use crate::ring::{Matrix, Ring, RingError};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum HirotaError {
    #[error("zero divisor at f({n},{i},{j}): degenerate input")]
    Degenerate { n: i64, i: i64, j: i64 },
    #[error("inexact division at f({n},{i},{j})")]
    Inexact { n: i64, i: i64, j: i64 },
    #[error("layer {requested} requested but the next layer is {next}")]
    LayerOrder { requested: i64, next: i64 },
    #[error("size {n} exceeds the enumeration cap {max}")]
    TooLarge { n: usize, max: usize },
    #[error(transparent)]
    Ring(#[from] RingError),
}

/// Lattice position of the connected minor of size n at top-left (r, c) in an N×N matrix.
pub fn minor_position(size: usize, n: usize, r: usize, c: usize) -> (i64, i64) {
    let (size, n, r, c) = (size as i64, n as i64, r as i64, c as i64);
    (r + c + n + 1 - size, r - c + 1)
}

type Layer<T> = HashMap<(i64, i64), T>;

/// Layers of the octahedron recurrence computed so far.
#[derive(Clone, Debug)]
pub struct OctState<T: Ring> {
    tau2: T,
    layers: Vec<Option<Layer<T>>>,
    keep_history: bool,
}

impl<T: Ring> OctState<T> {
    /// Start from explicit layers 0 and 1.
    pub fn from_layers(layer0: Layer<T>, layer1: Layer<T>, tau2: T) -> Self {
        OctState { tau2, layers: vec![Some(layer0), Some(layer1)], keep_history: false }
    }

    /// Boundary data of a square matrix: ones on layer 0, the entries on layer 1.
    pub fn from_matrix(a: &Matrix<T>, tau2: T) -> Result<Self, HirotaError> {
        if a.rows() != a.cols() {
            return Err(RingError::NotSquare { rows: a.rows(), cols: a.cols() }.into());
        }
        let size = a.rows();
        let mut l0 = Layer::new();
        let mut l1 = Layer::new();
        for r in 0..size {
            for c in 0..size {
                l0.insert(minor_position(size, 0, r, c), T::one());
                l1.insert(minor_position(size, 1, r, c), a.get(r, c).clone());
            }
        }
        Ok(Self::from_layers(l0, l1, tau2))
    }

    /// Keep every layer instead of only the two most recent.
    pub fn keep_history(mut self, yes: bool) -> Self {
        self.keep_history = yes;
        self
    }

    /// Index of the next layer [`OctState::step`] will compute.
    pub fn next_layer(&self) -> i64 {
        self.layers.len() as i64
    }

    pub fn layer(&self, n: i64) -> Option<&Layer<T>> {
        self.layers.get(usize::try_from(n).ok()?)?.as_ref()
    }

    pub fn value(&self, n: i64, i: i64, j: i64) -> Option<&T> {
        self.layer(n)?.get(&(i, j))
    }

    /// Compute the next layer at every point whose five neighbours exist.
    pub fn step(&mut self) -> Result<(), HirotaError> {
        let n = self.next_layer();
        let (prev, prev2) = (self.layer(n - 1).expect("layer n−1"), self.layer(n - 2).expect("layer n−2"));
        let points: Vec<(&(i64, i64), &T)> = prev2.iter().collect();
        let tau2 = &self.tau2;
        let computed: Vec<((i64, i64), T)> = points
            .par_iter()
            .filter_map(|&(&(i, j), below)| {
                let nb = [(i - 1, j), (i + 1, j), (i, j - 1), (i, j + 1)];
                let v: Vec<&T> = nb.iter().map(|p| prev.get(p)).collect::<Option<_>>()?;
                Some(((i, j), below, v))
            })
            .map(|((i, j), below, v)| {
                if below.is_zero() {
                    return Err(HirotaError::Degenerate { n, i, j });
                }
                let num = v[0].mul(v[1]).add(&tau2.mul(&v[2].mul(v[3])));
                let q = num.div_exact(below).ok_or(HirotaError::Inexact { n, i, j })?;
                Ok(((i, j), q))
            })
            .collect::<Result<_, _>>()?;
        if !self.keep_history && n >= 3 {
            self.layers[(n - 3) as usize] = None;
        }
        self.layers.push(Some(computed.into_iter().collect()));
        Ok(())
    }
}

/// Advance `state` to layer n, which must be the next one.
pub fn octahedron_step<T: Ring>(mut state: OctState<T>, n: i64) -> Result<OctState<T>, HirotaError> {
    if n != state.next_layer() {
        return Err(HirotaError::LayerOrder { requested: n, next: state.next_layer() });
    }
    state.step()?;
    Ok(state)
}

/// The τ²-determinant |A|_{τ²} = f(N, 1, 1). At τ² = −1 this is the ordinary
/// determinant.
pub fn tau2_det<T: Ring>(a: &Matrix<T>, tau2: &T) -> Result<T, HirotaError> {
    let size = a.rows() as i64;
    if size == 0 {
        return Ok(T::one());
    }
    let mut st = OctState::from_matrix(a, tau2.clone())?;
    while st.next_layer() <= size {
        st.step()?;
    }
    Ok(st.value(size, 1, 1).expect("full minor").clone())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ring::{rat, BigRational};

    fn m(rows: &[&[i64]]) -> Matrix<BigRational> {
        Matrix::from_rows(rows.iter().map(|r| r.iter().map(|&x| rat(x, 1)).collect()).collect()).unwrap()
    }

    #[test]
    fn calibration() {
        assert_eq!(tau2_det(&m(&[&[7]]), &rat(5, 1)).unwrap(), rat(7, 1));
        // a₁₁a₂₂ + τ²a₁₂a₂₁
        let a = m(&[&[2, 3], &[5, 7]]);
        assert_eq!(tau2_det(&a, &rat(11, 1)).unwrap(), rat(14 + 11 * 15, 1));
        assert_eq!(tau2_det(&a, &rat(-1, 1)).unwrap(), rat(-1, 1));
        assert_eq!(minor_position(4, 4, 0, 0), (1, 1));
    }

    #[test]
    fn layer_one_passthrough_and_ones() {
        let a = m(&[&[1, 1, 1], &[1, 1, 1], &[1, 1, 1]]);
        let mut st = OctState::from_matrix(&a, rat(0, 1)).unwrap().keep_history(true);
        for r in 0..3 {
            for c in 0..3 {
                let (i, j) = minor_position(3, 1, r, c);
                assert_eq!(st.value(1, i, j), Some(&rat(1, 1)));
            }
        }
        st.step().unwrap();
        assert_eq!(st.layer(2).unwrap().len(), 4);
        assert!(st.layer(2).unwrap().values().all(|v| *v == rat(1, 1)));
        assert!(octahedron_step(st, 5).is_err());
    }

    #[test]
    fn degenerate_reported() {
        let a = m(&[&[1, 2, 3], &[4, 0, 6], &[7, 8, 9]]);
        assert!(matches!(tau2_det(&a, &rat(2, 1)), Err(HirotaError::Degenerate { n: 3, .. })));
    }
}
