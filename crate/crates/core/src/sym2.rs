//! Symmetric bilinear maps ℝⁿ×ℝⁿ → ℝⁿ, the additive group S²ₙ.
//!
//! An element `s` has components `s^i_{jk}` symmetric in the lower pair.
//! Storage packs `(j ≤ k)` in lexicographic order — (0,0), (0,1), …,
//! (0,n−1), (1,1), … — one block of `n(n+1)/2` entries per upper index `i`.
//! This index map is part of the public contract: constraint matrices built
//! over the packed coordinates are reproducible across runs.

use std::ops::{Add, Neg, Sub};

use num_traits::Zero;

use crate::error::{Error, Result};
use crate::scalar::Scalar;

/// Number of packed lower-index pairs for dimension `n`.
pub fn pair_count(n: usize) -> usize {
    n * (n + 1) / 2
}

/// Packed position of the unordered pair `{j, k}`, `0 ≤ j, k < n`.
pub fn pair_index(n: usize, j: usize, k: usize) -> usize {
    let (j, k) = if j <= k { (j, k) } else { (k, j) };
    j * (2 * n - j + 1) / 2 + (k - j)
}

#[derive(Clone, PartialEq)]
pub struct Sym2Tensor<T> {
    n: usize,
    entries: Vec<T>, // entries[i * pair_count(n) + pair_index(n, j, k)]
}

impl<T: Scalar> Sym2Tensor<T> {
    pub fn zeros(n: usize) -> Self {
        Sym2Tensor {
            n,
            entries: vec![T::zero(); n * pair_count(n)],
        }
    }

    /// Single unit entry at `s^i_{jk}` (and its mirror).
    pub fn unit(n: usize, i: usize, j: usize, k: usize) -> Self {
        let mut s = Self::zeros(n);
        s.set(i, j, k, T::one());
        s
    }

    /// Builds from `n` rows of `n(n+1)/2` packed entries each.
    pub fn from_rows(rows: Vec<Vec<T>>) -> Result<Self> {
        let n = rows.len();
        if rows.iter().any(|r| r.len() != pair_count(n)) {
            return Err(Error::DimensionMismatch(format!(
                "expected {} packed entries per upper index",
                pair_count(n)
            )));
        }
        Ok(Sym2Tensor {
            n,
            entries: rows.into_iter().flatten().collect(),
        })
    }

    pub fn from_flat(n: usize, entries: Vec<T>) -> Result<Self> {
        if entries.len() != n * pair_count(n) {
            return Err(Error::DimensionMismatch(format!(
                "expected {} packed entries for dimension {n}",
                n * pair_count(n)
            )));
        }
        Ok(Sym2Tensor { n, entries })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn get(&self, i: usize, j: usize, k: usize) -> &T {
        &self.entries[i * pair_count(self.n) + pair_index(self.n, j, k)]
    }

    pub fn set(&mut self, i: usize, j: usize, k: usize, v: T) {
        self.entries[i * pair_count(self.n) + pair_index(self.n, j, k)] = v;
    }

    pub fn add_to(&mut self, i: usize, j: usize, k: usize, v: T) {
        let idx = i * pair_count(self.n) + pair_index(self.n, j, k);
        self.entries[idx] = self.entries[idx].clone() + v;
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(Zero::is_zero)
    }

    pub fn scale(&self, k: &T) -> Self {
        Sym2Tensor {
            n: self.n,
            entries: self.entries.iter().map(|e| e.clone() * k.clone()).collect(),
        }
    }

    pub fn map<U: Scalar>(&self, f: impl Fn(&T) -> U) -> Sym2Tensor<U> {
        Sym2Tensor {
            n: self.n,
            entries: self.entries.iter().map(f).collect(),
        }
    }

    /// Packed coordinates, i-major: the flattening used by every span and
    /// nullspace computation over S²ₙ.
    pub fn flatten(&self) -> Vec<T> {
        self.entries.clone()
    }

    /// Lower-index trace `t_k = Σ_i s^i_{ik}`.
    pub fn lower_trace(&self) -> Vec<T> {
        (0..self.n)
            .map(|k| {
                (0..self.n).fold(T::zero(), |acc, i| acc + self.get(i, i, k).clone())
            })
            .collect()
    }
}

impl<'a, 'b, T: Scalar> Add<&'b Sym2Tensor<T>> for &'a Sym2Tensor<T> {
    type Output = Sym2Tensor<T>;
    fn add(self, rhs: &'b Sym2Tensor<T>) -> Sym2Tensor<T> {
        assert_eq!(self.n, rhs.n, "dimension mismatch");
        Sym2Tensor {
            n: self.n,
            entries: self
                .entries
                .iter()
                .zip(&rhs.entries)
                .map(|(a, b)| a.clone() + b.clone())
                .collect(),
        }
    }
}

impl<'a, 'b, T: Scalar> Sub<&'b Sym2Tensor<T>> for &'a Sym2Tensor<T> {
    type Output = Sym2Tensor<T>;
    fn sub(self, rhs: &'b Sym2Tensor<T>) -> Sym2Tensor<T> {
        assert_eq!(self.n, rhs.n, "dimension mismatch");
        Sym2Tensor {
            n: self.n,
            entries: self
                .entries
                .iter()
                .zip(&rhs.entries)
                .map(|(a, b)| a.clone() - b.clone())
                .collect(),
        }
    }
}

impl<'a, T: Scalar> Neg for &'a Sym2Tensor<T> {
    type Output = Sym2Tensor<T>;
    fn neg(self) -> Sym2Tensor<T> {
        self.map(|e| -e.clone())
    }
}

impl<T: Scalar> std::fmt::Debug for Sym2Tensor<T> {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "Sym2Tensor(n={}) [", self.n)?;
        for i in 0..self.n {
            let row: Vec<String> = (0..pair_count(self.n))
                .map(|p| format!("{}", self.entries[i * pair_count(self.n) + p]))
                .collect();
            write!(f, " [{}]", row.join(", "))?;
        }
        write!(f, " ]")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::{rat_int, Rat};

    #[test]
    fn packing_order_is_lexicographic() {
        // n = 3: (0,0) (0,1) (0,2) (1,1) (1,2) (2,2)
        assert_eq!(pair_index(3, 0, 0), 0);
        assert_eq!(pair_index(3, 0, 1), 1);
        assert_eq!(pair_index(3, 0, 2), 2);
        assert_eq!(pair_index(3, 1, 1), 3);
        assert_eq!(pair_index(3, 2, 1), 4); // unordered access
        assert_eq!(pair_index(3, 2, 2), 5);
        assert_eq!(pair_count(3), 6);
    }

    #[test]
    fn symmetric_access() {
        let mut s = Sym2Tensor::<Rat>::zeros(2);
        s.set(0, 1, 0, rat_int(7));
        assert_eq!(*s.get(0, 0, 1), rat_int(7));
        assert_eq!(*s.get(0, 1, 0), rat_int(7));
    }

    #[test]
    fn lower_trace_sums_diagonal_slices() {
        let mut s = Sym2Tensor::<Rat>::zeros(2);
        s.set(0, 0, 1, rat_int(3)); // contributes to t_1 via i = 0
        s.set(1, 1, 1, rat_int(4)); // contributes to t_1 via i = 1
        assert_eq!(s.lower_trace(), vec![rat_int(0), rat_int(7)]);
    }
}
