//! Dense matrices over an exact scalar field, with the elimination routines
//! (rank, nullspace, inverse, congruence diagonalization) the rest of the
//! crate builds on.
//!
//! Elimination uses deterministic pivoting: the first nonzero entry in column
//! order. Over the rational scalar every result is exact and reproducible;
//! the same code instantiated at `f64` is used only on the float legs of
//! root-bearing operations, never for rank decisions that matter.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::Zero;

use crate::error::{Error, Result};
use crate::scalar::Scalar;

#[derive(Clone, PartialEq)]
pub struct Matrix<T> {
    rows: usize,
    cols: usize,
    data: Vec<T>,
}

impl<T: Scalar> Matrix<T> {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Matrix {
            rows,
            cols,
            data: vec![T::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m.set(i, i, T::one());
        }
        m
    }

    pub fn diagonal(entries: &[T]) -> Self {
        let mut m = Self::zeros(entries.len(), entries.len());
        for (i, e) in entries.iter().enumerate() {
            m.set(i, i, e.clone());
        }
        m
    }

    /// `k * I_n`.
    pub fn scalar(n: usize, k: T) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m.set(i, i, k.clone());
        }
        m
    }

    pub fn from_rows(rows: Vec<Vec<T>>) -> Result<Self> {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        if rows.iter().any(|row| row.len() != c) {
            return Err(Error::DimensionMismatch("ragged matrix rows".into()));
        }
        Ok(Matrix {
            rows: r,
            cols: c,
            data: rows.into_iter().flatten().collect(),
        })
    }

    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> T) -> Self {
        let mut data = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for j in 0..cols {
                data.push(f(i, j));
            }
        }
        Matrix { rows, cols, data }
    }

    /// Single column vector as an n×1 matrix.
    pub fn column(entries: Vec<T>) -> Self {
        let rows = entries.len();
        Matrix {
            rows,
            cols: 1,
            data: entries,
        }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &T {
        &self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: T) {
        self.data[i * self.cols + j] = v;
    }

    pub fn row(&self, i: usize) -> &[T] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn entries(&self) -> &[T] {
        &self.data
    }

    pub fn map<U: Scalar>(&self, f: impl Fn(&T) -> U) -> Matrix<U> {
        Matrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(f).collect(),
        }
    }

    pub fn transpose(&self) -> Self {
        Matrix::from_fn(self.cols, self.rows, |i, j| self.get(j, i).clone())
    }

    pub fn is_symmetric(&self) -> bool {
        self.is_square()
            && (0..self.rows).all(|i| (0..i).all(|j| self.get(i, j) == self.get(j, i)))
    }

    pub fn trace(&self) -> T {
        assert!(self.is_square());
        (0..self.rows).fold(T::zero(), |acc, i| acc + self.get(i, i).clone())
    }

    pub fn scale(&self, k: &T) -> Self {
        self.map(|x| x.clone() * k.clone())
    }

    pub fn mul_vec(&self, v: &[T]) -> Vec<T> {
        assert_eq!(self.cols, v.len(), "matrix-vector dimension mismatch");
        (0..self.rows)
            .map(|i| {
                (0..self.cols).fold(T::zero(), |acc, j| {
                    acc + self.get(i, j).clone() * v[j].clone()
                })
            })
            .collect()
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(Zero::is_zero)
    }

    /// Commutator `self * other - other * self`.
    pub fn commutator(&self, other: &Self) -> Self {
        &(self * other) - &(other * self)
    }

    /// Determinant by Gaussian elimination with exact pivots.
    pub fn det(&self) -> T {
        assert!(self.is_square(), "determinant of a non-square matrix");
        let n = self.rows;
        let mut a = self.clone();
        let mut det = T::one();
        for col in 0..n {
            let pivot = match (col..n).find(|&r| !a.get(r, col).is_zero()) {
                Some(p) => p,
                None => return T::zero(),
            };
            if pivot != col {
                a.swap_rows(pivot, col);
                det = -det;
            }
            let p = a.get(col, col).clone();
            det = det * p.clone();
            for r in col + 1..n {
                let factor = a.get(r, col).clone() / p.clone();
                if factor.is_zero() {
                    continue;
                }
                for c in col..n {
                    let v = a.get(r, c).clone() - factor.clone() * a.get(col, c).clone();
                    a.set(r, c, v);
                }
            }
        }
        det
    }

    /// Inverse by Gauss–Jordan elimination; `None` when singular.
    pub fn inverse(&self) -> Option<Self> {
        assert!(self.is_square());
        let n = self.rows;
        let mut a = self.clone();
        let mut inv = Self::identity(n);
        for col in 0..n {
            let pivot = (col..n).find(|&r| !a.get(r, col).is_zero())?;
            if pivot != col {
                a.swap_rows(pivot, col);
                inv.swap_rows(pivot, col);
            }
            let p = a.get(col, col).clone();
            for c in 0..n {
                let v = a.get(col, c).clone() / p.clone();
                a.set(col, c, v);
                let w = inv.get(col, c).clone() / p.clone();
                inv.set(col, c, w);
            }
            for r in 0..n {
                if r == col || a.get(r, col).is_zero() {
                    continue;
                }
                let factor = a.get(r, col).clone();
                for c in 0..n {
                    let v = a.get(r, c).clone() - factor.clone() * a.get(col, c).clone();
                    a.set(r, c, v);
                    let w = inv.get(r, c).clone() - factor.clone() * inv.get(col, c).clone();
                    inv.set(r, c, w);
                }
            }
        }
        Some(inv)
    }

    /// Inverse as adjugate over determinant. Same result as [`Matrix::inverse`];
    /// kept as the route for inverse metrics so every entry is an explicit
    /// ratio of minors.
    pub fn inverse_adjugate(&self) -> Option<Self> {
        assert!(self.is_square());
        let n = self.rows;
        let det = self.det();
        if det.is_zero() {
            return None;
        }
        if n == 1 {
            return Some(Matrix::from_fn(1, 1, |_, _| T::one() / det.clone()));
        }
        let inv = Matrix::from_fn(n, n, |i, j| {
            // adjugate entry (i, j) = cofactor (j, i)
            let m = self.minor(j, i).det();
            let sign = if (i + j) % 2 == 0 { T::one() } else { -T::one() };
            sign * m / det.clone()
        });
        Some(inv)
    }

    fn minor(&self, drop_row: usize, drop_col: usize) -> Self {
        let n = self.rows;
        Matrix::from_fn(n - 1, n - 1, |i, j| {
            let si = if i < drop_row { i } else { i + 1 };
            let sj = if j < drop_col { j } else { j + 1 };
            self.get(si, sj).clone()
        })
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for c in 0..self.cols {
            self.data.swap(a * self.cols + c, b * self.cols + c);
        }
    }

    /// Reduced row echelon form with the pivot columns, pivoting on the first
    /// nonzero entry per column.
    pub fn rref(&self) -> Rref<T> {
        let mut a = self.clone();
        let mut pivots = Vec::new();
        let mut row = 0;
        for col in 0..a.cols {
            if row >= a.rows {
                break;
            }
            let pivot = match (row..a.rows).find(|&r| !a.get(r, col).is_zero()) {
                Some(p) => p,
                None => continue,
            };
            a.swap_rows(pivot, row);
            let p = a.get(row, col).clone();
            for c in col..a.cols {
                let v = a.get(row, c).clone() / p.clone();
                a.set(row, c, v);
            }
            for r in 0..a.rows {
                if r == row || a.get(r, col).is_zero() {
                    continue;
                }
                let factor = a.get(r, col).clone();
                for c in col..a.cols {
                    let v = a.get(r, c).clone() - factor.clone() * a.get(row, c).clone();
                    a.set(r, c, v);
                }
            }
            pivots.push(col);
            row += 1;
        }
        Rref { matrix: a, pivots }
    }

    pub fn rank(&self) -> usize {
        self.rref().pivots.len()
    }

    /// Kernel basis in reduced column-echelon form: one vector per free
    /// column, with 1 at the free coordinate and zeros at the other free
    /// coordinates. Deterministic; an empty (0-row) matrix yields the full
    /// standard basis.
    pub fn nullspace(&self) -> Vec<Vec<T>> {
        let Rref { matrix, pivots } = self.rref();
        let mut basis = Vec::new();
        let mut pivot_iter = pivots.iter().copied().peekable();
        let mut pivot_row_of = vec![None; self.cols];
        for (r, c) in pivots.iter().copied().enumerate() {
            pivot_row_of[c] = Some(r);
        }
        for free in 0..self.cols {
            if pivot_iter.peek() == Some(&free) {
                pivot_iter.next();
                continue;
            }
            let mut v = vec![T::zero(); self.cols];
            v[free] = T::one();
            for (c, pr) in pivot_row_of.iter().enumerate() {
                if let Some(r) = pr {
                    v[c] = -matrix.get(*r, free).clone();
                }
            }
            basis.push(v);
        }
        basis
    }
}

/// Result of [`Matrix::rref`].
pub struct Rref<T> {
    pub matrix: Matrix<T>,
    pub pivots: Vec<usize>,
}

/// Solves `a x = b` exactly; returns a particular solution with free
/// variables set to zero, or `None` when inconsistent.
pub fn solve_linear<T: Scalar>(a: &Matrix<T>, b: &[T]) -> Option<Vec<T>> {
    assert_eq!(a.rows(), b.len(), "rhs length mismatch");
    let augmented = Matrix::from_fn(a.rows(), a.cols() + 1, |i, j| {
        if j < a.cols() {
            a.get(i, j).clone()
        } else {
            b[i].clone()
        }
    });
    let Rref { matrix, pivots } = augmented.rref();
    if pivots.contains(&a.cols()) {
        return None; // pivot in the rhs column
    }
    let mut x = vec![T::zero(); a.cols()];
    for (r, c) in pivots.iter().copied().enumerate() {
        x[c] = matrix.get(r, a.cols()).clone();
    }
    Some(x)
}

/// Sylvester inertia counts of a symmetric matrix.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Inertia {
    pub positive: usize,
    pub negative: usize,
    pub zero: usize,
}

/// Diagonalizes a symmetric matrix by congruence: returns the inertia and an
/// invertible `t` with `tᵗ · g · t` diagonal. Exact over rationals.
pub fn congruence_diagonalize<T: Scalar>(g: &Matrix<T>) -> Result<(Inertia, Matrix<T>)> {
    if !g.is_symmetric() {
        return Err(Error::NotSymmetric);
    }
    let n = g.rows();
    let mut a = g.clone();
    let mut t = Matrix::<T>::identity(n);

    // col_i += λ col_j together with the mirrored row op keeps a congruent.
    let add_col = |a: &mut Matrix<T>, t: &mut Matrix<T>, i: usize, j: usize, lambda: &T| {
        for r in 0..n {
            let v = a.get(r, i).clone() + lambda.clone() * a.get(r, j).clone();
            a.set(r, i, v);
        }
        for c in 0..n {
            let v = a.get(i, c).clone() + lambda.clone() * a.get(j, c).clone();
            a.set(i, c, v);
        }
        for r in 0..n {
            let v = t.get(r, i).clone() + lambda.clone() * t.get(r, j).clone();
            t.set(r, i, v);
        }
    };
    let swap = |a: &mut Matrix<T>, t: &mut Matrix<T>, i: usize, j: usize| {
        if i == j {
            return;
        }
        for r in 0..n {
            let (x, y) = (a.get(r, i).clone(), a.get(r, j).clone());
            a.set(r, i, y);
            a.set(r, j, x);
        }
        for c in 0..n {
            let (x, y) = (a.get(i, c).clone(), a.get(j, c).clone());
            a.set(i, c, y);
            a.set(j, c, x);
        }
        for r in 0..n {
            let (x, y) = (t.get(r, i).clone(), t.get(r, j).clone());
            t.set(r, i, y);
            t.set(r, j, x);
        }
    };

    for k in 0..n {
        if a.get(k, k).is_zero() {
            if let Some(j) = (k + 1..n).find(|&j| !a.get(j, j).is_zero()) {
                swap(&mut a, &mut t, k, j);
            } else {
                // All remaining diagonal entries vanish; a nonzero
                // off-diagonal pair (i, j) gives 2·a[i][j] on the diagonal.
                let mut found = None;
                'search: for i in k..n {
                    for j in i + 1..n {
                        if !a.get(i, j).is_zero() {
                            found = Some((i, j));
                            break 'search;
                        }
                    }
                }
                match found {
                    Some((i, j)) => {
                        add_col(&mut a, &mut t, i, j, &T::one());
                        swap(&mut a, &mut t, k, i);
                    }
                    None => break, // remaining block is zero
                }
            }
        }
        let pivot = a.get(k, k).clone();
        for i in k + 1..n {
            if a.get(i, k).is_zero() {
                continue;
            }
            let lambda = -(a.get(i, k).clone() / pivot.clone());
            add_col(&mut a, &mut t, i, k, &lambda);
        }
    }

    let mut inertia = Inertia {
        positive: 0,
        negative: 0,
        zero: 0,
    };
    for i in 0..n {
        let d = a.get(i, i);
        if d.is_zero() {
            inertia.zero += 1;
        } else if d.is_positive() {
            inertia.positive += 1;
        } else {
            inertia.negative += 1;
        }
    }
    Ok((inertia, t))
}

/// Row span of a set of vectors, held in reduced row echelon form. RREF is a
/// canonical form, so two spans are equal iff the stored rows are equal.
#[derive(Clone, PartialEq)]
pub struct RowSpan<T> {
    cols: usize,
    rows: Vec<Vec<T>>,
    pivots: Vec<usize>,
}

impl<T: Scalar> RowSpan<T> {
    pub fn from_vectors(cols: usize, vectors: &[Vec<T>]) -> Self {
        assert!(vectors.iter().all(|v| v.len() == cols));
        if vectors.is_empty() {
            return RowSpan {
                cols,
                rows: Vec::new(),
                pivots: Vec::new(),
            };
        }
        let m = Matrix::from_rows(vectors.to_vec()).expect("uniform vector lengths");
        let Rref { matrix, pivots } = m.rref();
        let rows = (0..pivots.len()).map(|r| matrix.row(r).to_vec()).collect();
        RowSpan {
            cols,
            rows,
            pivots,
        }
    }

    pub fn dim(&self) -> usize {
        self.rows.len()
    }

    /// Reduces `v` against the span; the remainder is zero iff `v` lies in it.
    pub fn reduce(&self, v: &[T]) -> Vec<T> {
        assert_eq!(v.len(), self.cols);
        let mut w = v.to_vec();
        for (row, &p) in self.rows.iter().zip(&self.pivots) {
            if w[p].is_zero() {
                continue;
            }
            let factor = w[p].clone();
            for c in 0..self.cols {
                w[c] = w[c].clone() - factor.clone() * row[c].clone();
            }
        }
        w
    }

    pub fn contains(&self, v: &[T]) -> bool {
        self.reduce(v).iter().all(Zero::is_zero)
    }

    pub fn same_span(&self, other: &Self) -> bool {
        self.cols == other.cols && self.rows == other.rows
    }
}

impl<'a, 'b, T: Scalar> Add<&'b Matrix<T>> for &'a Matrix<T> {
    type Output = Matrix<T>;
    fn add(self, rhs: &'b Matrix<T>) -> Matrix<T> {
        assert_eq!((self.rows, self.cols), (rhs.rows, rhs.cols));
        Matrix::from_fn(self.rows, self.cols, |i, j| {
            self.get(i, j).clone() + rhs.get(i, j).clone()
        })
    }
}

impl<'a, 'b, T: Scalar> Sub<&'b Matrix<T>> for &'a Matrix<T> {
    type Output = Matrix<T>;
    fn sub(self, rhs: &'b Matrix<T>) -> Matrix<T> {
        assert_eq!((self.rows, self.cols), (rhs.rows, rhs.cols));
        Matrix::from_fn(self.rows, self.cols, |i, j| {
            self.get(i, j).clone() - rhs.get(i, j).clone()
        })
    }
}

impl<'a, 'b, T: Scalar> Mul<&'b Matrix<T>> for &'a Matrix<T> {
    type Output = Matrix<T>;
    fn mul(self, rhs: &'b Matrix<T>) -> Matrix<T> {
        assert_eq!(self.cols, rhs.rows, "matrix product dimension mismatch");
        Matrix::from_fn(self.rows, rhs.cols, |i, j| {
            (0..self.cols).fold(T::zero(), |acc, k| {
                acc + self.get(i, k).clone() * rhs.get(k, j).clone()
            })
        })
    }
}

impl<'a, T: Scalar> Neg for &'a Matrix<T> {
    type Output = Matrix<T>;
    fn neg(self) -> Matrix<T> {
        self.map(|x| -x.clone())
    }
}

impl<T: Scalar> fmt::Debug for Matrix<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "Matrix {}x{} [", self.rows, self.cols)?;
        for i in 0..self.rows {
            write!(f, "  ")?;
            for j in 0..self.cols {
                write!(f, "{} ", self.get(i, j))?;
            }
            writeln!(f)?;
        }
        write!(f, "]")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::{rat, rat_int, Rat};

    fn m(rows: Vec<Vec<i64>>) -> Matrix<Rat> {
        Matrix::from_rows(
            rows.into_iter()
                .map(|r| r.into_iter().map(rat_int).collect())
                .collect(),
        )
        .unwrap()
    }

    #[test]
    fn nullspace_single_constraint() {
        let basis = m(vec![vec![1, 1]]).nullspace();
        assert_eq!(basis.len(), 1);
        // reduced echelon normalization: free coordinate carries the 1
        assert_eq!(basis[0], vec![rat_int(-1), rat_int(1)]);
    }

    #[test]
    fn nullspace_injective() {
        assert!(m(vec![vec![1, 0, 0], vec![0, 1, 0], vec![0, 0, 1]])
            .nullspace()
            .is_empty());
    }

    #[test]
    fn nullspace_dimension_two() {
        // rank 2 by hand elimination, so the kernel has dimension 4 - 2 = 2
        let a = m(vec![vec![1, 0, 1, 0], vec![0, 1, 0, 1]]);
        let basis = a.nullspace();
        assert_eq!(basis.len(), 2);
        for v in &basis {
            assert!(a.mul_vec(v).iter().all(Zero::is_zero));
        }
    }

    #[test]
    fn nullspace_of_empty_matrix_is_full_space() {
        let a: Matrix<Rat> = Matrix::zeros(0, 3);
        let basis = a.nullspace();
        assert_eq!(basis.len(), 3);
    }

    #[test]
    fn determinant_and_inverse_agree() {
        let a = m(vec![vec![2, 1, 0], vec![1, 3, 1], vec![0, 1, 4]]);
        assert_eq!(a.det(), rat_int(18));
        let inv = a.inverse().unwrap();
        let adj = a.inverse_adjugate().unwrap();
        assert_eq!(inv, adj);
        assert_eq!(&a * &inv, Matrix::identity(3));
    }

    #[test]
    fn congruence_minkowski() {
        let g = Matrix::diagonal(&[rat_int(-1), rat_int(1), rat_int(1), rat_int(1)]);
        let (inertia, _) = congruence_diagonalize(&g).unwrap();
        assert_eq!(
            inertia,
            Inertia {
                positive: 3,
                negative: 1,
                zero: 0
            }
        );
    }

    #[test]
    fn congruence_identity() {
        let g: Matrix<Rat> = Matrix::identity(5);
        let (inertia, _) = congruence_diagonalize(&g).unwrap();
        assert_eq!(inertia.positive, 5);
        assert_eq!(inertia.negative, 0);
        assert_eq!(inertia.zero, 0);
    }

    #[test]
    fn congruence_hyperbolic_plane() {
        // eigenvalues ±1 by hand, so inertia (1, 1, 0)
        let g = m(vec![vec![0, 1], vec![1, 0]]);
        let (inertia, t) = congruence_diagonalize(&g).unwrap();
        assert_eq!(inertia.positive, 1);
        assert_eq!(inertia.negative, 1);
        assert_eq!(inertia.zero, 0);
        let d = &(&t.transpose() * &g) * &t;
        for i in 0..2 {
            for j in 0..2 {
                if i != j {
                    assert!(d.get(i, j).is_zero());
                }
            }
        }
    }

    #[test]
    fn congruence_rejects_nonsymmetric() {
        let g = m(vec![vec![0, 1], vec![2, 0]]);
        assert!(matches!(
            congruence_diagonalize(&g),
            Err(Error::NotSymmetric)
        ));
    }

    #[test]
    fn solve_linear_consistency() {
        let a = m(vec![vec![1, 1], vec![2, 2]]);
        assert_eq!(
            solve_linear(&a, &[rat_int(3), rat_int(6)]),
            Some(vec![rat_int(3), rat_int(0)])
        );
        assert_eq!(solve_linear(&a, &[rat_int(3), rat_int(7)]), None);
    }

    #[test]
    fn row_span_membership_and_equality() {
        let s1 = RowSpan::from_vectors(
            3,
            &[
                vec![rat_int(1), rat_int(0), rat_int(1)],
                vec![rat_int(0), rat_int(1), rat_int(1)],
            ],
        );
        let s2 = RowSpan::from_vectors(
            3,
            &[
                vec![rat_int(1), rat_int(1), rat_int(2)],
                vec![rat_int(1), rat_int(-1), rat_int(0)],
            ],
        );
        assert!(s1.same_span(&s2));
        assert!(s1.contains(&[rat(1, 2), rat(1, 2), rat_int(1)]));
        assert!(!s1.contains(&[rat_int(0), rat_int(0), rat_int(1)]));
    }
}
