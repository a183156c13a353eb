//! Small exact linear algebra toolkit.
//!
//! Everything here is generic over the scalar through [`Scalar`], a
//! num-traits bound satisfied by exact rationals ([`crate::Rat`], the alias
//! every isomorphism decision uses) as well as fixed-size rationals and
//! floats. The solver assumes the scalar is a field: division by a nonzero
//! pivot must be exact.

use std::fmt;
use std::ops::{Index, IndexMut};

use num_traits::{Num, Signed};

/// Field-like scalar bound for matrices and solvers.
pub trait Scalar: Clone + Num + Signed + fmt::Debug {}

impl<T> Scalar for T where T: Clone + Num + Signed + fmt::Debug {}

/// Dense row-major matrix.
#[derive(Clone, PartialEq, Eq)]
pub struct Matrix<T> {
    rows: usize,
    cols: usize,
    data: Vec<T>,
}

impl<T: Scalar> Matrix<T> {
    pub fn zero(rows: usize, cols: usize) -> Self {
        Matrix {
            rows,
            cols,
            data: vec![T::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zero(n, n);
        for i in 0..n {
            m[(i, i)] = T::one();
        }
        m
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

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn mul(&self, other: &Matrix<T>) -> Matrix<T> {
        assert_eq!(self.cols, other.rows, "dimension mismatch");
        let mut out = Matrix::<T>::zero(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = &self[(i, k)];
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let prod = a.clone() * other[(k, j)].clone();
                    out[(i, j)] = out[(i, j)].clone() + prod;
                }
            }
        }
        out
    }

    pub fn scale(&self, c: &T) -> Matrix<T> {
        Matrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(|v| v.clone() * c.clone()).collect(),
        }
    }

    pub fn add(&self, other: &Matrix<T>) -> Matrix<T> {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        Matrix {
            rows: self.rows,
            cols: self.cols,
            data: self
                .data
                .iter()
                .zip(&other.data)
                .map(|(a, b)| a.clone() + b.clone())
                .collect(),
        }
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|v| v.is_zero())
    }

    pub fn column(&self, j: usize) -> Vec<T> {
        (0..self.rows).map(|i| self[(i, j)].clone()).collect()
    }

    /// Gaussian elimination determinant. Exact when `T` is a field.
    pub fn determinant(&self) -> T {
        assert!(self.is_square(), "determinant of a non-square matrix");
        let n = self.rows;
        let mut a = self.clone();
        let mut det = T::one();
        for k in 0..n {
            let pivot = match (k..n).find(|&r| !a[(r, k)].is_zero()) {
                Some(p) => p,
                None => return T::zero(),
            };
            if pivot != k {
                for j in 0..n {
                    a.data.swap(pivot * n + j, k * n + j);
                }
                det = -det;
            }
            let pv = a[(k, k)].clone();
            det = det * pv.clone();
            for r in k + 1..n {
                if a[(r, k)].is_zero() {
                    continue;
                }
                let factor = a[(r, k)].clone() / pv.clone();
                for j in k..n {
                    let sub = factor.clone() * a[(k, j)].clone();
                    a[(r, j)] = a[(r, j)].clone() - sub;
                }
            }
        }
        det
    }

    /// Rank via Gaussian elimination.
    pub fn rank(&self) -> usize {
        let mut rref = SparseRref::new();
        for i in 0..self.rows {
            let row: Vec<(usize, T)> = (0..self.cols)
                .filter(|&j| !self[(i, j)].is_zero())
                .map(|j| (j, self[(i, j)].clone()))
                .collect();
            rref.insert(row);
        }
        rref.pivot_count()
    }
}

impl<T> Index<(usize, usize)> for Matrix<T> {
    type Output = T;
    fn index(&self, (i, j): (usize, usize)) -> &T {
        debug_assert!(i < self.rows && j < self.cols);
        &self.data[i * self.cols + j]
    }
}

impl<T> IndexMut<(usize, usize)> for Matrix<T> {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut T {
        debug_assert!(i < self.rows && j < self.cols);
        &mut self.data[i * self.cols + j]
    }
}

impl<T: fmt::Display> fmt::Debug for Matrix<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in 0..self.rows {
            let row: Vec<String> = (0..self.cols)
                .map(|j| self.data[i * self.cols + j].to_string())
                .collect();
            writeln!(f, "[{}]", row.join(", "))?;
        }
        Ok(())
    }
}

/// Incremental reduced row echelon form over sorted sparse rows.
///
/// Rows insert one at a time; each is reduced against the pivots seen so
/// far. Pivot rows are kept normalized (leading coefficient one) and, after
/// [`SparseRref::back_eliminate`], fully reduced against each other, which
/// is what nullspace extraction needs.
pub struct SparseRref<T> {
    /// (pivot column, row entries sorted by column, leading coefficient 1).
    pivots: Vec<(usize, Vec<(usize, T)>)>,
    reduced: bool,
}

fn axpy<T: Scalar>(row: &[(usize, T)], factor: &T, pivot_row: &[(usize, T)]) -> Vec<(usize, T)> {
    // row - factor * pivot_row, both sorted by column.
    let mut out = Vec::with_capacity(row.len() + pivot_row.len());
    let mut a = row.iter().peekable();
    let mut b = pivot_row.iter().peekable();
    loop {
        match (a.peek(), b.peek()) {
            (Some(&&(ca, _)), Some(&&(cb, _))) if ca == cb => {
                let (_, va) = a.next().unwrap();
                let (_, vb) = b.next().unwrap();
                let v = va.clone() - factor.clone() * vb.clone();
                if !v.is_zero() {
                    out.push((ca, v));
                }
            }
            (Some(&&(ca, _)), Some(&&(cb, _))) if ca < cb => {
                out.push(a.next().unwrap().clone());
            }
            (Some(_), Some(_)) | (None, Some(_)) => {
                let (cb, vb) = b.next().unwrap();
                out.push((*cb, -(factor.clone() * vb.clone())));
            }
            (Some(_), None) => {
                out.push(a.next().unwrap().clone());
            }
            (None, None) => break,
        }
    }
    out
}

impl<T: Scalar> SparseRref<T> {
    pub fn new() -> Self {
        SparseRref {
            pivots: Vec::new(),
            reduced: true,
        }
    }

    fn find_pivot(&self, col: usize) -> Option<usize> {
        self.pivots.iter().position(|(c, _)| *c == col)
    }

    /// Reduce `row` against the current pivots and install it as a new pivot
    /// if anything remains. Returns true when a pivot was added.
    pub fn insert(&mut self, mut row: Vec<(usize, T)>) -> bool {
        row.retain(|(_, v)| !v.is_zero());
        loop {
            let Some(&(lead, ref coeff)) = row.first() else {
                return false;
            };
            match self.find_pivot(lead) {
                Some(p) => {
                    let factor = coeff.clone();
                    row = axpy(&row, &factor, &self.pivots[p].1);
                }
                None => {
                    let inv = T::one() / coeff.clone();
                    let normalized: Vec<(usize, T)> = row
                        .iter()
                        .map(|(c, v)| (*c, v.clone() * inv.clone()))
                        .collect();
                    self.pivots.push((lead, normalized));
                    self.reduced = false;
                    return true;
                }
            }
        }
    }

    pub fn pivot_count(&self) -> usize {
        self.pivots.len()
    }

    /// Eliminate every pivot column from every other pivot row.
    pub fn back_eliminate(&mut self) {
        if self.reduced {
            return;
        }
        // Working from the rightmost pivot down, each row only ever gains
        // entries in free columns, so a single pass suffices.
        self.pivots.sort_by_key(|(c, _)| *c);
        for p in (0..self.pivots.len()).rev() {
            let (col, prow) = self.pivots[p].clone();
            for q in 0..p {
                let factor = self.pivots[q]
                    .1
                    .iter()
                    .find(|(c, _)| *c == col)
                    .map(|(_, v)| v.clone());
                if let Some(factor) = factor {
                    self.pivots[q].1 = axpy(&self.pivots[q].1, &factor, &prow);
                }
            }
        }
        self.reduced = true;
    }

    /// Basis of `{x : Ax = 0}` for the row space inserted so far; one vector
    /// per free column, dense, each of size `ncols`.
    pub fn nullspace(&mut self, ncols: usize) -> Vec<Vec<T>> {
        self.back_eliminate();
        let pivot_cols: Vec<usize> = self.pivots.iter().map(|(c, _)| *c).collect();
        let mut is_pivot = vec![false; ncols];
        for &c in &pivot_cols {
            is_pivot[c] = true;
        }
        let mut basis = Vec::new();
        for free in 0..ncols {
            if is_pivot[free] {
                continue;
            }
            let mut v = vec![T::zero(); ncols];
            v[free] = T::one();
            for (pcol, prow) in &self.pivots {
                if let Some((_, coeff)) = prow.iter().find(|(c, _)| *c == free) {
                    v[*pcol] = -coeff.clone();
                }
            }
            basis.push(v);
        }
        basis
    }
}

impl<T: Scalar> Default for SparseRref<T> {
    fn default() -> Self {
        Self::new()
    }
}
