//! Dense exact linear algebra over any [`Scalar`] field: rank, kernel,
//! reduced row echelon form, and linear solves. Matrices here are small
//! (desk-scale complexes), so dense Gaussian elimination is the right
//! tool.

use num_traits::Zero;

use crate::field::Scalar;

#[derive(Clone, PartialEq)]
pub struct Matrix<F> {
    rows: usize,
    cols: usize,
    data: Vec<F>,
}

impl<F: Scalar> std::fmt::Debug for Matrix<F> {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        writeln!(f, "Matrix {}x{} [", self.rows, self.cols)?;
        for r in 0..self.rows {
            let row: Vec<String> = (0..self.cols)
                .map(|c| format!("{}", self.get(r, c)))
                .collect();
            writeln!(f, "  [{}]", row.join(", "))?;
        }
        write!(f, "]")
    }
}

impl<F: Scalar> Matrix<F> {
    pub fn zero(rows: usize, cols: usize) -> Self {
        Matrix {
            rows,
            cols,
            data: vec![F::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zero(n, n);
        for i in 0..n {
            m.set(i, i, F::one());
        }
        m
    }

    pub fn from_rows(rows: Vec<Vec<F>>) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        assert!(rows.iter().all(|row| row.len() == c), "ragged rows");
        Matrix {
            rows: r,
            cols: c,
            data: rows.into_iter().flatten().collect(),
        }
    }

    pub fn from_fn(rows: usize, cols: usize, f: impl Fn(usize, usize) -> F) -> Self {
        let mut data = Vec::with_capacity(rows * cols);
        for r in 0..rows {
            for c in 0..cols {
                data.push(f(r, c));
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

    pub fn get(&self, r: usize, c: usize) -> &F {
        &self.data[r * self.cols + c]
    }

    pub fn set(&mut self, r: usize, c: usize, v: F) {
        self.data[r * self.cols + c] = v;
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(Zero::is_zero)
    }

    pub fn transpose(&self) -> Self {
        Self::from_fn(self.cols, self.rows, |r, c| self.get(c, r).clone())
    }

    pub fn add(&self, other: &Self) -> Self {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        Self::from_fn(self.rows, self.cols, |r, c| {
            self.get(r, c).clone() + other.get(r, c).clone()
        })
    }

    pub fn sub(&self, other: &Self) -> Self {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        Self::from_fn(self.rows, self.cols, |r, c| {
            self.get(r, c).clone() - other.get(r, c).clone()
        })
    }

    pub fn scale(&self, s: &F) -> Self {
        Self::from_fn(self.rows, self.cols, |r, c| {
            self.get(r, c).clone() * s.clone()
        })
    }

    pub fn mul(&self, other: &Self) -> Self {
        assert_eq!(self.cols, other.rows, "dimension mismatch in mul");
        let mut out = Self::zero(self.rows, other.cols);
        for r in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(r, k);
                if a.is_zero() {
                    continue;
                }
                for c in 0..other.cols {
                    let b = other.get(k, c);
                    if b.is_zero() {
                        continue;
                    }
                    let v = out.get(r, c).clone() + a.clone() * b.clone();
                    out.set(r, c, v);
                }
            }
        }
        out
    }

    pub fn apply(&self, v: &[F]) -> Vec<F> {
        assert_eq!(self.cols, v.len());
        (0..self.rows)
            .map(|r| {
                let mut acc = F::zero();
                for (c, x) in v.iter().enumerate() {
                    if !x.is_zero() {
                        acc = acc + self.get(r, c).clone() * x.clone();
                    }
                }
                acc
            })
            .collect()
    }

    pub fn column(&self, c: usize) -> Vec<F> {
        (0..self.rows).map(|r| self.get(r, c).clone()).collect()
    }

    pub fn from_columns(cols: Vec<Vec<F>>) -> Self {
        let c = cols.len();
        let r = cols.first().map_or(0, Vec::len);
        Self::from_fn(r, c, |i, j| cols[j][i].clone())
    }

    /// Like `from_columns`, but keeps the row count when the column
    /// list is empty.
    pub fn from_columns_with_rows(cols: Vec<Vec<F>>, rows: usize) -> Self {
        if cols.is_empty() {
            Self::zero(rows, 0)
        } else {
            debug_assert!(cols.iter().all(|c| c.len() == rows));
            Self::from_columns(cols)
        }
    }

    /// In-place reduction to reduced row echelon form; returns pivot
    /// column indices in order.
    pub fn rref(&mut self) -> Vec<usize> {
        let mut pivots = Vec::new();
        let mut row = 0;
        for col in 0..self.cols {
            if row == self.rows {
                break;
            }
            let Some(p) = (row..self.rows).find(|&r| !self.get(r, col).is_zero()) else {
                continue;
            };
            self.swap_rows(row, p);
            let inv = self
                .get(row, col)
                .inverse()
                .expect("pivot must be invertible");
            for c in col..self.cols {
                let v = self.get(row, c).clone() * inv.clone();
                self.set(row, c, v);
            }
            for r in 0..self.rows {
                if r != row && !self.get(r, col).is_zero() {
                    let factor = self.get(r, col).clone();
                    for c in col..self.cols {
                        let v = self.get(r, c).clone()
                            - factor.clone() * self.get(row, c).clone();
                        self.set(r, c, v);
                    }
                }
            }
            pivots.push(col);
            row += 1;
        }
        pivots
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for c in 0..self.cols {
            self.data.swap(a * self.cols + c, b * self.cols + c);
        }
    }

    pub fn rank(&self) -> usize {
        let mut m = self.clone();
        m.rref().len()
    }

    /// Basis of the right kernel {v : Av = 0}, one vector per free
    /// column, in column order (deterministic).
    pub fn kernel_basis(&self) -> Vec<Vec<F>> {
        let mut m = self.clone();
        let pivots = m.rref();
        let pivot_set: std::collections::HashSet<usize> = pivots.iter().copied().collect();
        let mut basis = Vec::new();
        for free in 0..self.cols {
            if pivot_set.contains(&free) {
                continue;
            }
            let mut v = vec![F::zero(); self.cols];
            v[free] = F::one();
            for (prow, &pcol) in pivots.iter().enumerate() {
                v[pcol] = -m.get(prow, free).clone();
            }
            basis.push(v);
        }
        basis
    }

    /// Basis of the column space: the columns of `self` at the rref
    /// pivot positions.
    pub fn column_space_basis(&self) -> Vec<Vec<F>> {
        let mut m = self.clone();
        let pivots = m.rref();
        pivots.into_iter().map(|c| self.column(c)).collect()
    }

    /// One solution x of Ax = b, if any.
    pub fn solve(&self, b: &[F]) -> Option<Vec<F>> {
        assert_eq!(self.rows, b.len());
        let mut aug = Self::from_fn(self.rows, self.cols + 1, |r, c| {
            if c < self.cols {
                self.get(r, c).clone()
            } else {
                b[r].clone()
            }
        });
        let pivots = aug.rref();
        if pivots.contains(&self.cols) {
            return None; // inconsistent
        }
        let mut x = vec![F::zero(); self.cols];
        for (prow, &pcol) in pivots.iter().enumerate() {
            x[pcol] = aug.get(prow, self.cols).clone();
        }
        Some(x)
    }

    /// Solve AX = B columnwise; `None` if any column is inconsistent.
    pub fn solve_matrix(&self, b: &Matrix<F>) -> Option<Matrix<F>> {
        assert_eq!(self.rows, b.rows);
        let mut cols = Vec::with_capacity(b.cols);
        for c in 0..b.cols {
            cols.push(self.solve(&b.column(c))?);
        }
        Some(Matrix::from_columns_with_rows(cols, self.cols))
    }

    pub fn trace(&self) -> F {
        assert_eq!(self.rows, self.cols);
        let mut acc = F::zero();
        for i in 0..self.rows {
            acc = acc + self.get(i, i).clone();
        }
        acc
    }

    /// Inverse of a square matrix, `None` if singular.
    pub fn inverse(&self) -> Option<Matrix<F>> {
        assert_eq!(self.rows, self.cols);
        let n = self.rows;
        let mut aug = Self::from_fn(n, 2 * n, |r, c| {
            if c < n {
                self.get(r, c).clone()
            } else if c - n == r {
                F::one()
            } else {
                F::zero()
            }
        });
        let pivots = aug.rref();
        if pivots.len() < n || pivots.iter().take(n).enumerate().any(|(i, &p)| p != i) {
            return None;
        }
        Some(Self::from_fn(n, n, |r, c| aug.get(r, n + c).clone()))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::{rat, Gf2, Rat};

    fn m(rows: Vec<Vec<i64>>) -> Matrix<Rat> {
        Matrix::from_rows(
            rows.into_iter()
                .map(|r| r.into_iter().map(|v| rat(v, 1)).collect())
                .collect(),
        )
    }

    #[test]
    fn rank_and_kernel() {
        let a = m(vec![vec![1, -1], vec![-1, 1]]);
        assert_eq!(a.rank(), 1);
        let k = a.kernel_basis();
        assert_eq!(k.len(), 1);
        assert!(a.apply(&k[0]).iter().all(|x| x.is_zero()));
    }

    #[test]
    fn solve_consistent_and_not() {
        let a = m(vec![vec![1, 2], vec![3, 4]]);
        let x = a.solve(&[rat(5, 1), rat(11, 1)]).unwrap();
        assert_eq!(a.apply(&x), vec![rat(5, 1), rat(11, 1)]);
        let sing = m(vec![vec![1, 1], vec![1, 1]]);
        assert!(sing.solve(&[rat(0, 1), rat(1, 1)]).is_none());
    }

    #[test]
    fn inverse_round_trip() {
        let a = m(vec![vec![2, 1], vec![1, 1]]);
        let inv = a.inverse().unwrap();
        assert_eq!(a.mul(&inv), Matrix::identity(2));
        assert!(m(vec![vec![1, 1], vec![2, 2]]).inverse().is_none());
    }

    #[test]
    fn gf2_rank() {
        let a = Matrix::from_rows(vec![
            vec![Gf2(1), Gf2(1), Gf2(0)],
            vec![Gf2(0), Gf2(1), Gf2(1)],
            vec![Gf2(1), Gf2(0), Gf2(1)],
        ]);
        assert_eq!(a.rank(), 2);
        assert_eq!(a.kernel_basis().len(), 1);
    }
}
