//! Integer linear algebra for lattice membership: given generator
//! vectors in `Z^d`, decide whether a target vector is an integer
//! combination and produce the coefficients. Used by the energy-zero
//! subgroup computation, where weights live in `Q × Z × Z/2` and are
//! scaled to integers first.

use num_bigint::BigInt;
use num_traits::{Signed, Zero};

/// Dense integer matrix, row-major.
#[derive(Clone, Debug)]
pub struct IntMatrix {
    pub rows: usize,
    pub cols: usize,
    data: Vec<BigInt>,
}

impl IntMatrix {
    pub fn zero(rows: usize, cols: usize) -> Self {
        IntMatrix {
            rows,
            cols,
            data: vec![BigInt::zero(); rows * cols],
        }
    }

    pub fn from_columns(cols: &[Vec<BigInt>], rows: usize) -> Self {
        let mut m = Self::zero(rows, cols.len());
        for (j, col) in cols.iter().enumerate() {
            assert_eq!(col.len(), rows);
            for (i, v) in col.iter().enumerate() {
                m.set(i, j, v.clone());
            }
        }
        m
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zero(n, n);
        for i in 0..n {
            m.set(i, i, BigInt::from(1));
        }
        m
    }

    pub fn get(&self, r: usize, c: usize) -> &BigInt {
        &self.data[r * self.cols + c]
    }

    pub fn set(&mut self, r: usize, c: usize, v: BigInt) {
        self.data[r * self.cols + c] = v;
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for c in 0..self.cols {
            self.data.swap(a * self.cols + c, b * self.cols + c);
        }
    }

    fn swap_cols(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for r in 0..self.rows {
            self.data.swap(r * self.cols + a, r * self.cols + b);
        }
    }

    /// row a -= q * row b
    fn row_sub(&mut self, a: usize, b: usize, q: &BigInt) {
        for c in 0..self.cols {
            let v = self.get(a, c) - q * self.get(b, c);
            self.set(a, c, v);
        }
    }

    /// col a -= q * col b
    fn col_sub(&mut self, a: usize, b: usize, q: &BigInt) {
        for r in 0..self.rows {
            let v = self.get(r, a) - q * self.get(r, b);
            self.set(r, a, v);
        }
    }

    fn negate_row(&mut self, r: usize) {
        for c in 0..self.cols {
            let v = -self.get(r, c).clone();
            self.set(r, c, v);
        }
    }

    pub fn apply(&self, v: &[BigInt]) -> Vec<BigInt> {
        assert_eq!(self.cols, v.len());
        (0..self.rows)
            .map(|r| {
                let mut acc = BigInt::zero();
                for (c, x) in v.iter().enumerate() {
                    acc += self.get(r, c) * x;
                }
                acc
            })
            .collect()
    }
}

/// Smith normal form `U A V = D` with `U`, `V` unimodular and `D`
/// diagonal (divisibility chain not enforced; a diagonal form is enough
/// for solving).
pub struct SmithForm {
    pub d: IntMatrix,
    pub u: IntMatrix,
    pub v: IntMatrix,
}

pub fn smith_form(a: &IntMatrix) -> SmithForm {
    let mut d = a.clone();
    let mut u = IntMatrix::identity(a.rows);
    let mut v = IntMatrix::identity(a.cols);
    let n = a.rows.min(a.cols);
    for k in 0..n {
        loop {
            // move the smallest nonzero entry of the block to (k, k);
            // remainders after division are strictly smaller, so this
            // terminates
            let mut pivot: Option<(usize, usize)> = None;
            for r in k..d.rows {
                for c in k..d.cols {
                    let x = d.get(r, c);
                    if x.is_zero() {
                        continue;
                    }
                    match &pivot {
                        Some((pr, pc)) if d.get(*pr, *pc).abs() <= x.abs() => {}
                        _ => pivot = Some((r, c)),
                    }
                }
            }
            let Some((pr, pc)) = pivot else {
                return SmithForm { d, u, v };
            };
            d.swap_rows(k, pr);
            u.swap_rows(k, pr);
            d.swap_cols(k, pc);
            v.swap_cols(k, pc);

            let mut dirty = false;
            // clear column k below the pivot
            for r in k + 1..d.rows {
                if !d.get(r, k).is_zero() {
                    let q = d.get(r, k) / d.get(k, k);
                    d.row_sub(r, k, &q);
                    u.row_sub(r, k, &q);
                    if !d.get(r, k).is_zero() {
                        dirty = true;
                    }
                }
            }
            // clear row k right of the pivot
            for c in k + 1..d.cols {
                if !d.get(k, c).is_zero() {
                    let q = d.get(k, c) / d.get(k, k);
                    d.col_sub(c, k, &q);
                    v.col_sub(c, k, &q);
                    if !d.get(k, c).is_zero() {
                        dirty = true;
                    }
                }
            }
            if !dirty {
                break;
            }
        }
        if d.get(k, k).is_negative() {
            d.negate_row(k);
            u.negate_row(k);
        }
    }
    SmithForm { d, u, v }
}

/// Solve `A x = b` over the integers. Returns one solution or `None`.
pub fn solve_integer(a: &IntMatrix, b: &[BigInt]) -> Option<Vec<BigInt>> {
    assert_eq!(a.rows, b.len());
    let SmithForm { d, u, v } = smith_form(a);
    let ub = u.apply(b);
    let mut y = vec![BigInt::zero(); a.cols];
    for i in 0..a.rows {
        let dii = if i < a.cols {
            d.get(i, i).clone()
        } else {
            BigInt::zero()
        };
        if dii.is_zero() {
            if !ub[i].is_zero() {
                return None;
            }
        } else {
            let (q, r) = num_integer::Integer::div_rem(&ub[i], &dii);
            if !r.is_zero() {
                return None;
            }
            y[i] = q;
        }
    }
    Some(v.apply(&y))
}

/// Does `b` lie in the lattice spanned by the columns of `a`?
pub fn lattice_contains(a: &IntMatrix, b: &[BigInt]) -> bool {
    solve_integer(a, b).is_some()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn bi(v: &[i64]) -> Vec<BigInt> {
        v.iter().map(|&x| BigInt::from(x)).collect()
    }

    #[test]
    fn solve_simple() {
        // columns (2,0), (0,3): lattice 2Z x 3Z
        let a = IntMatrix::from_columns(&[bi(&[2, 0]), bi(&[0, 3])], 2);
        assert!(lattice_contains(&a, &bi(&[4, -3])));
        assert!(!lattice_contains(&a, &bi(&[1, 0])));
        let x = solve_integer(&a, &bi(&[6, 9])).unwrap();
        assert_eq!(a.apply(&x), bi(&[6, 9]));
    }

    #[test]
    fn solve_nondiagonal() {
        // columns (2,1), (1,2): determinant 3
        let a = IntMatrix::from_columns(&[bi(&[2, 1]), bi(&[1, 2])], 2);
        assert!(lattice_contains(&a, &bi(&[3, 3])));
        assert!(lattice_contains(&a, &bi(&[1, 2])));
        assert!(!lattice_contains(&a, &bi(&[1, 0])));
        let x = solve_integer(&a, &bi(&[3, 0])).unwrap();
        assert_eq!(a.apply(&x), bi(&[3, 0]));
    }

    #[test]
    fn empty_generators() {
        let a = IntMatrix::zero(2, 0);
        assert!(lattice_contains(&a, &bi(&[0, 0])));
        assert!(!lattice_contains(&a, &bi(&[0, 1])));
    }

    #[test]
    fn random_membership_consistency() {
        // solutions returned must reproduce the target exactly
        let a = IntMatrix::from_columns(&[bi(&[6, 4, 2]), bi(&[4, 2, 0]), bi(&[2, 0, 2])], 3);
        for t in -12i64..=12 {
            let target = bi(&[t, t, t.rem_euclid(2)]);
            if let Some(x) = solve_integer(&a, &target) {
                assert_eq!(a.apply(&x), target);
            }
        }
    }
}
