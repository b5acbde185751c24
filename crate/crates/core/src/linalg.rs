//! Dense exact matrices over Q(q,t): products, inverses and nullspaces by
//! Gaussian elimination. Row-vector convention throughout: an operator
//! matrix M acts as v -> v M, so composition "first A then B" is A * B.

use crate::qt::Scalar;
use crate::{Error, Result};

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Matrix {
    pub rows: usize,
    pub cols: usize,
    data: Vec<Scalar>,
}

impl Matrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Matrix {
            rows,
            cols,
            data: vec![Scalar::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Matrix::zeros(n, n);
        for i in 0..n {
            *m.at_mut(i, i) = Scalar::one();
        }
        m
    }

    pub fn from_rows(rows: Vec<Vec<Scalar>>) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, |x| x.len());
        assert!(rows.iter().all(|x| x.len() == c), "ragged matrix rows");
        Matrix {
            rows: r,
            cols: c,
            data: rows.into_iter().flatten().collect(),
        }
    }

    pub fn at(&self, r: usize, c: usize) -> &Scalar {
        &self.data[r * self.cols + c]
    }

    pub fn at_mut(&mut self, r: usize, c: usize) -> &mut Scalar {
        &mut self.data[r * self.cols + c]
    }

    pub fn row(&self, r: usize) -> &[Scalar] {
        &self.data[r * self.cols..(r + 1) * self.cols]
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|x| x.is_zero())
    }

    pub fn transpose(&self) -> Matrix {
        let mut m = Matrix::zeros(self.cols, self.rows);
        for r in 0..self.rows {
            for c in 0..self.cols {
                *m.at_mut(c, r) = self.at(r, c).clone();
            }
        }
        m
    }

    pub fn add(&self, other: &Matrix) -> Matrix {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        let mut m = self.clone();
        for (a, b) in m.data.iter_mut().zip(&other.data) {
            *a = &*a + b;
        }
        m
    }

    pub fn sub(&self, other: &Matrix) -> Matrix {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        let mut m = self.clone();
        for (a, b) in m.data.iter_mut().zip(&other.data) {
            *a = &*a - b;
        }
        m
    }

    pub fn scale(&self, c: &Scalar) -> Matrix {
        let mut m = self.clone();
        for a in m.data.iter_mut() {
            *a = &*a * c;
        }
        m
    }

    pub fn mul(&self, other: &Matrix) -> Matrix {
        assert_eq!(self.cols, other.rows, "matrix dimension mismatch");
        let mut m = Matrix::zeros(self.rows, other.cols);
        for r in 0..self.rows {
            for k in 0..self.cols {
                let a = self.at(r, k);
                if a.is_zero() {
                    continue;
                }
                for c in 0..other.cols {
                    let b = other.at(k, c);
                    if b.is_zero() {
                        continue;
                    }
                    let val = m.at(r, c) + &(a * b);
                    *m.at_mut(r, c) = val;
                }
            }
        }
        m
    }

    /// Gauss-Jordan inverse; Err when singular.
    pub fn inverse(&self) -> Result<Matrix> {
        assert_eq!(self.rows, self.cols);
        let n = self.rows;
        let mut a = self.clone();
        let mut inv = Matrix::identity(n);
        for col in 0..n {
            let pivot = (col..n).find(|&r| !a.at(r, col).is_zero());
            let pivot = match pivot {
                Some(p) => p,
                None => return Err(Error::SingularAii(col)),
            };
            if pivot != col {
                for c in 0..n {
                    a.data.swap(pivot * n + c, col * n + c);
                    inv.data.swap(pivot * n + c, col * n + c);
                }
            }
            let pv = a.at(col, col).inv();
            for c in 0..n {
                *a.at_mut(col, c) = a.at(col, c) * &pv;
                *inv.at_mut(col, c) = inv.at(col, c) * &pv;
            }
            for r in 0..n {
                if r == col || a.at(r, col).is_zero() {
                    continue;
                }
                let factor = a.at(r, col).clone();
                for c in 0..n {
                    let val = a.at(r, c) - &(a.at(col, c) * &factor);
                    *a.at_mut(r, c) = val;
                    let vali = inv.at(r, c) - &(inv.at(col, c) * &factor);
                    *inv.at_mut(r, c) = vali;
                }
            }
        }
        Ok(inv)
    }

    /// Basis of row vectors v with v * self = 0.
    pub fn left_nullspace(&self) -> Vec<Vec<Scalar>> {
        // reduce self^T x^T = 0, i.e. right nullspace of the transpose
        let t = self.transpose();
        t.right_nullspace()
    }

    /// Basis of column vectors x with self * x = 0, returned as plain vecs.
    #[allow(clippy::needless_range_loop)]
    pub fn right_nullspace(&self) -> Vec<Vec<Scalar>> {
        let mut a = self.clone();
        let n = a.cols;
        let mut pivot_of_col: Vec<Option<usize>> = vec![None; n];
        let mut row = 0;
        for col in 0..n {
            let pr = (row..a.rows).find(|&r| !a.at(r, col).is_zero());
            let pr = match pr {
                Some(p) => p,
                None => continue,
            };
            if pr != row {
                for c in 0..n {
                    a.data.swap(pr * n + c, row * n + c);
                }
            }
            let pv = a.at(row, col).inv();
            for c in 0..n {
                *a.at_mut(row, c) = a.at(row, c) * &pv;
            }
            for r in 0..a.rows {
                if r == row || a.at(r, col).is_zero() {
                    continue;
                }
                let factor = a.at(r, col).clone();
                for c in 0..n {
                    let val = a.at(r, c) - &(a.at(row, c) * &factor);
                    *a.at_mut(r, c) = val;
                }
            }
            pivot_of_col[col] = Some(row);
            row += 1;
            if row == a.rows {
                break;
            }
        }
        let free: Vec<usize> = (0..n).filter(|&c| pivot_of_col[c].is_none()).collect();
        let mut basis = Vec::new();
        for &fc in &free {
            let mut v = vec![Scalar::zero(); n];
            v[fc] = Scalar::one();
            for c in 0..n {
                if let Some(pr) = pivot_of_col[c] {
                    v[c] = -&(a.at(pr, fc).clone());
                }
            }
            basis.push(v);
        }
        basis
    }

    pub fn rank(&self) -> usize {
        self.cols - self.right_nullspace().len()
    }
}

/// Solve the row-vector system x * m = rhs for square invertible m.
pub fn solve_left(m: &Matrix, rhs: &[Scalar]) -> Result<Vec<Scalar>> {
    let inv = m.inverse()?;
    let mut out = vec![Scalar::zero(); m.rows];
    for (j, o) in out.iter_mut().enumerate() {
        let mut acc = Scalar::zero();
        for (k, r) in rhs.iter().enumerate() {
            if !r.is_zero() {
                acc = &acc + &(r * inv.at(k, j));
            }
        }
        *o = acc;
    }
    Ok(out)
}
