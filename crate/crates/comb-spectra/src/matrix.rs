//! Minimal dense real matrix with LU determinant/solve, sized for test-scale
//! problems (dimensions up to a few thousand).

use crate::error::{Error, Result};

#[derive(Debug, Clone, PartialEq)]
pub struct Matrix {
    rows: usize,
    cols: usize,
    data: Vec<f64>,
}

impl Matrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Matrix {
            rows,
            cols,
            data: vec![0.0; rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Matrix::zeros(n, n);
        for i in 0..n {
            m[(i, i)] = 1.0;
        }
        m
    }

    pub fn from_rows(rows: &[Vec<f64>]) -> Self {
        let r = rows.len();
        let c = if r == 0 { 0 } else { rows[0].len() };
        assert!(rows.iter().all(|row| row.len() == c));
        Matrix {
            rows: r,
            cols: c,
            data: rows.concat(),
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

    pub fn max_norm(&self) -> f64 {
        self.data.iter().fold(0.0, |m, x| m.max(x.abs()))
    }

    pub fn mul(&self, other: &Matrix) -> Matrix {
        assert_eq!(self.cols, other.rows);
        let mut out = Matrix::zeros(self.rows, other.cols);
        for i in 0..self.rows {
            for l in 0..self.cols {
                let a = self[(i, l)];
                if a == 0.0 {
                    continue;
                }
                for j in 0..other.cols {
                    out[(i, j)] += a * other[(l, j)];
                }
            }
        }
        out
    }

    pub fn sub(&self, other: &Matrix) -> Matrix {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        let mut out = self.clone();
        for (x, y) in out.data.iter_mut().zip(&other.data) {
            *x -= y;
        }
        out
    }

    pub fn scale(&self, s: f64) -> Matrix {
        let mut out = self.clone();
        for x in out.data.iter_mut() {
            *x *= s;
        }
        out
    }

    pub fn transpose(&self) -> Matrix {
        let mut out = Matrix::zeros(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                out[(j, i)] = self[(i, j)];
            }
        }
        out
    }

    /// `lambda * I - self` for square matrices.
    pub fn shifted_identity_minus(&self, lambda: f64) -> Matrix {
        assert!(self.is_square());
        let mut out = self.scale(-1.0);
        for i in 0..self.rows {
            out[(i, i)] += lambda;
        }
        out
    }

    /// Determinant via LU with partial pivoting. A pivot below
    /// `1e-12 * max_norm` is treated as an exact zero.
    pub fn det_lu(&self) -> f64 {
        assert!(self.is_square());
        let n = self.rows;
        if n == 0 {
            return 1.0;
        }
        let mut a = self.clone();
        let threshold = 1e-12 * self.max_norm();
        let mut det = 1.0;
        for col in 0..n {
            let mut pivot = col;
            for r in col + 1..n {
                if a[(r, col)].abs() > a[(pivot, col)].abs() {
                    pivot = r;
                }
            }
            if a[(pivot, col)].abs() <= threshold {
                return 0.0;
            }
            if pivot != col {
                a.swap_rows(pivot, col);
                det = -det;
            }
            det *= a[(col, col)];
            for r in col + 1..n {
                let f = a[(r, col)] / a[(col, col)];
                if f == 0.0 {
                    continue;
                }
                for c in col..n {
                    a[(r, c)] -= f * a[(col, c)];
                }
            }
        }
        det
    }

    /// Solve `self * X = b` for a square `self` via LU with partial pivoting.
    pub fn solve(&self, b: &Matrix) -> Result<Matrix> {
        assert!(self.is_square());
        assert_eq!(self.rows, b.rows);
        let n = self.rows;
        let mut a = self.clone();
        let mut x = b.clone();
        let threshold = 1e-12 * self.max_norm();
        for col in 0..n {
            let mut pivot = col;
            for r in col + 1..n {
                if a[(r, col)].abs() > a[(pivot, col)].abs() {
                    pivot = r;
                }
            }
            if a[(pivot, col)].abs() <= threshold {
                return Err(Error::Numerical("singular matrix in solve".into()));
            }
            if pivot != col {
                a.swap_rows(pivot, col);
                x.swap_rows(pivot, col);
            }
            for r in col + 1..n {
                let f = a[(r, col)] / a[(col, col)];
                if f == 0.0 {
                    continue;
                }
                for c in col..n {
                    a[(r, c)] -= f * a[(col, c)];
                }
                for c in 0..x.cols {
                    x[(r, c)] -= f * x[(col, c)];
                }
            }
        }
        for col in (0..n).rev() {
            for c in 0..x.cols {
                let mut s = x[(col, c)];
                for l in col + 1..n {
                    s -= a[(col, l)] * x[(l, c)];
                }
                x[(col, c)] = s / a[(col, col)];
            }
        }
        Ok(x)
    }

    fn swap_rows(&mut self, i: usize, j: usize) {
        if i == j {
            return;
        }
        for c in 0..self.cols {
            self.data.swap(i * self.cols + c, j * self.cols + c);
        }
    }
}

impl std::ops::Index<(usize, usize)> for Matrix {
    type Output = f64;
    fn index(&self, (i, j): (usize, usize)) -> &f64 {
        &self.data[i * self.cols + j]
    }
}

impl std::ops::IndexMut<(usize, usize)> for Matrix {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut f64 {
        &mut self.data[i * self.cols + j]
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn det_2x2() {
        let m = Matrix::from_rows(&[vec![1.0, 2.0], vec![3.0, 4.0]]);
        assert!((m.det_lu() - (-2.0)).abs() < 1e-12);
    }

    #[test]
    fn det_singular() {
        let m = Matrix::from_rows(&[vec![1.0, 2.0], vec![2.0, 4.0]]);
        assert_eq!(m.det_lu(), 0.0);
    }

    #[test]
    fn solve_round_trip() {
        let a = Matrix::from_rows(&[
            vec![4.0, 1.0, 0.0],
            vec![1.0, 3.0, 1.0],
            vec![0.0, 1.0, 2.0],
        ]);
        let b = Matrix::from_rows(&[vec![1.0], vec![2.0], vec![3.0]]);
        let x = a.solve(&b).unwrap();
        let r = a.mul(&x).sub(&b);
        assert!(r.max_norm() < 1e-12);
    }

    #[test]
    fn solve_singular_errors() {
        let a = Matrix::from_rows(&[vec![1.0, 1.0], vec![1.0, 1.0]]);
        let b = Matrix::identity(2);
        assert!(a.solve(&b).is_err());
    }
}
