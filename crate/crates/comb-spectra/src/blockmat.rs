//! Block matrices of scalar type (inflations) and Schur-complement
//! determinant identities, used to validate the characteristic-polynomial
//! factorization of the comb graph.

use crate::error::{Error, Result};
use crate::matrix::Matrix;

/// Block matrix whose every block is a scalar multiple of the identity:
/// block (i,j) of the realization is `symbol[i][j] * I_n`.
#[derive(Debug, Clone)]
pub struct ScalarTypeBlockMatrix {
    symbol: Matrix,
    block_dim: usize,
}

impl ScalarTypeBlockMatrix {
    pub fn symbol(&self) -> &Matrix {
        &self.symbol
    }

    pub fn block_dim(&self) -> usize {
        self.block_dim
    }

    /// The mn x mn realization.
    pub fn realization(&self) -> Matrix {
        let m = self.symbol.rows();
        let n = self.block_dim;
        let mut out = Matrix::zeros(m * n, m * n);
        for i in 0..m {
            for j in 0..m {
                let a = self.symbol[(i, j)];
                if a == 0.0 {
                    continue;
                }
                for l in 0..n {
                    out[(i * n + l, j * n + l)] = a;
                }
            }
        }
        out
    }

    /// `det(realization) = det(symbol)^n`.
    pub fn det(&self) -> f64 {
        self.symbol.det_lu().powi(self.block_dim as i32)
    }
}

/// Inflate a square symbol `a` to block dimension `n`.
pub fn inflate(a: &Matrix, n: usize) -> ScalarTypeBlockMatrix {
    assert!(a.is_square());
    assert!(n >= 1);
    ScalarTypeBlockMatrix {
        symbol: a.clone(),
        block_dim: n,
    }
}

/// A square matrix partitioned into four blocks.
#[derive(Debug, Clone)]
pub struct BlockPartition {
    pub a: Matrix,
    pub b: Matrix,
    pub c: Matrix,
    pub d: Matrix,
}

impl BlockPartition {
    pub fn new(a: Matrix, b: Matrix, c: Matrix, d: Matrix) -> BlockPartition {
        assert!(a.is_square() && d.is_square());
        assert_eq!(b.rows(), a.rows());
        assert_eq!(b.cols(), d.cols());
        assert_eq!(c.rows(), d.rows());
        assert_eq!(c.cols(), a.cols());
        BlockPartition { a, b, c, d }
    }

    /// The full (unpartitioned) matrix.
    pub fn assemble(&self) -> Matrix {
        let na = self.a.rows();
        let nd = self.d.rows();
        let n = na + nd;
        let mut out = Matrix::zeros(n, n);
        for i in 0..na {
            for j in 0..na {
                out[(i, j)] = self.a[(i, j)];
            }
            for j in 0..nd {
                out[(i, na + j)] = self.b[(i, j)];
            }
        }
        for i in 0..nd {
            for j in 0..na {
                out[(na + i, j)] = self.c[(i, j)];
            }
            for j in 0..nd {
                out[(na + i, na + j)] = self.d[(i, j)];
            }
        }
        out
    }
}

/// Determinant via the Schur complement of the `d` block:
/// `|A - B D^{-1} C| * |D|`. Falls back to the dual form
/// `|A| * |D - C A^{-1} B|` when `d` is singular; errors when neither pivot
/// block is invertible.
pub fn schur_det(p: &BlockPartition) -> Result<f64> {
    let dd = p.d.det_lu();
    if dd != 0.0 {
        let dinv_c = p.d.solve(&p.c)?;
        let schur = p.a.sub(&p.b.mul(&dinv_c));
        return Ok(schur.det_lu() * dd);
    }
    let da = p.a.det_lu();
    if da != 0.0 {
        let ainv_b = p.a.solve(&p.b)?;
        let schur = p.d.sub(&p.c.mul(&ainv_b));
        return Ok(da * schur.det_lu());
    }
    Err(Error::Numerical(
        "schur_det: both pivot blocks are singular".into(),
    ))
}

/// The partition of `lambda I - A(comb graph)` with `k x k` blocks of order
/// `n`: top-left `lambda - J_n`, first off-diagonal blocks `-I_n`, and the
/// lower-right corner the inflation of `lambda - J_{k-1}`. Requires `k >= 2`.
pub fn comb_resolvent_partition(n: usize, k: usize, lambda: f64) -> BlockPartition {
    assert!(n >= 1 && k >= 2);
    let a = discrete_laplacian(n).shifted_identity_minus(lambda);
    let mut b = Matrix::zeros(n, n * (k - 1));
    let mut c = Matrix::zeros(n * (k - 1), n);
    for i in 0..n {
        b[(i, i)] = -1.0;
        c[(i, i)] = -1.0;
    }
    let symbol = discrete_laplacian(k - 1).shifted_identity_minus(lambda);
    let d = inflate(&symbol, n).realization();
    BlockPartition::new(a, b, c, d)
}

/// The tridiagonal 0/1 path adjacency matrix of order `m`.
pub fn discrete_laplacian(m: usize) -> Matrix {
    let mut j = Matrix::zeros(m, m);
    for i in 0..m.saturating_sub(1) {
        j[(i, i + 1)] = 1.0;
        j[(i + 1, i)] = 1.0;
    }
    j
}
