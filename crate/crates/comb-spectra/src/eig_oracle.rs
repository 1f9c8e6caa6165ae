//! Brute-force spectral oracle, independent of every closed-form route in
//! this crate: a cyclic-Jacobi dense symmetric eigensolver and a
//! Sturm-sequence bisection solver for symmetric tridiagonal matrices.

use crate::error::{Error, Result};
use crate::graphs::AdjacencyMatrix;
use crate::matrix::Matrix;

pub const DEFAULT_ROTATION_TOL: f64 = 1e-10;
pub const DEFAULT_BISECTION_TOL: f64 = 1e-12;

/// Dense real symmetric matrix; symmetry is enforced at construction.
#[derive(Debug, Clone)]
pub struct DenseSymmetric {
    dim: usize,
    data: Vec<f64>,
}

impl DenseSymmetric {
    pub fn new(dim: usize, data: Vec<f64>) -> Result<DenseSymmetric> {
        if data.len() != dim * dim {
            return Err(Error::InvalidArgument("dimension mismatch".into()));
        }
        for i in 0..dim {
            for j in 0..i {
                if data[i * dim + j] != data[j * dim + i] {
                    return Err(Error::InvalidArgument(format!(
                        "matrix not symmetric at ({i},{j})"
                    )));
                }
            }
        }
        Ok(DenseSymmetric { dim, data })
    }

    pub fn from_matrix(m: &Matrix) -> Result<DenseSymmetric> {
        if !m.is_square() {
            return Err(Error::InvalidArgument("matrix not square".into()));
        }
        let dim = m.rows();
        let mut data = vec![0.0; dim * dim];
        for i in 0..dim {
            for j in 0..dim {
                data[i * dim + j] = m[(i, j)];
            }
        }
        DenseSymmetric::new(dim, data)
    }

    pub fn from_adjacency(a: &AdjacencyMatrix) -> DenseSymmetric {
        DenseSymmetric::from_matrix(a.as_matrix()).expect("adjacency matrices are symmetric")
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn entry(&self, i: usize, j: usize) -> f64 {
        self.data[i * self.dim + j]
    }

    fn frobenius(&self) -> f64 {
        self.data.iter().map(|x| x * x).sum::<f64>().sqrt()
    }
}

/// All eigenvalues of a dense symmetric matrix by cyclic Jacobi rotations,
/// sorted ascending. Converges when the off-diagonal Frobenius norm drops
/// below `tol` times the full Frobenius norm.
pub fn eig_dense(m: &DenseSymmetric, tol: f64) -> Result<Vec<f64>> {
    let n = m.dim;
    if n == 0 {
        return Ok(vec![]);
    }
    if n > 4000 {
        return Err(Error::InvalidArgument(
            "eig_dense is a desk-scale oracle (dim <= 4000)".into(),
        ));
    }
    let mut a = m.data.clone();
    let fro = m.frobenius();
    if fro == 0.0 {
        return Ok(vec![0.0; n]);
    }
    let target = tol * fro;
    let idx = |i: usize, j: usize| i * n + j;
    let max_sweeps = 60;
    for _sweep in 0..max_sweeps {
        let off: f64 = {
            let mut s = 0.0;
            for i in 0..n {
                for j in i + 1..n {
                    s += 2.0 * a[idx(i, j)] * a[idx(i, j)];
                }
            }
            s.sqrt()
        };
        if off < target {
            let mut ev: Vec<f64> = (0..n).map(|i| a[idx(i, i)]).collect();
            ev.sort_by(|x, y| x.partial_cmp(y).unwrap());
            return Ok(ev);
        }
        // rotations below this threshold are skipped this sweep
        let skip = off / (n as f64 * n as f64);
        for p in 0..n {
            for q in p + 1..n {
                let apq = a[idx(p, q)];
                if apq.abs() <= skip.min(target / n as f64) {
                    continue;
                }
                let app = a[idx(p, p)];
                let aqq = a[idx(q, q)];
                let theta = (aqq - app) / (2.0 * apq);
                let t = if theta >= 0.0 {
                    1.0 / (theta + (1.0 + theta * theta).sqrt())
                } else {
                    -1.0 / (-theta + (1.0 + theta * theta).sqrt())
                };
                let c = 1.0 / (1.0 + t * t).sqrt();
                let s = t * c;
                for i in 0..n {
                    let aip = a[idx(i, p)];
                    let aiq = a[idx(i, q)];
                    a[idx(i, p)] = c * aip - s * aiq;
                    a[idx(i, q)] = s * aip + c * aiq;
                }
                for j in 0..n {
                    let apj = a[idx(p, j)];
                    let aqj = a[idx(q, j)];
                    a[idx(p, j)] = c * apj - s * aqj;
                    a[idx(q, j)] = s * apj + c * aqj;
                }
            }
        }
    }
    Err(Error::Numerical(format!(
        "Jacobi eigensolver did not converge in {max_sweeps} sweeps (dim {n})"
    )))
}

/// Symmetric tridiagonal matrix with diagonal `diag` and off-diagonal `off`.
#[derive(Debug, Clone)]
pub struct TridiagonalSymmetric {
    diag: Vec<f64>,
    off: Vec<f64>,
}

impl TridiagonalSymmetric {
    pub fn new(diag: Vec<f64>, off: Vec<f64>) -> Result<TridiagonalSymmetric> {
        if diag.is_empty() || off.len() + 1 != diag.len() {
            return Err(Error::InvalidArgument(
                "tridiagonal dimensions inconsistent".into(),
            ));
        }
        Ok(TridiagonalSymmetric { diag, off })
    }

    pub fn dim(&self) -> usize {
        self.diag.len()
    }

    /// The free Jacobi matrix truncated at order `n`: zero diagonal, unit
    /// off-diagonal.
    pub fn free_jacobi(n: usize) -> TridiagonalSymmetric {
        TridiagonalSymmetric {
            diag: vec![0.0; n],
            off: vec![1.0; n.saturating_sub(1)],
        }
    }

    /// Number of eigenvalues strictly below `x` (Sturm sign count via the
    /// shifted LDL^T recurrence).
    pub fn count_below(&self, x: f64) -> usize {
        let tiny = f64::MIN_POSITIVE;
        let mut count = 0;
        let mut d = self.diag[0] - x;
        if d < 0.0 {
            count += 1;
        }
        for i in 1..self.dim() {
            if d == 0.0 {
                d = tiny;
            }
            d = (self.diag[i] - x) - self.off[i - 1] * self.off[i - 1] / d;
            if d < 0.0 {
                count += 1;
            }
        }
        count
    }

    pub fn dense(&self) -> DenseSymmetric {
        let n = self.dim();
        let mut m = Matrix::zeros(n, n);
        for i in 0..n {
            m[(i, i)] = self.diag[i];
        }
        for i in 0..n - 1 {
            m[(i, i + 1)] = self.off[i];
            m[(i + 1, i)] = self.off[i];
        }
        DenseSymmetric::from_matrix(&m).unwrap()
    }
}

/// Eigenvalues of a symmetric tridiagonal matrix inside the open window
/// `(lo, hi)`, by Sturm-count bisection, ascending. `tol` is the bisection
/// bracket width.
pub fn eig_tridiag(t: &TridiagonalSymmetric, window: (f64, f64), tol: f64) -> Vec<f64> {
    let (lo, hi) = window;
    assert!(lo < hi);
    let below_lo = t.count_below(lo);
    let below_hi = t.count_below(hi);
    let mut out = Vec::with_capacity(below_hi - below_lo);
    for target in below_lo..below_hi {
        // smallest x with count_below(x) > target
        let (mut a, mut b) = (lo, hi);
        while b - a > tol {
            let mid = 0.5 * (a + b);
            if t.count_below(mid) > target {
                b = mid;
            } else {
                a = mid;
            }
        }
        out.push(0.5 * (a + b));
    }
    out
}

/// `det(lambda I - M)` by LU; backs the characteristic-polynomial checks.
pub fn det_dense(m: &DenseSymmetric, lambda: f64) -> f64 {
    let n = m.dim;
    let mut mat = Matrix::zeros(n, n);
    for i in 0..n {
        for j in 0..n {
            mat[(i, j)] = if i == j {
                lambda - m.entry(i, j)
            } else {
                -m.entry(i, j)
            };
        }
    }
    mat.det_lu()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::chebyshev::{eval_v, zeros_v};
    use crate::graphs::{adjacency, path};

    #[test]
    fn rejects_asymmetric() {
        assert!(DenseSymmetric::new(2, vec![0.0, 1.0, 0.5, 0.0]).is_err());
    }

    #[test]
    fn path_spectra_match_chebyshev_zeros() {
        for m in [2usize, 3, 7, 20, 50] {
            let a = adjacency(&path(m).unwrap());
            let ev = eig_dense(&DenseSymmetric::from_adjacency(&a), 1e-12).unwrap();
            let mut expect = zeros_v(m);
            expect.reverse(); // ascending
            for (x, e) in ev.iter().zip(&expect) {
                assert!((x - e).abs() < 1e-9, "m={m}: {x} vs {e}");
            }
        }
    }

    #[test]
    fn free_jacobi_spectrum() {
        for n in [3usize, 10, 40] {
            let t = TridiagonalSymmetric::free_jacobi(n);
            let ev = eig_tridiag(&t, (-3.0, 3.0), 1e-12);
            assert_eq!(ev.len(), n);
            let mut expect = zeros_v(n);
            expect.reverse();
            for (x, e) in ev.iter().zip(&expect) {
                assert!((x - e).abs() < 1e-9);
            }
        }
    }

    #[test]
    fn dense_and_tridiag_agree() {
        for n in [5usize, 30, 120, 300] {
            let diag: Vec<f64> = (0..n).map(|i| ((i * 37 % 11) as f64 - 5.0) / 7.0).collect();
            let off: Vec<f64> = (0..n - 1).map(|i| 0.5 + ((i * 13 % 7) as f64) / 8.0).collect();
            let t = TridiagonalSymmetric::new(diag, off).unwrap();
            let sturm = eig_tridiag(&t, (-10.0, 10.0), 1e-12);
            let dense = eig_dense(&t.dense(), 1e-12).unwrap();
            assert_eq!(sturm.len(), dense.len());
            for (x, y) in sturm.iter().zip(&dense) {
                assert!((x - y).abs() < 1e-9, "n={n}: {x} vs {y}");
            }
        }
    }

    #[test]
    fn window_counts_match_full_solve() {
        for case in 0..100u64 {
            let n = 3 + (case % 8) as usize;
            let mut state = case.wrapping_mul(0x9E3779B97F4A7C15).wrapping_add(1);
            let mut next = || {
                state = state
                    .wrapping_mul(6364136223846793005)
                    .wrapping_add(1442695040888963407);
                ((state >> 33) as f64 / (1u64 << 31) as f64) - 1.0
            };
            let diag: Vec<f64> = (0..n).map(|_| 2.0 * next()).collect();
            let off: Vec<f64> = (0..n - 1).map(|_| next().abs() + 0.1).collect();
            let t = TridiagonalSymmetric::new(diag, off).unwrap();
            let full = eig_dense(&t.dense(), 1e-12).unwrap();
            let (alpha, beta) = (-0.7, 1.3);
            let in_window = full.iter().filter(|&&x| x > alpha && x <= beta).count();
            let sturm = t.count_below(beta) - t.count_below(alpha);
            // tolerate eigenvalues landing exactly on endpoints: none do here
            assert_eq!(in_window, sturm, "case={case}");
        }
    }

    #[test]
    fn det_matches_chebyshev_for_paths() {
        for m in 1..=10 {
            let a = DenseSymmetric::from_adjacency(&adjacency(&path(m).unwrap()));
            for &lam in &[2.5, 3.0, -2.7, 0.35, 1.01] {
                let d = det_dense(&a, lam);
                let v = eval_v(m, lam);
                assert!((d - v).abs() <= 1e-9 * v.abs().max(1.0), "m={m} lam={lam}");
            }
        }
    }

    #[test]
    fn det_near_zero_at_eigenvalue() {
        let a = DenseSymmetric::from_adjacency(&adjacency(&path(6).unwrap()));
        let ev = eig_dense(&a, 1e-12).unwrap();
        for lam in ev {
            assert!(det_dense(&a, lam).abs() < 1e-6);
        }
    }
}
