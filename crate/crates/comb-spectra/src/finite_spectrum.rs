//! The complete spectrum of the finite comb graph of backbone order `n` and
//! finger order `k`: characteristic-polynomial evaluation, root isolation on
//! the monotone branches of `v_k`, the count of eigenvalues above 2, and the
//! 5/2 bound machinery.

use serde::Serialize;

use crate::chebyshev::{self, eval_sk, eval_v, eval_vk, zeros_v, VkFunction};
use crate::error::{Error, Result};

/// Default bisection bracket width.
pub const DEFAULT_TOL: f64 = 1e-12;

/// All eigenvalues lie in [-3, 3] (maximal vertex degree 3), so the
/// unbounded outer branches are bracketed at +/-3.
const OUTER_BOUND: f64 = 3.0;

/// Full spectrum of a comb graph, grouped by the branch intervals of `v_k`.
/// Group `m` (1-based) holds the `n` eigenvalues in `L_{m,k}` in decreasing
/// order; group 1 is the rightmost branch.
#[derive(Debug, Clone, Serialize)]
pub struct SpectrumReport {
    pub n: usize,
    pub k: usize,
    pub groups: Vec<Vec<f64>>,
    /// Number of eigenvalues above 2.
    pub p: usize,
    /// Maximal root of `v_k(.) = 2`; `None` for the degenerate path case
    /// k = 1.
    pub lambda1_k: Option<f64>,
}

impl SpectrumReport {
    /// All eigenvalues, ascending.
    pub fn sorted(&self) -> Vec<f64> {
        let mut all: Vec<f64> = self.groups.iter().flatten().copied().collect();
        all.sort_by(|a, b| a.partial_cmp(b).unwrap());
        all
    }

    pub fn max_eigenvalue(&self) -> f64 {
        self.groups[0][0]
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("report serialization")
    }
}

/// Bisection on a bracket with `f(lo) < 0 < f(hi)` or the reverse; stops at
/// bracket width `tol`.
pub(crate) fn bisect(mut f: impl FnMut(f64) -> f64, lo: f64, hi: f64, tol: f64) -> Result<f64> {
    let (mut a, mut b) = (lo, hi);
    let fa = f(a);
    let fb = f(b);
    if fa == 0.0 {
        return Ok(a);
    }
    if fb == 0.0 {
        return Ok(b);
    }
    if fa.signum() == fb.signum() {
        return Err(Error::InternalConsistency(format!(
            "bisection bracket [{a}, {b}] does not change sign"
        )));
    }
    for _ in 0..200 {
        if b - a <= tol {
            break;
        }
        let mid = 0.5 * (a + b);
        let fm = f(mid);
        if fm == 0.0 {
            return Ok(mid);
        }
        if fm.signum() == fa.signum() {
            a = mid;
        } else {
            b = mid;
        }
    }
    Ok(0.5 * (a + b))
}

/// `P(lambda) = V_n(v_k(lambda)) * V_{k-1}(lambda)^n`, the characteristic
/// polynomial of the comb graph. At the removable points `t_{j,k-1}` the
/// regular limit `V_k(t_{j,k-1})^n` is returned.
pub fn char_poly_eval(n: usize, k: usize, lambda: f64) -> f64 {
    assert!(n >= 1 && k >= 1);
    if k == 1 {
        return eval_v(n, lambda);
    }
    if let Some(j) = chebyshev::near_pole(k, lambda) {
        let t = zeros_v(k - 1)[j - 1];
        return eval_v(k, t).powi(n as i32);
    }
    eval_v(n, eval_vk(k, lambda)) * eval_v(k - 1, lambda).powi(n as i32)
}

/// Guard that `omega_k (n+1) / pi` is not suspiciously close to an integer.
/// Irrationality of `omega_k / pi` excludes equality, so a trip indicates a
/// precision problem.
fn floor_with_integer_guard(x: f64, context: &str) -> Result<usize> {
    if (x - x.round()).abs() < 1e-9 {
        return Err(Error::PrecisionGuard(format!(
            "{context}: {x} is within 1e-9 of an integer"
        )));
    }
    Ok(x.floor() as usize)
}

/// `arccos((k+1)/(2k))`, the angle governing eigenvalue counts.
pub fn omega(k: usize) -> f64 {
    ((k as f64 + 1.0) / (2.0 * k as f64)).acos()
}

/// Number of eigenvalues of the comb graph above 2:
/// `floor(omega_k (n+1) / pi)`.
pub fn count_above_two(n: usize, k: usize) -> Result<usize> {
    if n < 2 || k < 2 {
        return Err(Error::InvalidArgument(
            "count_above_two requires n, k >= 2".into(),
        ));
    }
    let x = omega(k) * (n as f64 + 1.0) / std::f64::consts::PI;
    floor_with_integer_guard(x, &format!("count_above_two({n},{k})"))
}

/// Maximal root of `v_k(.) = 2`, in (2, 5/2). Cross-checked against the
/// hyperbolic form `s_k(y) = 2` with `lambda = 2 cosh y`.
pub fn lambda1(k: usize, tol: f64) -> Result<f64> {
    if k < 2 {
        return Err(Error::InvalidArgument("lambda1 requires k >= 2".into()));
    }
    let root = bisect(|lam| eval_vk(k, lam) - 2.0, 2.0, 2.5, tol)?;
    let y = (root / 2.0).acosh();
    let s = eval_sk(k, y)?;
    if (s - 2.0).abs() > 1e-8 {
        return Err(Error::InternalConsistency(format!(
            "lambda1({k}): hyperbolic cross-check s_k(y) = {s} != 2"
        )));
    }
    Ok(root)
}

/// Closed form for the maximal eigenvalue of the comb graph with k = 2:
/// `cos(pi/(n+1)) + sqrt(cos^2(pi/(n+1)) + 1)`.
pub fn max_eigenvalue_k2(n: usize) -> f64 {
    assert!(n >= 2);
    let c = (std::f64::consts::PI / (n as f64 + 1.0)).cos();
    c + (c * c + 1.0).sqrt()
}

/// Complete spectrum via root isolation: for each branch `L_{m,k}` of `v_k`
/// and each zero `t_{j,n}` of `V_n`, the unique solution of
/// `v_k(lambda) = t_{j,n}` on that branch.
pub fn eigenvalues(n: usize, k: usize, tol: f64) -> Result<SpectrumReport> {
    if n == 0 || k == 0 {
        return Err(Error::InvalidArgument("eigenvalues requires n, k >= 1".into()));
    }
    if tol <= 0.0 {
        return Err(Error::InvalidArgument("tol must be positive".into()));
    }
    if k == 1 {
        // degenerate comb: the path of order n
        let group = zeros_v(n);
        let p = group.iter().filter(|&&x| x > 2.0).count();
        return Ok(SpectrumReport {
            n,
            k,
            groups: vec![group],
            p,
            lambda1_k: None,
        });
    }
    let vk = VkFunction::new(k)?;
    let targets = zeros_v(n); // descending
    let mut groups = Vec::with_capacity(k);
    for m in 1..=k {
        let (lo, hi) = vk.branch_interval(m);
        let lo = if lo.is_finite() { lo + 1e-12 } else { -OUTER_BOUND };
        let hi = if hi.is_finite() { hi - 1e-12 } else { OUTER_BOUND };
        let mut group = Vec::with_capacity(n);
        for &t in &targets {
            // v_k is strictly increasing on the branch, so the bracket is
            // guaranteed
            let root = bisect(|lam| eval_vk(k, lam) - t, lo, hi, tol)?;
            group.push(root);
        }
        groups.push(group);
    }
    let actual_p = groups
        .iter()
        .flatten()
        .filter(|&&x| x > 2.0)
        .count();
    if n >= 2 {
        let formula_p = count_above_two(n, k)?;
        if formula_p != actual_p {
            return Err(Error::InternalConsistency(format!(
                "eigenvalues({n},{k}): count formula gives {formula_p} above 2, roots give {actual_p}"
            )));
        }
    }
    Ok(SpectrumReport {
        n,
        k,
        groups,
        p: actual_p,
        lambda1_k: Some(lambda1(k, tol)?),
    })
}
