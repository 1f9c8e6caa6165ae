//! Monic Chebyshev polynomials of the second kind `V_m` (that is,
//! `V_m(t) = U_m(t/2)`), their zeros, the rational function
//! `v_k = V_k / V_{k-1}` with its partial-fraction data, the path Green's
//! function, and the hyperbolic ratio `s_k(y) = sinh((k+1)y)/sinh(ky)`.
//!
//! Everything spectrum-facing goes through ratio recurrences: raw `V_m`
//! values grow exponentially off `[-2, 2]`, while the ratios stay tame.

use crate::error::{Error, Result};

/// Proximity threshold below which an argument counts as sitting on a pole
/// of `v_k` (a zero of `V_{k-1}`).
pub const POLE_TOL: f64 = 1e-9;

/// `V_m(t)` by the three-term recurrence `V_{m+2} = t V_{m+1} - V_m`,
/// `V_0 = 1`, `V_1 = t`. Intended for small `m`; see [`eval_vk`] for the
/// overflow-safe ratio.
pub fn eval_v(m: usize, t: f64) -> f64 {
    let mut prev = 1.0; // V_0
    if m == 0 {
        return prev;
    }
    let mut cur = t; // V_1
    for _ in 1..m {
        (prev, cur) = (cur, t * cur - prev);
    }
    cur
}

/// Derivative `V_m'(t)` by the differentiated recurrence.
pub fn eval_v_deriv(m: usize, t: f64) -> f64 {
    let mut v_prev = 1.0;
    let mut d_prev = 0.0;
    if m == 0 {
        return d_prev;
    }
    let mut v_cur = t;
    let mut d_cur = 1.0;
    for _ in 1..m {
        let v_next = t * v_cur - v_prev;
        let d_next = v_cur + t * d_cur - d_prev;
        (v_prev, v_cur) = (v_cur, v_next);
        (d_prev, d_cur) = (d_cur, d_next);
    }
    d_cur
}

/// Zeros of `V_m`: `2 cos(j pi / (m+1))`, j = 1..m, strictly decreasing.
pub fn zeros_v(m: usize) -> Vec<f64> {
    let denom = (m + 1) as f64;
    (1..=m)
        .map(|j| 2.0 * (j as f64 * std::f64::consts::PI / denom).cos())
        .collect()
}

/// `v_k(lambda) = V_k(lambda) / V_{k-1}(lambda)` by the forward ratio
/// recurrence `r_1 = lambda`, `r_{m+1} = lambda - 1/r_m`, returning `r_k`.
///
/// IEEE semantics make the recurrence self-correcting when an intermediate
/// ratio passes through zero or infinity, so this is total; values near the
/// poles of `v_k` are simply huge.
pub fn eval_vk(k: usize, lambda: f64) -> f64 {
    assert!(k >= 1);
    let mut r = lambda;
    for _ in 1..k {
        r = lambda - 1.0 / r;
    }
    r
}

/// Index (1-based) of the pole of `v_k` within [`POLE_TOL`] of `lambda`,
/// if any.
pub fn near_pole(k: usize, lambda: f64) -> Option<usize> {
    zeros_v(k - 1)
        .iter()
        .position(|&t| (lambda - t).abs() < POLE_TOL)
        .map(|j| j + 1)
}

/// Green's function of the path of order `m`: `G_m = V_{m-1} / V_m`.
/// Errors when `lambda` is within [`POLE_TOL`] of a zero of `V_m`.
pub fn greens_function(m: usize, lambda: f64) -> Result<f64> {
    assert!(m >= 1);
    if zeros_v(m).iter().any(|&t| (lambda - t).abs() < POLE_TOL) {
        return Err(Error::Pole(format!(
            "greens_function({m}, {lambda}): lambda is a zero of V_{m}"
        )));
    }
    Ok(1.0 / eval_vk(m, lambda))
}

/// Partial-fraction residues of `v_k`:
/// `d_{j,k} = -V_k(t_{j,k-1}) / V_{k-1}'(t_{j,k-1})`, all strictly positive.
pub fn residues_vk(k: usize) -> Vec<f64> {
    assert!(k >= 2);
    zeros_v(k - 1)
        .iter()
        .map(|&t| -eval_v(k, t) / eval_v_deriv(k - 1, t))
        .collect()
}

/// `s_k(y) = sinh((k+1)y) / sinh(ky)`, evaluated through decaying
/// exponentials so large `ky` cannot overflow.
pub fn eval_sk(k: usize, y: f64) -> Result<f64> {
    if y <= 0.0 || !y.is_finite() {
        return Err(Error::InvalidArgument(format!(
            "eval_sk requires y > 0, got {y}"
        )));
    }
    let kf = k as f64;
    let num = 1.0 - (-2.0 * (kf + 1.0) * y).exp();
    let den = 1.0 - (-2.0 * kf * y).exp();
    Ok(y.exp() * num / den)
}

/// The rational function `v_k` with its poles, residues and monotone branch
/// intervals.
#[derive(Debug, Clone)]
pub struct VkFunction {
    k: usize,
    poles: Vec<f64>,
    residues: Vec<f64>,
}

impl VkFunction {
    pub fn new(k: usize) -> Result<VkFunction> {
        if k < 2 {
            return Err(Error::InvalidArgument("VkFunction requires k >= 2".into()));
        }
        Ok(VkFunction {
            k,
            poles: zeros_v(k - 1),
            residues: residues_vk(k),
        })
    }

    pub fn k(&self) -> usize {
        self.k
    }

    /// Poles `t_{j,k-1}`, strictly decreasing.
    pub fn poles(&self) -> &[f64] {
        &self.poles
    }

    pub fn residues(&self) -> &[f64] {
        &self.residues
    }

    /// Branch interval `L_{m,k}` (1-based `m` in 1..=k). Outer endpoints are
    /// +/- infinity.
    pub fn branch_interval(&self, m: usize) -> (f64, f64) {
        assert!((1..=self.k).contains(&m));
        let hi = if m == 1 {
            f64::INFINITY
        } else {
            self.poles[m - 2]
        };
        let lo = if m == self.k {
            f64::NEG_INFINITY
        } else {
            self.poles[m - 1]
        };
        (lo, hi)
    }

    pub fn eval(&self, lambda: f64) -> f64 {
        eval_vk(self.k, lambda)
    }

    /// Partial-fraction reconstruction `t + sum_j d_j / (t_j - t)`.
    pub fn reconstruct(&self, t: f64) -> f64 {
        t + self
            .poles
            .iter()
            .zip(&self.residues)
            .map(|(&p, &d)| d / (p - t))
            .sum::<f64>()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn v_small_values() {
        let t = 1.7;
        assert!((eval_v(2, t) - (t * t - 1.0)).abs() < 1e-12);
        assert_eq!(eval_v(0, t), 1.0);
        assert_eq!(eval_v(1, t), t);
        assert_eq!(eval_v(3, 0.0), 0.0);
    }

    #[test]
    fn v_at_two_is_m_plus_one() {
        for m in 0..20 {
            assert!((eval_v(m, 2.0) - (m as f64 + 1.0)).abs() < 1e-9);
        }
    }

    #[test]
    fn zeros_small() {
        let z1 = zeros_v(1);
        assert_eq!(z1.len(), 1);
        assert!(z1[0].abs() < 1e-12);
        let z2 = zeros_v(2);
        assert!((z2[0] - 1.0).abs() < 1e-12 && (z2[1] + 1.0).abs() < 1e-12);
        let z4 = zeros_v(4);
        let expect = [1.618034, 0.618034, -0.618034, -1.618034];
        for (z, e) in z4.iter().zip(expect) {
            assert!((z - e).abs() < 1e-6);
        }
    }

    #[test]
    fn zeros_are_roots_and_interlace() {
        for k in 2..=50 {
            for &z in &zeros_v(k) {
                assert!(eval_v(k, z).abs() < 1e-6 * (k as f64), "V_{k}({z})");
            }
            // strict interlacing of zeros_v(k) and zeros_v(k-1)
            let a = zeros_v(k);
            let b = zeros_v(k - 1);
            for j in 0..b.len() {
                assert!(a[j] > b[j] && b[j] > a[j + 1]);
            }
        }
    }

    #[test]
    fn recurrence_matches_trig_form() {
        for m in 0..=60 {
            for i in 0..200 {
                let x = (i as f64 + 0.5) / 200.0 * std::f64::consts::PI;
                let t = 2.0 * x.cos();
                let trig = ((m as f64 + 1.0) * x).sin() / x.sin();
                let rec = eval_v(m, t);
                let scale = trig.abs().max(1.0);
                assert!((rec - trig).abs() <= 1e-9 * scale, "m={m} t={t}");
            }
        }
    }

    #[test]
    fn vk_closed_forms() {
        let lam = 2.3;
        assert!((eval_vk(2, lam) - (lam - 1.0 / lam)).abs() < 1e-12);
        for k in 1..=30 {
            let expect = (k as f64 + 1.0) / k as f64;
            assert!((eval_vk(k, 2.0) - expect).abs() < 1e-9);
        }
        assert_eq!(eval_vk(3, 0.0), 0.0);
    }

    #[test]
    fn vk_strictly_increasing_on_branches() {
        for k in 2..=8 {
            let f = VkFunction::new(k).unwrap();
            for m in 1..=k {
                let (lo, hi) = f.branch_interval(m);
                let lo = lo.max(-3.0) + 1e-6;
                let hi = hi.min(3.0) - 1e-6;
                let mut prev = f.eval(lo);
                for i in 1..100 {
                    let x = lo + (hi - lo) * i as f64 / 99.0;
                    let cur = f.eval(x);
                    assert!(cur > prev, "k={k} m={m} x={x}");
                    prev = cur;
                }
            }
        }
    }

    #[test]
    fn greens_values_and_identity() {
        assert!((greens_function(1, 2.7).unwrap() - 1.0 / 2.7).abs() < 1e-12);
        assert!((greens_function(2, 3.0).unwrap() - 3.0 / 8.0).abs() < 1e-12);
        for k in 2..=10 {
            for &lam in &[2.5, 3.0, -3.0, 0.37] {
                if near_pole(k, lam).is_some() {
                    continue;
                }
                let g = match greens_function(k - 1, lam) {
                    Ok(g) => g,
                    Err(_) => continue,
                };
                assert!((lam - g - eval_vk(k, lam)).abs() < 1e-9, "k={k} lam={lam}");
            }
        }
        assert!(greens_function(1, 1e-12).is_err());
    }

    #[test]
    fn residues_positive_and_reconstruct() {
        for k in 2..=12 {
            let f = VkFunction::new(k).unwrap();
            for &d in f.residues() {
                assert!(d > 0.0);
            }
            for &t in &[3.0, 2.4, -2.9, 0.123] {
                if near_pole(k, t).is_some() {
                    continue;
                }
                assert!(
                    (f.reconstruct(t) - f.eval(t)).abs() < 1e-10,
                    "k={k} t={t}"
                );
            }
        }
        let r2 = residues_vk(2);
        assert_eq!(r2.len(), 1);
        assert!((r2[0] - 1.0).abs() < 1e-12);
    }

    #[test]
    fn sk_values_and_monotonicity() {
        let got = eval_sk(2, 2f64.ln()).unwrap();
        assert!((got - 2.1).abs() < 1e-12);
        for k in 2..=12 {
            for i in 1..=20 {
                let y = i as f64 / 10.0;
                let s = eval_sk(k, y).unwrap();
                // strict in exact arithmetic; the gap decays like exp(-2ky)
                // so allow ulp-level ties
                assert!(s >= y.exp() * (1.0 - 1e-14), "k={k} y={y}");
                assert!(s <= eval_sk(k - 1, y).unwrap() * (1.0 + 1e-14) || k == 2);
            }
        }
        assert!(eval_sk(3, 0.0).is_err());
        assert!(eval_sk(3, -1.0).is_err());
        // no overflow for large ky
        assert!(eval_sk(500, 2.0).unwrap().is_finite());
    }

    proptest! {
        #[test]
        fn v_parity(m in 0usize..40, t in -3.0f64..3.0) {
            let sign = if m % 2 == 0 { 1.0 } else { -1.0 };
            let lhs = eval_v(m, -t);
            let rhs = sign * eval_v(m, t);
            let scale = rhs.abs().max(1.0);
            prop_assert!((lhs - rhs).abs() <= 1e-12 * scale);
        }

        #[test]
        fn vk_recurrence_consistent_with_raw_ratio(k in 2usize..10, lam in 2.05f64..3.0) {
            // off [-2,2] the raw polynomials are safe at these degrees
            let raw = eval_v(k, lam) / eval_v(k - 1, lam);
            prop_assert!((eval_vk(k, lam) - raw).abs() < 1e-9 * raw.abs().max(1.0));
        }
    }
}
