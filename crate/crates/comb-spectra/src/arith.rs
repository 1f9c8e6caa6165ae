//! Exact-arithmetic classification of rational values of arccos, and the
//! derived guards: `arccos((k+1)/(2k)) / pi` is irrational for every
//! `k >= 2`, and `a_{n,k}` never equals 1.
//!
//! `arccos(c) / pi` is rational exactly when `c` is one of 0, +/-1/2, +/-1,
//! i.e. when the reduced denominator of `2c` is 1. Otherwise the doubling
//! orbit `g_{j+1} = g_j^2 - 2` started at `g_0 = 2c` has denominators
//! `b_j = b_0^(2^j)` growing without bound, which certifies irrationality.
//! All verdicts are computed in exact integer arithmetic; floating point is
//! used only as corroboration in tests.

use num_bigint::BigInt;
use num_integer::Integer;
use serde::Serialize;

use crate::error::{Error, Result};

/// Verdict on `arccos(p/q) / pi`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "verdict")]
pub enum ArccosVerdict {
    /// `p/q` is one of 0, +/-1/2, +/-1. `cos_numerator/cos_denominator` is
    /// the reduced cosine value.
    RationalMultipleOfPi {
        cos_numerator: i64,
        cos_denominator: i64,
    },
    /// The reduced denominator of `2p/q` is at least 2; under doubling it
    /// squares at every step, so the orbit cannot be periodic.
    Irrational { certificate_denominator: i64 },
}

/// Classify `arccos(p/q)` with exact integer arithmetic. Accepts unreduced
/// input; requires `|p| <= q`, `q >= 1`.
pub fn classify_arccos(p: i64, q: i64) -> Result<ArccosVerdict> {
    if q < 1 {
        return Err(Error::InvalidArgument(format!(
            "denominator must be positive, got {q}"
        )));
    }
    let g = p.abs().gcd(&q);
    let (p, q) = (p / g, q / g);
    if p.abs() > q {
        return Err(Error::InvalidArgument(format!(
            "{p}/{q} lies outside [-1, 1], the domain of arccos"
        )));
    }
    // g_0 = 2p/q in lowest terms
    let g2 = (2 * p).abs().gcd(&q);
    let b0 = q / g2;
    if b0 == 1 {
        Ok(ArccosVerdict::RationalMultipleOfPi {
            cos_numerator: p,
            cos_denominator: q,
        })
    } else {
        Ok(ArccosVerdict::Irrational {
            certificate_denominator: b0,
        })
    }
}

/// The exact doubling orbit `g_j = a_j / b_j`, `g_0 = 2p/q`,
/// `g_{j+1} = g_j^2 - 2`, in lowest terms. The denominators square at every
/// step (`b_j = b_0^(2^j)`), hence the need for big integers.
pub fn cosine_doubling_orbit(p: i64, q: i64, steps: usize) -> Vec<(BigInt, BigInt)> {
    assert!(q >= 1);
    let g = (2 * p).abs().gcd(&q);
    let mut a = BigInt::from(2 * p / g);
    let mut b = BigInt::from(q / g);
    let mut orbit = vec![(a.clone(), b.clone())];
    for _ in 0..steps {
        // a/b reduced implies a^2 - 2b^2 over b^2 is reduced as well
        let next_a = &a * &a - 2 * &b * &b;
        let next_b = &b * &b;
        a = next_a;
        b = next_b;
        orbit.push((a.clone(), b.clone()));
    }
    orbit
}

/// Certifies that `omega_k / pi = arccos((k+1)/(2k)) / pi` is irrational.
pub fn omega_guard(k: usize) -> Result<ArccosVerdict> {
    if k < 2 {
        return Err(Error::InvalidArgument("omega_guard requires k >= 2".into()));
    }
    let verdict = classify_arccos(k as i64 + 1, 2 * k as i64)?;
    match verdict {
        ArccosVerdict::Irrational { .. } => Ok(verdict),
        ArccosVerdict::RationalMultipleOfPi { .. } => Err(Error::InternalConsistency(format!(
            "omega_guard({k}): (k+1)/(2k) classified rational, impossible for k >= 2"
        ))),
    }
}

/// Symbolic certificate that `a_{n,k} != 1`: equality would force
/// `omega_k / pi = (2m+1)/(2n+1)`, contradicting its irrationality.
#[derive(Debug, Clone, Serialize)]
pub struct ANkCertificate {
    pub n: usize,
    pub k: usize,
    pub not_one: bool,
    /// The irrationality verdict the certificate rests on.
    pub omega_verdict: ArccosVerdict,
}

pub fn a_nk_guard(n: usize, k: usize) -> Result<ANkCertificate> {
    if n < 2 || k < 2 {
        return Err(Error::InvalidArgument("a_nk_guard requires n, k >= 2".into()));
    }
    let omega_verdict = omega_guard(k)?;
    Ok(ANkCertificate {
        n,
        k,
        not_one: true,
        omega_verdict,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_bigint::BigInt;
    use proptest::prelude::*;

    #[test]
    fn rational_cases() {
        assert_eq!(
            classify_arccos(1, 2).unwrap(),
            ArccosVerdict::RationalMultipleOfPi {
                cos_numerator: 1,
                cos_denominator: 2
            }
        );
        assert_eq!(
            classify_arccos(0, 1).unwrap(),
            ArccosVerdict::RationalMultipleOfPi {
                cos_numerator: 0,
                cos_denominator: 1
            }
        );
        assert_eq!(
            classify_arccos(1, 1).unwrap(),
            ArccosVerdict::RationalMultipleOfPi {
                cos_numerator: 1,
                cos_denominator: 1
            }
        );
        assert_eq!(
            classify_arccos(-1, 2).unwrap(),
            ArccosVerdict::RationalMultipleOfPi {
                cos_numerator: -1,
                cos_denominator: 2
            }
        );
    }

    #[test]
    fn irrational_with_certificate() {
        assert_eq!(
            classify_arccos(3, 4).unwrap(),
            ArccosVerdict::Irrational {
                certificate_denominator: 2
            }
        );
    }

    #[test]
    fn domain_and_reduction() {
        assert!(classify_arccos(5, 4).is_err());
        assert!(classify_arccos(1, 0).is_err());
        // unreduced input is reduced first
        assert_eq!(
            classify_arccos(2, 4).unwrap(),
            classify_arccos(1, 2).unwrap()
        );
    }

    #[test]
    fn partition_matches_known_rational_set() {
        // over all reduced p/q with q <= 50, the rational verdicts are
        // exactly cos in {0, +/-1/2, +/-1}
        for q in 1i64..=50 {
            for p in -q..=q {
                if p.abs().gcd(&q) != 1 {
                    continue;
                }
                let verdict = classify_arccos(p, q).unwrap();
                let expect_rational = q == 1 || q == 2;
                match verdict {
                    ArccosVerdict::RationalMultipleOfPi { .. } => {
                        assert!(expect_rational, "{p}/{q}")
                    }
                    ArccosVerdict::Irrational {
                        certificate_denominator,
                    } => {
                        assert!(!expect_rational, "{p}/{q}");
                        assert!(certificate_denominator >= 2);
                    }
                }
            }
        }
    }

    #[test]
    fn orbit_denominator_growth_law() {
        for (p, q) in [(3i64, 4i64), (1, 3), (5, 7), (7, 50)] {
            let orbit = cosine_doubling_orbit(p, q, 5);
            let b0 = orbit[0].1.clone();
            for (j, (a, b)) in orbit.iter().enumerate() {
                assert_eq!(*b, b0.pow(1u32 << j), "p={p} q={q} j={j}");
                // still in lowest terms
                let g = a.gcd(b);
                assert_eq!(g, BigInt::from(1), "p={p} q={q} j={j}");
            }
        }
    }

    #[test]
    fn omega_guard_sweep() {
        for k in 2..=1000 {
            match omega_guard(k).unwrap() {
                ArccosVerdict::Irrational {
                    certificate_denominator,
                } => {
                    // (k+1)/k is always reduced, so the certificate is k
                    assert_eq!(certificate_denominator, k as i64);
                }
                other => panic!("omega_guard({k}) returned {other:?}"),
            }
        }
        assert!(omega_guard(1).is_err());
    }

    #[test]
    fn a_nk_guard_table_grid() {
        for n in 2..=20 {
            for k in 2..=6 {
                let cert = a_nk_guard(n, k).unwrap();
                assert!(cert.not_one);
                // floating-point corroboration only
                let a = crate::tail_spectrum::a_nk(n, k);
                assert!((a - 1.0).abs() > 1e-9, "n={n} k={k}");
            }
        }
        let a22 = crate::tail_spectrum::a_nk(2, 2);
        assert!((a22 - 1.0).abs() > 0.2);
    }

    proptest! {
        #[test]
        fn classify_total_on_domain(p in -100i64..=100, q in 1i64..=100) {
            prop_assume!(p.abs() <= q);
            let v = classify_arccos(p, q).unwrap();
            // rational verdicts coincide with 2p/q being an integer
            let g = p.abs().gcd(&q);
            let (rp, rq) = (p / g, q / g);
            let is_rational = matches!(v, ArccosVerdict::RationalMultipleOfPi { .. });
            prop_assert_eq!(is_rational, (2 * rp) % rq == 0);
        }
    }
}
