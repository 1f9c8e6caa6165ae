//! Rendering layer behind the `combspec` binary: per-graph reports, the
//! count table, cross-verification sweeps, and arccos classification.
//!
//! All floating-point output is fixed at 12 significant digits so runs diff
//! cleanly above tolerance noise; JSON is emitted with sorted keys.

use serde::Serialize;
use serde_json::Value;

use crate::arith::{self, ArccosVerdict};
use crate::error::{Error, Result};
use crate::finite_spectrum::{self, SpectrumReport};
use crate::graphs::{adjacency, CombSpec};
use crate::eig_oracle::{eig_dense, DenseSymmetric};
use crate::tail_spectrum::{self, TailSpectrumReport};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum OutputFormat {
    Json,
    Csv,
    Text,
}

/// Round to 12 significant digits.
fn sig12(x: f64) -> f64 {
    if x == 0.0 || !x.is_finite() {
        return x;
    }
    format!("{x:.11e}").parse().unwrap()
}

fn round_floats(v: &mut Value) {
    match v {
        Value::Number(n) => {
            if n.is_f64() {
                let r = sig12(n.as_f64().unwrap());
                *v = serde_json::Number::from_f64(r).map(Value::Number).unwrap();
            }
        }
        Value::Array(items) => items.iter_mut().for_each(round_floats),
        Value::Object(map) => map.values_mut().for_each(round_floats),
        _ => {}
    }
}

/// Canonical JSON: sorted keys (serde_json's default map ordering), floats
/// at 12 significant digits.
pub fn canonical_json<T: Serialize>(value: &T) -> String {
    let mut v = serde_json::to_value(value).expect("serialization");
    round_floats(&mut v);
    serde_json::to_string_pretty(&v).expect("serialization")
}

fn fmt12(x: f64) -> String {
    format!("{}", sig12(x))
}

pub fn cmd_finite(n: usize, k: usize, tol: f64, format: OutputFormat) -> Result<String> {
    let report = finite_spectrum::eigenvalues(n, k, tol)?;
    Ok(match format {
        OutputFormat::Json => canonical_json(&report),
        OutputFormat::Csv => finite_csv(&report),
        OutputFormat::Text => finite_text(&report),
    })
}

fn finite_csv(r: &SpectrumReport) -> String {
    let mut out = String::from("group,index,eigenvalue\n");
    for (m, group) in r.groups.iter().enumerate() {
        for (j, &lam) in group.iter().enumerate() {
            out.push_str(&format!("{},{},{}\n", m + 1, j + 1, fmt12(lam)));
        }
    }
    out
}

fn finite_text(r: &SpectrumReport) -> String {
    let mut out = format!(
        "comb graph n={} k={}: {} eigenvalues, {} above 2\n",
        r.n,
        r.k,
        r.n * r.k,
        r.p
    );
    if let Some(l1) = r.lambda1_k {
        out.push_str(&format!("lambda_1(k) = {}\n", fmt12(l1)));
    }
    for (m, group) in r.groups.iter().enumerate() {
        let vals: Vec<String> = group.iter().map(|&x| fmt12(x)).collect();
        out.push_str(&format!("branch {}: {}\n", m + 1, vals.join(", ")));
    }
    out
}

pub fn cmd_tail(n: usize, k: usize, tol: f64, format: OutputFormat) -> Result<String> {
    let report = tail_spectrum::discrete_spectrum(n, k, tol)?;
    Ok(match format {
        OutputFormat::Json => canonical_json(&report),
        OutputFormat::Csv => tail_csv(&report),
        OutputFormat::Text => tail_text(&report),
    })
}

fn tail_csv(r: &TailSpectrumReport) -> String {
    let mut out = String::from("index,eigenvalue\n");
    for (j, &nu) in r.positive_eigenvalues.iter().enumerate() {
        out.push_str(&format!("{},{}\n", j + 1, fmt12(nu)));
    }
    out
}

fn tail_text(r: &TailSpectrumReport) -> String {
    let vals: Vec<String> = r.positive_eigenvalues.iter().map(|&x| fmt12(x)).collect();
    format!(
        "comb graph with tail n={} k={}\n\
         essential band [-2, 2]; {} positive discrete eigenvalues (mirrored below)\n\
         omega_k = {}, a_nk = {}, heaviside = {}\n\
         eigenvalues: {}\n\
         multiplicity budget: at most 2 each, at most 4 doubles\n\
         note: possible hidden spectrum inside the band is not computed\n",
        r.n,
        r.k,
        r.count,
        fmt12(r.omega_k),
        fmt12(r.a_nk),
        r.heaviside_term,
        vals.join(", ")
    )
}

/// The grid of positive discrete-spectrum counts, k down the rows and n
/// across the columns.
pub fn cmd_table(n_max: usize, k_max: usize, format: OutputFormat) -> Result<String> {
    if n_max < 2 || k_max < 2 {
        return Err(Error::InvalidArgument("table bounds must be >= 2".into()));
    }
    let mut rows: Vec<(usize, Vec<usize>)> = Vec::new();
    for k in 2..=k_max {
        let mut row = Vec::new();
        for n in 2..=n_max {
            row.push(tail_spectrum::count_formula(n, k)?);
        }
        rows.push((k, row));
    }
    Ok(match format {
        OutputFormat::Json => {
            #[derive(Serialize)]
            struct Table {
                n_range: [usize; 2],
                k_range: [usize; 2],
                counts: Vec<Vec<usize>>,
            }
            canonical_json(&Table {
                n_range: [2, n_max],
                k_range: [2, k_max],
                counts: rows.into_iter().map(|(_, r)| r).collect(),
            })
        }
        OutputFormat::Csv | OutputFormat::Text => {
            let mut out = String::from("k/n");
            for n in 2..=n_max {
                out.push_str(&format!(",{n}"));
            }
            out.push('\n');
            for (k, row) in rows {
                out.push_str(&k.to_string());
                for c in row {
                    out.push_str(&format!(",{c}"));
                }
                out.push('\n');
            }
            out
        }
    })
}

pub fn cmd_arccos(p: i64, q: i64, format: OutputFormat) -> Result<String> {
    let verdict = arith::classify_arccos(p, q)?;
    Ok(match format {
        OutputFormat::Json => canonical_json(&verdict),
        _ => match verdict {
            ArccosVerdict::RationalMultipleOfPi {
                cos_numerator,
                cos_denominator,
            } => {
                let angle = (cos_numerator as f64 / cos_denominator as f64).acos();
                format!(
                    "arccos({cos_numerator}/{cos_denominator}) is a rational multiple of pi ({} rad)\n",
                    fmt12(angle)
                )
            }
            ArccosVerdict::Irrational {
                certificate_denominator,
            } => format!(
                "arccos({p}/{q})/pi is irrational (certificate denominator {certificate_denominator})\n"
            ),
        },
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum VerifyChecks {
    All,
    Finite,
    Bounds,
    Triple,
}

#[derive(Debug, Clone)]
pub struct VerifyOptions {
    pub n_max: usize,
    pub k_max: usize,
    pub tail_len: usize,
    pub tol: f64,
    pub checks: VerifyChecks,
    /// Test hook: flip one adjacency entry (0-based pair) in the oracle
    /// matrix to prove the sweep detects mismatches.
    pub inject_flip: Option<(usize, usize)>,
}

impl Default for VerifyOptions {
    fn default() -> Self {
        VerifyOptions {
            n_max: 12,
            k_max: 8,
            tail_len: 300,
            tol: 1e-6,
            checks: VerifyChecks::All,
            inject_flip: None,
        }
    }
}

/// Cross-verification sweep. Returns the report and whether every check
/// passed.
pub fn cmd_verify(opts: &VerifyOptions) -> Result<(String, bool)> {
    if opts.n_max < 2 || opts.k_max < 2 {
        return Err(Error::InvalidArgument("verify bounds must be >= 2".into()));
    }
    if opts.tail_len < 50 {
        return Err(Error::InvalidArgument("tail length must be >= 50".into()));
    }
    let mut lines = Vec::new();
    let mut ok = true;
    let record = |line: String, pass: bool, lines: &mut Vec<String>| {
        lines.push(format!("{} {line}", if pass { "PASS" } else { "FAIL" }));
        pass
    };

    let run_finite = matches!(opts.checks, VerifyChecks::All | VerifyChecks::Finite);
    let run_bounds = matches!(opts.checks, VerifyChecks::All | VerifyChecks::Bounds);
    let run_triple = matches!(opts.checks, VerifyChecks::All | VerifyChecks::Triple);

    for k in 2..=opts.k_max {
        for n in 2..=opts.n_max {
            let report = finite_spectrum::eigenvalues(n, k, 1e-12)?;
            if run_finite {
                let mut adj = adjacency(&CombSpec::new(n, k)?.graph());
                if let Some((i, j)) = opts.inject_flip {
                    if i < adj.dim() && j < adj.dim() && i != j {
                        adj.flip_entry(i, j);
                    }
                }
                let oracle = eig_dense(&DenseSymmetric::from_adjacency(&adj), 1e-12)?;
                let mine = report.sorted();
                let max_err = mine
                    .iter()
                    .zip(&oracle)
                    .map(|(a, b)| (a - b).abs())
                    .fold(0.0f64, f64::max);
                let pass = max_err <= 1e-9;
                ok &= record(
                    format!("finite-oracle n={n} k={k} max_err={max_err:.3e}"),
                    pass,
                    &mut lines,
                );
                let oracle_above = oracle.iter().filter(|&&x| x > 2.0).count();
                ok &= record(
                    format!("count-above-two n={n} k={k}"),
                    finite_spectrum::count_above_two(n, k)? == oracle_above,
                    &mut lines,
                );
            }
            if run_bounds {
                let sorted = report.sorted();
                let max_abs = sorted
                    .iter()
                    .fold(0.0f64, |m, x| m.max(x.abs()));
                let mut pass = max_abs < 2.5;
                if k == 2 {
                    pass &= max_abs <= 1.0 + 2f64.sqrt();
                }
                ok &= record(
                    format!("bounds n={n} k={k} max_abs={max_abs:.6}"),
                    pass,
                    &mut lines,
                );
            }
            if run_triple {
                match tail_spectrum::truncation_check(n, k, opts.tail_len, opts.tol) {
                    Ok(rec) => {
                        ok &= record(
                            format!(
                                "triple n={n} k={k} count={} max_err={:.3e}",
                                rec.predicted.len(),
                                rec.max_abs_err
                            ),
                            true,
                            &mut lines,
                        );
                    }
                    Err(Error::InternalConsistency(msg)) => {
                        ok &= record(format!("triple n={n} k={k}: {msg}"), false, &mut lines);
                    }
                    Err(e) => return Err(e),
                }
            }
        }
    }
    let summary = format!(
        "{} checks, {}\n",
        lines.len(),
        if ok { "all passed" } else { "FAILURES detected" }
    );
    let mut out = lines.join("\n");
    out.push('\n');
    out.push_str(&summary);
    Ok((out, ok))
}
