//! End-to-end tests of the combspec binary: exit codes, output formats,
//! and JSON round-trips.

use std::process::Command;

fn combspec(args: &[&str]) -> std::process::Output {
    Command::new(env!("CARGO_BIN_EXE_combspec"))
        .args(args)
        .output()
        .expect("spawn combspec")
}

fn stdout(args: &[&str]) -> String {
    let out = combspec(args);
    assert!(out.status.success(), "combspec {args:?}: {out:?}");
    String::from_utf8(out.stdout).unwrap()
}

#[test]
fn finite_text_and_json() {
    let text = stdout(&["finite", "--n", "4", "--k", "2"]);
    assert!(text.contains("1 above 2"), "{text}");
    let json = stdout(&["finite", "--n", "2", "--k", "2", "--format", "json"]);
    let v: serde_json::Value = serde_json::from_str(&json).unwrap();
    assert_eq!(v["n"], 2);
    assert_eq!(v["p"], 0);
    let groups = v["groups"].as_array().unwrap();
    assert_eq!(groups.len(), 2);
    assert_eq!(groups[0].as_array().unwrap().len(), 2);
}

#[test]
fn finite_path_case() {
    let json = stdout(&["finite", "--n", "1", "--k", "5", "--format", "json"]);
    let v: serde_json::Value = serde_json::from_str(&json).unwrap();
    let all: Vec<f64> = v["groups"]
        .as_array()
        .unwrap()
        .iter()
        .flat_map(|g| g.as_array().unwrap())
        .map(|x| x.as_f64().unwrap())
        .collect();
    assert_eq!(all.len(), 5);
    // P_5 spectrum: 2 cos(j pi / 6)
    assert!((all[0] - 3f64.sqrt()).abs() < 1e-9);
}

#[test]
fn tail_counts_match_table() {
    for (n, expect) in [("2", 1u64), ("19", 4), ("20", 5)] {
        let json = stdout(&["tail", "--n", n, "--k", "2", "--format", "json"]);
        let v: serde_json::Value = serde_json::from_str(&json).unwrap();
        assert_eq!(v["count"], expect, "n={n}");
        assert_eq!(v["hidden_spectrum_disclaimer"], true);
        assert_eq!(v["multiplicity_budget"][0], 2);
        assert_eq!(v["multiplicity_budget"][1], 4);
    }
}

#[test]
fn table_csv_matches_reference() {
    let csv = stdout(&["table"]);
    let lines: Vec<&str> = csv.trim_end().lines().collect();
    assert_eq!(lines.len(), 6);
    assert!(lines[0].starts_with("k/n,2,3,4"));
    assert_eq!(
        lines[2],
        "3,1,1,1,1,2,2,2,3,3,3,3,4,4,4,4,5,5,5,5"
    );
    let ext = stdout(&["table", "--n-max", "25", "--k-max", "6"]);
    assert_eq!(ext.trim_end().lines().next().unwrap().split(',').count(), 25);
}

#[test]
fn json_round_trips_canonically() {
    for args in [
        vec!["finite", "--n", "5", "--k", "3", "--format", "json"],
        vec!["tail", "--n", "7", "--k", "2", "--format", "json"],
        vec!["arccos", "3", "4", "--format", "json"],
    ] {
        let text = stdout(&args);
        let v: serde_json::Value = serde_json::from_str(&text).unwrap();
        let re = serde_json::to_string_pretty(&v).unwrap();
        assert_eq!(text.trim_end(), re, "{args:?}");
    }
}

#[test]
fn arccos_verdicts_and_domain_error() {
    let rational = stdout(&["arccos", "1", "2"]);
    assert!(rational.contains("rational"), "{rational}");
    let json = stdout(&["arccos", "3", "4", "--format", "json"]);
    let v: serde_json::Value = serde_json::from_str(&json).unwrap();
    assert_eq!(v["verdict"], "Irrational");
    assert_eq!(v["certificate_denominator"], 2);
    let out = combspec(&["arccos", "5", "4"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn invalid_arguments_exit_2() {
    assert_eq!(combspec(&["finite", "--n", "0", "--k", "2"]).status.code(), Some(2));
    assert_eq!(combspec(&["tail", "--n", "2", "--k", "0"]).status.code(), Some(2));
    assert_eq!(combspec(&["bogus"]).status.code(), Some(2));
}

#[test]
fn verify_small_grid_passes() {
    let out = combspec(&["verify", "--n-max", "4", "--k-max", "3", "--l", "120"]);
    assert!(out.status.success(), "{out:?}");
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.contains("PASS"));
    assert!(!text.contains("FAIL"));
}

#[test]
fn verify_injected_flip_fails() {
    let out = combspec(&[
        "verify",
        "--n-max",
        "3",
        "--k-max",
        "2",
        "--l",
        "100",
        "--inject-flip",
        "0,3",
    ]);
    assert_eq!(out.status.code(), Some(3));
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.contains("FAIL"), "{text}");
}
