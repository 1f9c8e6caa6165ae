//! Exercises the C ABI through the extern "C" surface: handle lifecycle,
//! out-pointer results, status codes, and string ownership.

use std::ffi::CStr;
use std::ptr;

use comb_spectra_ffi::*;

#[test]
fn finite_report_lifecycle() {
    unsafe {
        let mut report = ptr::null_mut();
        let status = comb_finite_spectrum(4, 2, 1e-12, &mut report);
        assert_eq!(status, CombStatus::CombOk);
        assert!(!report.is_null());

        assert_eq!(comb_finite_report_len(report), 8);
        assert_eq!(comb_finite_report_count_above_two(report), 1);

        let mut top = 0.0f64;
        let status = comb_finite_report_eigenvalue(report, 0, 0, &mut top);
        assert_eq!(status, CombStatus::CombOk);
        assert!(top > 2.0 && top < 2.5);

        let status = comb_finite_report_eigenvalue(report, 9, 0, &mut top);
        assert_eq!(status, CombStatus::CombInvalidArgument);

        let json = comb_finite_report_to_json(report);
        assert!(!json.is_null());
        let text = CStr::from_ptr(json).to_str().unwrap();
        let v: serde_json::Value = serde_json::from_str(text).unwrap();
        assert_eq!(v["n"], 4);
        assert_eq!(v["p"], 1);
        comb_string_free(json);

        comb_finite_report_free(report);
    }
}

#[test]
fn tail_report_lifecycle() {
    unsafe {
        let mut report = ptr::null_mut();
        let status = comb_tail_spectrum(19, 2, 1e-12, &mut report);
        assert_eq!(status, CombStatus::CombOk);
        assert_eq!(comb_tail_report_count(report), 4);

        let mut nu = 0.0f64;
        assert_eq!(
            comb_tail_report_eigenvalue(report, 0, &mut nu),
            CombStatus::CombOk
        );
        assert!(nu > 2.0 && nu < 2.5);
        assert_eq!(
            comb_tail_report_eigenvalue(report, 4, &mut nu),
            CombStatus::CombInvalidArgument
        );

        let json = comb_tail_report_to_json(report);
        let text = CStr::from_ptr(json).to_str().unwrap();
        let v: serde_json::Value = serde_json::from_str(text).unwrap();
        assert_eq!(v["count"], 4);
        comb_string_free(json);

        comb_tail_report_free(report);
    }
}

#[test]
fn count_formula_values_and_errors() {
    unsafe {
        let mut c = 0usize;
        assert_eq!(comb_count_formula(20, 6, &mut c), CombStatus::CombOk);
        assert_eq!(c, 6);
        assert_eq!(
            comb_count_formula(1, 2, &mut c),
            CombStatus::CombInvalidArgument
        );
        assert_eq!(
            comb_count_formula(2, 2, ptr::null_mut()),
            CombStatus::CombNullPointer
        );
    }
}

#[test]
fn classify_arccos_paths() {
    unsafe {
        let mut rational = false;
        let mut cert = 0i64;
        assert_eq!(
            comb_classify_arccos(1, 2, &mut rational, &mut cert),
            CombStatus::CombOk
        );
        assert!(rational);
        assert_eq!(cert, 1);

        assert_eq!(
            comb_classify_arccos(3, 4, &mut rational, &mut cert),
            CombStatus::CombOk
        );
        assert!(!rational);
        assert_eq!(cert, 2);

        assert_eq!(
            comb_classify_arccos(5, 4, &mut rational, &mut cert),
            CombStatus::CombInvalidArgument
        );
        assert_eq!(
            comb_classify_arccos(1, 2, ptr::null_mut(), &mut cert),
            CombStatus::CombNullPointer
        );
    }
}

#[test]
fn null_handles_are_inert() {
    unsafe {
        assert_eq!(comb_finite_report_len(ptr::null()), 0);
        assert_eq!(comb_tail_report_count(ptr::null()), 0);
        assert!(comb_finite_report_to_json(ptr::null()).is_null());
        comb_finite_report_free(ptr::null_mut());
        comb_tail_report_free(ptr::null_mut());
        comb_string_free(ptr::null_mut());
        let mut x = 0.0f64;
        assert_eq!(
            comb_finite_report_eigenvalue(ptr::null(), 0, 0, &mut x),
            CombStatus::CombNullPointer
        );
    }
}

#[test]
fn header_is_generated() {
    let header = concat!(env!("CARGO_MANIFEST_DIR"), "/include/comb_spectra.h");
    let text = std::fs::read_to_string(header).unwrap();
    for symbol in [
        "comb_finite_spectrum",
        "comb_tail_spectrum",
        "comb_count_formula",
        "comb_classify_arccos",
        "comb_string_free",
        "CombStatus",
    ] {
        assert!(text.contains(symbol), "missing {symbol}");
    }
}
