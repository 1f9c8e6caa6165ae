//! C ABI for the comb-spectra library: opaque report handles, status codes,
//! and JSON rendering. The generated header lives at
//! `include/comb_spectra.h`.
//!
//! Conventions: every function returns a [`CombStatus`]; results come back
//! through out-pointers. Handles are freed with the matching `*_free`
//! function, strings with [`comb_string_free`].

use std::ffi::{c_char, CString};

use comb_spectra::error::Error;
use comb_spectra::{arith, finite_spectrum, tail_spectrum};

/// Status codes mirroring the CLI exit codes.
#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CombStatus {
    CombOk = 0,
    CombInvalidArgument = 2,
    CombInternalConsistency = 3,
    CombPrecisionGuard = 4,
    CombNullPointer = 5,
}

fn status_of(e: &Error) -> CombStatus {
    match e.exit_code() {
        2 => CombStatus::CombInvalidArgument,
        4 => CombStatus::CombPrecisionGuard,
        _ => CombStatus::CombInternalConsistency,
    }
}

/// Opaque handle to a finite comb-graph spectrum report.
pub struct CombFiniteReport(finite_spectrum::SpectrumReport);

/// Opaque handle to a tail-graph discrete-spectrum report.
pub struct CombTailReport(tail_spectrum::TailSpectrumReport);

unsafe fn write_out<T>(out: *mut T, value: T) -> CombStatus {
    if out.is_null() {
        return CombStatus::CombNullPointer;
    }
    unsafe { out.write(value) };
    CombStatus::CombOk
}

fn into_c_string(s: String) -> *mut c_char {
    CString::new(s).map_or(std::ptr::null_mut(), CString::into_raw)
}

/// Compute the full spectrum of the comb graph with backbone order `n` and
/// finger order `k`. On success `*out` owns a new report handle.
///
/// # Safety
/// `out` must be a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn comb_finite_spectrum(
    n: usize,
    k: usize,
    tol: f64,
    out: *mut *mut CombFiniteReport,
) -> CombStatus {
    match finite_spectrum::eigenvalues(n, k, tol) {
        Ok(report) => unsafe {
            write_out(out, Box::into_raw(Box::new(CombFiniteReport(report))))
        },
        Err(e) => status_of(&e),
    }
}

/// Total number of eigenvalues (n*k).
///
/// # Safety
/// `report` must be a live handle from [`comb_finite_spectrum`].
#[no_mangle]
pub unsafe extern "C" fn comb_finite_report_len(report: *const CombFiniteReport) -> usize {
    if report.is_null() {
        return 0;
    }
    let r = unsafe { &(*report).0 };
    r.n * r.k
}

/// Number of eigenvalues above 2.
///
/// # Safety
/// `report` must be a live handle from [`comb_finite_spectrum`].
#[no_mangle]
pub unsafe extern "C" fn comb_finite_report_count_above_two(
    report: *const CombFiniteReport,
) -> usize {
    if report.is_null() {
        return 0;
    }
    unsafe { (*report).0.p }
}

/// Eigenvalue `index` (0-based) of branch `group` (0-based, group 0 is the
/// rightmost branch, eigenvalues decreasing within a group).
///
/// # Safety
/// `report` must be a live handle; `out` must be a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn comb_finite_report_eigenvalue(
    report: *const CombFiniteReport,
    group: usize,
    index: usize,
    out: *mut f64,
) -> CombStatus {
    if report.is_null() {
        return CombStatus::CombNullPointer;
    }
    let r = unsafe { &(*report).0 };
    match r.groups.get(group).and_then(|g| g.get(index)) {
        Some(&lam) => unsafe { write_out(out, lam) },
        None => CombStatus::CombInvalidArgument,
    }
}

/// Render the report as JSON. Free with [`comb_string_free`]. Returns NULL
/// on a null handle.
///
/// # Safety
/// `report` must be a live handle from [`comb_finite_spectrum`].
#[no_mangle]
pub unsafe extern "C" fn comb_finite_report_to_json(
    report: *const CombFiniteReport,
) -> *mut c_char {
    if report.is_null() {
        return std::ptr::null_mut();
    }
    into_c_string(unsafe { (*report).0.to_json() })
}

/// # Safety
/// `report` must come from [`comb_finite_spectrum`] and not be freed twice.
#[no_mangle]
pub unsafe extern "C" fn comb_finite_report_free(report: *mut CombFiniteReport) {
    if !report.is_null() {
        drop(unsafe { Box::from_raw(report) });
    }
}

/// Compute the discrete spectrum of the comb graph with an infinite tail.
///
/// # Safety
/// `out` must be a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn comb_tail_spectrum(
    n: usize,
    k: usize,
    tol: f64,
    out: *mut *mut CombTailReport,
) -> CombStatus {
    match tail_spectrum::discrete_spectrum(n, k, tol) {
        Ok(report) => unsafe { write_out(out, Box::into_raw(Box::new(CombTailReport(report)))) },
        Err(e) => status_of(&e),
    }
}

/// Number of distinct positive discrete eigenvalues.
///
/// # Safety
/// `report` must be a live handle from [`comb_tail_spectrum`].
#[no_mangle]
pub unsafe extern "C" fn comb_tail_report_count(report: *const CombTailReport) -> usize {
    if report.is_null() {
        return 0;
    }
    unsafe { (*report).0.count }
}

/// Positive discrete eigenvalue `index` (0-based, decreasing). The negative
/// spectrum is the mirror image.
///
/// # Safety
/// `report` must be a live handle; `out` must be a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn comb_tail_report_eigenvalue(
    report: *const CombTailReport,
    index: usize,
    out: *mut f64,
) -> CombStatus {
    if report.is_null() {
        return CombStatus::CombNullPointer;
    }
    let r = unsafe { &(*report).0 };
    match r.positive_eigenvalues.get(index) {
        Some(&nu) => unsafe { write_out(out, nu) },
        None => CombStatus::CombInvalidArgument,
    }
}

/// Render the report as JSON. Free with [`comb_string_free`].
///
/// # Safety
/// `report` must be a live handle from [`comb_tail_spectrum`].
#[no_mangle]
pub unsafe extern "C" fn comb_tail_report_to_json(report: *const CombTailReport) -> *mut c_char {
    if report.is_null() {
        return std::ptr::null_mut();
    }
    into_c_string(unsafe { (*report).0.to_json() })
}

/// # Safety
/// `report` must come from [`comb_tail_spectrum`] and not be freed twice.
#[no_mangle]
pub unsafe extern "C" fn comb_tail_report_free(report: *mut CombTailReport) {
    if !report.is_null() {
        drop(unsafe { Box::from_raw(report) });
    }
}

/// Closed-form count of positive discrete eigenvalues of the tail graph.
///
/// # Safety
/// `out` must be a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn comb_count_formula(n: usize, k: usize, out: *mut usize) -> CombStatus {
    match tail_spectrum::count_formula(n, k) {
        Ok(c) => unsafe { write_out(out, c) },
        Err(e) => status_of(&e),
    }
}

/// Classify arccos(p/q): `*out_is_rational` is set to whether it is a
/// rational multiple of pi, and `*out_certificate` to the irrationality
/// certificate denominator (1 for rational inputs).
///
/// # Safety
/// `out_is_rational` and `out_certificate` must be valid pointers.
#[no_mangle]
pub unsafe extern "C" fn comb_classify_arccos(
    p: i64,
    q: i64,
    out_is_rational: *mut bool,
    out_certificate: *mut i64,
) -> CombStatus {
    if out_is_rational.is_null() || out_certificate.is_null() {
        return CombStatus::CombNullPointer;
    }
    match arith::classify_arccos(p, q) {
        Ok(arith::ArccosVerdict::RationalMultipleOfPi { .. }) => unsafe {
            out_is_rational.write(true);
            out_certificate.write(1);
            CombStatus::CombOk
        },
        Ok(arith::ArccosVerdict::Irrational {
            certificate_denominator,
        }) => unsafe {
            out_is_rational.write(false);
            out_certificate.write(certificate_denominator);
            CombStatus::CombOk
        },
        Err(e) => status_of(&e),
    }
}

/// Free a string returned by one of the `*_to_json` functions.
///
/// # Safety
/// `s` must originate from this library and not be freed twice.
#[no_mangle]
pub unsafe extern "C" fn comb_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(unsafe { CString::from_raw(s) });
    }
}
