#ifndef COMB_SPECTRA_H
#define COMB_SPECTRA_H

/* Generated by cbindgen; do not edit by hand. */

#include <stdarg.h>
#include <stdbool.h>
#include <stdint.h>
#include <stdlib.h>

/**
 * Status codes mirroring the CLI exit codes.
 */
typedef enum CombStatus {
  CombOk = 0,
  CombInvalidArgument = 2,
  CombInternalConsistency = 3,
  CombPrecisionGuard = 4,
  CombNullPointer = 5,
} CombStatus;

/**
 * Opaque handle to a finite comb-graph spectrum report.
 */
typedef struct CombFiniteReport CombFiniteReport;

/**
 * Opaque handle to a tail-graph discrete-spectrum report.
 */
typedef struct CombTailReport CombTailReport;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Compute the full spectrum of the comb graph with backbone order `n` and
 * finger order `k`. On success `*out` owns a new report handle.
 *
 * # Safety
 * `out` must be a valid pointer.
 */
enum CombStatus comb_finite_spectrum(uintptr_t n,
                                     uintptr_t k,
                                     double tol,
                                     struct CombFiniteReport **out);

/**
 * Total number of eigenvalues (n*k).
 *
 * # Safety
 * `report` must be a live handle from [`comb_finite_spectrum`].
 */
uintptr_t comb_finite_report_len(const struct CombFiniteReport *report);

/**
 * Number of eigenvalues above 2.
 *
 * # Safety
 * `report` must be a live handle from [`comb_finite_spectrum`].
 */
uintptr_t comb_finite_report_count_above_two(const struct CombFiniteReport *report);

/**
 * Eigenvalue `index` (0-based) of branch `group` (0-based, group 0 is the
 * rightmost branch, eigenvalues decreasing within a group).
 *
 * # Safety
 * `report` must be a live handle; `out` must be a valid pointer.
 */
enum CombStatus comb_finite_report_eigenvalue(const struct CombFiniteReport *report,
                                              uintptr_t group,
                                              uintptr_t index,
                                              double *out);

/**
 * Render the report as JSON. Free with [`comb_string_free`]. Returns NULL
 * on a null handle.
 *
 * # Safety
 * `report` must be a live handle from [`comb_finite_spectrum`].
 */
char *comb_finite_report_to_json(const struct CombFiniteReport *report);

/**
 * # Safety
 * `report` must come from [`comb_finite_spectrum`] and not be freed twice.
 */
void comb_finite_report_free(struct CombFiniteReport *report);

/**
 * Compute the discrete spectrum of the comb graph with an infinite tail.
 *
 * # Safety
 * `out` must be a valid pointer.
 */
enum CombStatus comb_tail_spectrum(uintptr_t n,
                                   uintptr_t k,
                                   double tol,
                                   struct CombTailReport **out);

/**
 * Number of distinct positive discrete eigenvalues.
 *
 * # Safety
 * `report` must be a live handle from [`comb_tail_spectrum`].
 */
uintptr_t comb_tail_report_count(const struct CombTailReport *report);

/**
 * Positive discrete eigenvalue `index` (0-based, decreasing). The negative
 * spectrum is the mirror image.
 *
 * # Safety
 * `report` must be a live handle; `out` must be a valid pointer.
 */
enum CombStatus comb_tail_report_eigenvalue(const struct CombTailReport *report,
                                            uintptr_t index,
                                            double *out);

/**
 * Render the report as JSON. Free with [`comb_string_free`].
 *
 * # Safety
 * `report` must be a live handle from [`comb_tail_spectrum`].
 */
char *comb_tail_report_to_json(const struct CombTailReport *report);

/**
 * # Safety
 * `report` must come from [`comb_tail_spectrum`] and not be freed twice.
 */
void comb_tail_report_free(struct CombTailReport *report);

/**
 * Closed-form count of positive discrete eigenvalues of the tail graph.
 *
 * # Safety
 * `out` must be a valid pointer.
 */
enum CombStatus comb_count_formula(uintptr_t n, uintptr_t k, uintptr_t *out);

/**
 * Classify arccos(p/q): `*out_is_rational` is set to whether it is a
 * rational multiple of pi, and `*out_certificate` to the irrationality
 * certificate denominator (1 for rational inputs).
 *
 * # Safety
 * `out_is_rational` and `out_certificate` must be valid pointers.
 */
enum CombStatus comb_classify_arccos(int64_t p,
                                     int64_t q,
                                     bool *out_is_rational,
                                     int64_t *out_certificate);

/**
 * Free a string returned by one of the `*_to_json` functions.
 *
 * # Safety
 * `s` must originate from this library and not be freed twice.
 */
void comb_string_free(char *s);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* COMB_SPECTRA_H */
