/* C interface to lcpbound: inverse infinity-norm bounds for B-matrices. */

#ifndef LCPBOUND_H
#define LCPBOUND_H

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

/**
 * Status of an FFI call.
 */
typedef enum LcpbStatus {
  LCPB_STATUS_OK = 0,
  /**
   * A required pointer argument was null.
   */
  LCPB_STATUS_NULL_ARGUMENT = 1,
  /**
   * Dimensions, finiteness, or scalar preconditions violated.
   */
  LCPB_STATUS_INVALID_ARGUMENT = 2,
  /**
   * A matrix was singular where an inverse was required.
   */
  LCPB_STATUS_SINGULAR = 3,
  /**
   * The matrix does not satisfy the B-matrix row conditions.
   */
  LCPB_STATUS_NOT_B_MATRIX = 4,
  /**
   * Not an SDD M-matrix with positive diagonal.
   */
  LCPB_STATUS_NOT_SDD_M = 5,
  /**
   * Degenerate dominance factor (rounding guard).
   */
  LCPB_STATUS_DEGENERATE = 6,
  /**
   * The LCP enumeration accepted no complementary basis.
   */
  LCPB_STATUS_NO_SOLUTION = 7,
  /**
   * Problem dimension exceeds the brute-force cap.
   */
  LCPB_STATUS_DIMENSION_CAP = 8,
} LcpbStatus;

/**
 * Opaque dense square matrix handle.
 */
typedef struct LcpbMatrix LcpbMatrix;

/**
 * Matrix-class membership. `is_p` is meaningful only when `p_computed` is
 * true (the principal-minor check is capped at dimension 15).
 */
typedef struct LcpbClassReport {
  bool is_z;
  bool is_sdd;
  bool is_m;
  bool is_b;
  bool p_computed;
  bool is_p;
} LcpbClassReport;

/**
 * The four analytic upper bounds, tightest last.
 */
typedef struct LcpbBounds {
  double gp;
  double li2016;
  double wcdd;
  double new_bound;
} LcpbBounds;

/**
 * Result of the empirical max estimator.
 */
typedef struct LcpbMaxEstimate {
  /**
   * Largest `||(I-D+DM)^{-1}||_inf` found; a lower bound on the true max.
   */
  double norm_value;
  size_t samples_evaluated;
  size_t singular_encounters;
} LcpbMaxEstimate;

/**
 * Result of sampling the LCP error bound at random points.
 */
typedef struct LcpbChenXiangReport {
  size_t trials;
  size_t passes;
  size_t failures;
  size_t near_zero_residuals;
  /**
   * Worst `||x - x*|| / ||r(x)||` observed; NaN when every trial had a
   * near-zero residual.
   */
  double worst_ratio;
} LcpbChenXiangReport;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Create a matrix handle from `n * n` row-major entries.
 *
 * # Safety
 * `entries` must point to `n * n` readable doubles; `out` must be a valid
 * pointer to a handle slot. On success `*out` owns the new handle and must
 * be released with [`lcpb_matrix_free`].
 */
enum LcpbStatus lcpb_matrix_new(size_t n, const double *entries, struct LcpbMatrix **out);

/**
 * Create a random B-matrix handle, deterministic in `(n, seed)`.
 *
 * # Safety
 * `out` must be a valid pointer to a handle slot; the result must be
 * released with [`lcpb_matrix_free`].
 */
enum LcpbStatus lcpb_matrix_generate_b(size_t n, uint64_t seed, struct LcpbMatrix **out);

/**
 * Release a handle created by this library. Null is a no-op.
 *
 * # Safety
 * `m` must be null or a handle previously returned by this library and not
 * yet freed.
 */
void lcpb_matrix_free(struct LcpbMatrix *m);

/**
 * Dimension of the matrix behind a handle; 0 for null.
 *
 * # Safety
 * `m` must be null or a live handle.
 */
size_t lcpb_matrix_dim(const struct LcpbMatrix *m);

/**
 * Read entry `(i, j)`.
 *
 * # Safety
 * `m` must be a live handle and `out` a valid double slot.
 */
enum LcpbStatus lcpb_matrix_entry(const struct LcpbMatrix *m, size_t i, size_t j, double *out);

/**
 * Classify against the Z, SDD, M, P, B classes.
 *
 * # Safety
 * `m` must be a live handle and `out` a valid report slot.
 */
enum LcpbStatus lcpb_classify(const struct LcpbMatrix *m, struct LcpbClassReport *out);

/**
 * Evaluate all four analytic bounds; fails with `NOT_B_MATRIX` otherwise.
 *
 * # Safety
 * `m` must be a live handle and `out` a valid bounds slot.
 */
enum LcpbStatus lcpb_bounds(const struct LcpbMatrix *m, struct LcpbBounds *out);

/**
 * Upper bound on `||A^{-1}||_inf` for an SDD M-matrix with positive diagonal.
 *
 * # Safety
 * `m` must be a live handle and `out` a valid double slot.
 */
enum LcpbStatus lcpb_wang_inverse_bound(const struct LcpbMatrix *m, double *out);

/**
 * Sampled lower bound on `max_{d in [0,1]^n} ||(I-D+DM)^{-1}||_inf`.
 *
 * # Safety
 * `m` must be a live handle and `out` a valid estimate slot.
 */
enum LcpbStatus lcpb_estimate_max(const struct LcpbMatrix *m,
                                  size_t random_samples,
                                  uint64_t seed,
                                  struct LcpbMaxEstimate *out);

/**
 * Solve LCP(M, q) by complementary-basis enumeration. Writes the solution
 * into `x_out` (length `n`) and, when non-null, the accepted-basis count
 * into `accepted_bases`.
 *
 * # Safety
 * `m` must be a live handle; `q` and `x_out` must point to `n` readable /
 * writable doubles respectively.
 */
enum LcpbStatus lcpb_lcp_solve(const struct LcpbMatrix *m,
                               const double *q,
                               double *x_out,
                               size_t *accepted_bases);

/**
 * Check the error bound `||x - x*|| <= bound * ||r(x)||` at `trials` random
 * points.
 *
 * # Safety
 * `m` must be a live handle; `q` must point to `n` readable doubles; `out`
 * must be a valid report slot.
 */
enum LcpbStatus lcpb_verify_chen_xiang(const struct LcpbMatrix *m,
                                       const double *q,
                                       double bound,
                                       size_t trials,
                                       uint64_t seed,
                                       struct LcpbChenXiangReport *out);

/**
 * Static description of a status code.
 */
const char *lcpb_status_message(enum LcpbStatus status);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* LCPBOUND_H */
