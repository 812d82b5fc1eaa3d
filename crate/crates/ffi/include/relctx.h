#ifndef RELCTX_H
#define RELCTX_H

/* Generated by cbindgen from crates/ffi/src/lib.rs. Do not edit. */

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

typedef enum RelctxStatus {
  RELCTX_STATUS_OK = 0,
  RELCTX_STATUS_INVALID_ARGUMENT = 1,
  RELCTX_STATUS_NUMERICAL = 2,
  RELCTX_STATUS_CONTRACT_VIOLATION = 3,
  RELCTX_STATUS_NULL_POINTER = 4,
  RELCTX_STATUS_PANIC = 5,
} RelctxStatus;

/**
 * Reduced 4x4 spin density.
 */
typedef struct RelctxDensity RelctxDensity;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Message of the last failure on this thread (empty if none).
 */
const char *relctx_last_error_message(void);

/**
 * Library version as a static NUL-terminated string.
 */
const char *relctx_version(void);

/**
 * `E / Mc^2` of the level `(n, kappa)`.
 *
 * # Safety
 * `out` must be valid for writing one `double`.
 */
enum RelctxStatus relctx_sommerfeld_mu(uint32_t n, int32_t kappa, double alpha, double *out);

/**
 * Spin density of the bound state `(n, kappa, m_j = two_mj / 2)` with the
 * default quadrature.
 *
 * # Safety
 * `out` must be valid for writing one pointer.
 */
enum RelctxStatus relctx_density_from_hydrogen(uint32_t n,
                                               int32_t kappa,
                                               int32_t two_mj,
                                               double alpha,
                                               struct RelctxDensity **out);

/**
 * Pure-state density of the spinor with real parts `re[0..4]` and imaginary
 * parts `im[0..4]`, normalised internally. A zero spinor is rejected.
 *
 * # Safety
 * `re` and `im` must point to four `double`s each; `out` must be writable.
 */
enum RelctxStatus relctx_density_from_spinor(const double *re,
                                             const double *im,
                                             struct RelctxDensity **out);

/**
 * Density of the free electron at velocity `beta` with helicity `+-1`.
 *
 * # Safety
 * `out` must be valid for writing one pointer.
 */
enum RelctxStatus relctx_density_from_free(double beta,
                                           int32_t helicity,
                                           struct RelctxDensity **out);

/**
 * The maximally mixed density `I / 4`.
 *
 * # Safety
 * `out` must be valid for writing one pointer.
 */
enum RelctxStatus relctx_density_maximally_mixed(struct RelctxDensity **out);

/**
 * Releases a density. Null is ignored.
 *
 * # Safety
 * `d` must come from this library and not be used afterwards.
 */
void relctx_density_free(struct RelctxDensity *d);

/**
 * Copies the matrix row-major into `re[0..16]` and `im[0..16]`.
 *
 * # Safety
 * `d` must be a live density; `re` and `im` must hold 16 `double`s each.
 */
enum RelctxStatus relctx_density_matrix(const struct RelctxDensity *d, double *re, double *im);

/**
 * CHSH-like value of `d` with the ground-state observables for
 * `m_j = two_mj / 2`.
 *
 * # Safety
 * `d` must be a live density; `out` must be writable.
 */
enum RelctxStatus relctx_ground_chsh(const struct RelctxDensity *d,
                                     int32_t two_mj,
                                     double alpha,
                                     double *out);

/**
 * CHSH-like value of `d` with the `xi` family for state `(n, kappa,
 * two_mj)`. A NaN `xi` selects the optimal angle.
 *
 * # Safety
 * `d` must be a live density; `out` must be writable.
 */
enum RelctxStatus relctx_excited_chsh(const struct RelctxDensity *d,
                                      uint32_t n,
                                      int32_t kappa,
                                      int32_t two_mj,
                                      double alpha,
                                      double xi,
                                      double *out);

/**
 * Optimal `xi` and the closed-form maximum for state `(n, kappa, two_mj)`.
 *
 * # Safety
 * `xi_out` and `value_out` must be writable.
 */
enum RelctxStatus relctx_optimal_xi(uint32_t n,
                                    int32_t kappa,
                                    int32_t two_mj,
                                    double alpha,
                                    double *xi_out,
                                    double *value_out);

/**
 * Peres-Mermin value of `d` (noncontextual bound 4).
 *
 * # Safety
 * `d` must be a live density; `out` must be writable.
 */
enum RelctxStatus relctx_peres_mermin(const struct RelctxDensity *d, double *out);

/**
 * CHSH-like value of the free electron at velocity `beta`.
 *
 * # Safety
 * `out` must be writable.
 */
enum RelctxStatus relctx_free_chsh(double beta, double *out);

/**
 * Runs a scenario described by a JSON run configuration, e.g.
 * `{"command": "sweep", "n_max": 3}`, and returns the JSON report.
 *
 * # Safety
 * `config` must be a NUL-terminated string; `out` must be writable. The
 * returned string is released with [`relctx_string_free`].
 */
enum RelctxStatus relctx_execute_json(const char *config, char **out);

/**
 * Releases a string returned by this library. Null is ignored.
 *
 * # Safety
 * `s` must come from this library and not be used afterwards.
 */
void relctx_string_free(char *s);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* RELCTX_H */
