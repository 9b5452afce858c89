/* C interface for the randtoeplitz shared library.
 *
 * Conventions:
 *   - Complex vectors and matrices cross the boundary as interleaved double
 *     arrays [re0, im0, re1, im1, ...]; matrices are row-major.
 *   - Every function returns an rtz_status; outputs go through pointers.
 *     On a non-RTZ_OK return, rtz_last_error() describes the failure
 *     (thread-local, valid until the next failing call on that thread).
 *   - Objects created by *_create / rtz_model_realize / rtz_pcg_solve /
 *     rtz_preconditioned_spectrum are owned by the caller and released with
 *     the matching *_free (NULL-safe).
 */
#ifndef RANDTOEPLITZ_H
#define RANDTOEPLITZ_H

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#define RTZ_API __declspec(dllexport)
#else
#define RTZ_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum rtz_status {
  RTZ_OK = 0,
  RTZ_EINVAL = 1,                /* bad argument / contract violation */
  RTZ_ENOT_HERMITIAN = 2,        /* required Hermitian structure missing */
  RTZ_ENOT_POSITIVE_DEFINITE = 3,
  RTZ_ESINGULAR = 4,             /* singular or near-singular operator */
  RTZ_ERESOURCE = 5,             /* dense cap or similar limit exceeded */
  RTZ_EDOMAIN = 6,               /* mathematical domain violation */
  RTZ_ENOMEM = 7,
  RTZ_EINTERNAL = 8
} rtz_status;

typedef struct rtz_model rtz_model;
typedef struct rtz_coeffs rtz_coeffs;
typedef struct rtz_toeplitz rtz_toeplitz;
typedef struct rtz_circulant rtz_circulant;
typedef struct rtz_solve_report rtz_solve_report;
typedef struct rtz_spectral_report rtz_spectral_report;

RTZ_API const char* rtz_version(void);
RTZ_API const char* rtz_last_error(void);

/* ---- random generating-function model ---- */

/* a_0 = 2, a_k = (1+i)/(1+k)^decay, phases N(0,1) keyed on (seed, trial, k);
 * zero_phases != 0 pins every phase to 0. decay must exceed 1. */
RTZ_API rtz_status rtz_model_create(uint64_t seed, size_t bandwidth,
                                    double decay, int zero_phases,
                                    rtz_model** out);
RTZ_API void rtz_model_free(rtz_model* m);
RTZ_API rtz_status rtz_model_realize(const rtz_model* m, uint64_t trial,
                                     rtz_coeffs** out);

RTZ_API rtz_status rtz_gaussian_phase(uint64_t seed, uint64_t trial,
                                      uint64_t k, double* out);
/* Upper bound on the magnitude tail sum_{k>K} |a_k| for decay p > 1. */
RTZ_API rtz_status rtz_wiener_tail(size_t K, double p, double* out);

/* ---- Hermitian coefficient sequences ---- */

/* half holds c_0..c_K interleaved (count = K+1 entries, 2*count doubles);
 * Im(c_0) must be 0. */
RTZ_API rtz_status rtz_coeffs_create(const double* half, size_t count,
                                     rtz_coeffs** out);
RTZ_API void rtz_coeffs_free(rtz_coeffs* c);
RTZ_API rtz_status rtz_coeffs_bandwidth(const rtz_coeffs* c, size_t* out);
/* c_k for any integer k (conjugated below zero, zero outside the band). */
RTZ_API rtz_status rtz_coeffs_get(const rtz_coeffs* c, int64_t k, double* re,
                                  double* im);
RTZ_API rtz_status rtz_coeffs_extended(const rtz_coeffs* c, size_t bandwidth,
                                       rtz_coeffs** out);
/* f(theta) = c_0 + 2 Re sum_{k>=1} c_k e^{ik theta}. */
RTZ_API rtz_status rtz_coeffs_eval(const rtz_coeffs* c, double theta,
                                   double* out);
/* CSV rows `k,re,im`, 17 significant digits, LF line endings. */
RTZ_API rtz_status rtz_coeffs_write_csv(const rtz_coeffs* c, const char* path);

/* ---- Toeplitz systems ---- */

/* (T)_{jk} = c_{j-k}, dimension n; needs bandwidth(c) >= n-1. */
RTZ_API rtz_status rtz_toeplitz_create(const rtz_coeffs* c, size_t n,
                                       rtz_toeplitz** out);
RTZ_API void rtz_toeplitz_free(rtz_toeplitz* t);
RTZ_API rtz_status rtz_toeplitz_dim(const rtz_toeplitz* t, size_t* out);
/* y = T x; x and y hold 2n doubles. */
RTZ_API rtz_status rtz_toeplitz_matvec(const rtz_toeplitz* t, const double* x,
                                       double* y);
/* Row-major interleaved n x n matrix (2*n*n doubles); n capped at 1024. */
RTZ_API rtz_status rtz_toeplitz_dense(const rtz_toeplitz* t, double* out);
RTZ_API rtz_status rtz_toeplitz_is_pd(const rtz_toeplitz* t, int* pd,
                                      double* lambda_min);

/* ---- circulants and the Strang preconditioner ---- */

enum { RTZ_EVEN_RULE_ZERO = 0, RTZ_EVEN_RULE_AVERAGE = 1 };

RTZ_API rtz_status rtz_strang_create(const rtz_coeffs* c, size_t n,
                                     int even_rule, rtz_circulant** out);
/* first_column holds 2n doubles. */
RTZ_API rtz_status rtz_circulant_create(const double* first_column, size_t n,
                                        rtz_circulant** out);
RTZ_API void rtz_circulant_free(rtz_circulant* s);
RTZ_API rtz_status rtz_circulant_dim(const rtz_circulant* s, size_t* out);
RTZ_API rtz_status rtz_circulant_first_column(const rtz_circulant* s,
                                              double* out);
/* n real eigenvalues sorted ascending; fails if not Hermitian. */
RTZ_API rtz_status rtz_circulant_eigenvalues(const rtz_circulant* s,
                                             double* out);
RTZ_API rtz_status rtz_circulant_apply(const rtz_circulant* s, const double* x,
                                       double* y);
RTZ_API rtz_status rtz_circulant_solve(const rtz_circulant* s, const double* b,
                                       double* z);
RTZ_API rtz_status rtz_circulant_inv_sqrt_apply(const rtz_circulant* s,
                                                const double* x, double* y);

/* ---- conjugate gradients ---- */

enum { RTZ_RHS_ONES = 0, RTZ_RHS_SEEDED_RANDOM = 1 };
enum { RTZ_INDEFINITE_ABORT = 0, RTZ_INDEFINITE_CONTINUE = 1 };

/* out holds 2n doubles (imaginary parts zero for both kinds). */
RTZ_API rtz_status rtz_make_rhs(size_t n, int kind, uint64_t seed, double* out);

/* PCG on T x = b with circulant preconditioner s (NULL for plain CG).
 * b holds 2n doubles; tol on ||r_j||/||r_0||; max_iter 0 means 4n. */
RTZ_API rtz_status rtz_pcg_solve(const rtz_toeplitz* t, const rtz_circulant* s,
                                 const double* b, double tol, size_t max_iter,
                                 int indefinite_policy,
                                 rtz_solve_report** out);
RTZ_API void rtz_solve_report_free(rtz_solve_report* r);
RTZ_API rtz_status rtz_solve_report_iterations(const rtz_solve_report* r,
                                               size_t* out);
RTZ_API rtz_status rtz_solve_report_converged(const rtz_solve_report* r,
                                              int* out);
/* Number of recorded residual ratios (iterations + 1; ratio 0 is 1). */
RTZ_API rtz_status rtz_solve_report_residual_count(const rtz_solve_report* r,
                                                   size_t* out);
RTZ_API rtz_status rtz_solve_report_residuals(const rtz_solve_report* r,
                                              double* out);
RTZ_API rtz_status rtz_solve_report_solution(const rtz_solve_report* r,
                                             double* out);
RTZ_API rtz_status rtz_solve_report_true_residual(const rtz_solve_report* r,
                                                  double* out);
RTZ_API rtz_status rtz_solve_report_wall_time(const rtz_solve_report* r,
                                              double* out);
RTZ_API rtz_status rtz_solve_report_negative_curvature(
    const rtz_solve_report* r, size_t* out);

/* ---- spectral diagnostics ---- */

/* a: row-major interleaved n x n Hermitian matrix; out: n ascending values. */
RTZ_API rtz_status rtz_dense_hermitian_eigenvalues(const double* a, size_t n,
                                                   double* out);

RTZ_API rtz_status rtz_preconditioned_spectrum(const rtz_toeplitz* t,
                                               const rtz_circulant* s,
                                               double epsilon,
                                               rtz_spectral_report** out);
RTZ_API void rtz_spectral_report_free(rtz_spectral_report* r);
RTZ_API rtz_status rtz_spectral_report_size(const rtz_spectral_report* r,
                                            size_t* out);
RTZ_API rtz_status rtz_spectral_report_eigenvalues(const rtz_spectral_report* r,
                                                   double* out);
RTZ_API rtz_status rtz_spectral_report_outliers(const rtz_spectral_report* r,
                                                size_t* out);
RTZ_API rtz_status rtz_spectral_report_geometric_mean(
    const rtz_spectral_report* r, double* out);
RTZ_API rtz_status rtz_spectral_report_write_csv(const rtz_spectral_report* r,
                                                 const char* path);

RTZ_API rtz_status rtz_clustering_count(const double* eigs, size_t n,
                                        double center, double epsilon,
                                        size_t* out);

enum { RTZ_TEST_MONOMIAL = 0, RTZ_TEST_LOG_SHIFT = 1 };

/* kind RTZ_TEST_MONOMIAL: param is the degree (0..8); RTZ_TEST_LOG_SHIFT:
 * param is x in log(1 + x t). */
RTZ_API rtz_status rtz_equidist_discrepancy(const rtz_toeplitz* t,
                                            const rtz_coeffs* c, int kind,
                                            double param, double* out);
/* Default admissible log shift x = 1 / (2 max(max|lambda|, max|f|)). */
RTZ_API rtz_status rtz_equidist_default_log_x(const rtz_toeplitz* t,
                                              const rtz_coeffs* c,
                                              double* out);

RTZ_API rtz_status rtz_szego_geometric_mean(const rtz_toeplitz* t, double* out);
RTZ_API rtz_status rtz_symbol_log_mean(const rtz_coeffs* c, double* out);

/* a, b: row-major interleaved n x n Hermitian matrices. */
RTZ_API rtz_status rtz_check_weyl(const double* a, const double* b, size_t n,
                                  int* out);
RTZ_API rtz_status rtz_check_interlacing(const double* a, size_t n,
                                         size_t delete_index, int* out);

#ifdef __cplusplus
}
#endif

#endif /* RANDTOEPLITZ_H */
