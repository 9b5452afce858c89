#include "randtoeplitz.h"

#include <algorithm>
#include <cstring>
#include <new>
#include <string>

#include "rtz/circulant.hpp"
#include "rtz/solver.hpp"
#include "rtz/spectral.hpp"
#include "rtz/symbol.hpp"
#include "rtz/toeplitz.hpp"
#include "rtz/transforms.hpp"

struct rtz_model {
  rtz::SymbolModel m;
};
struct rtz_coeffs {
  rtz::CoefficientSequence c;
};
struct rtz_toeplitz {
  rtz::ToeplitzSystem t;
};
struct rtz_circulant {
  rtz::CirculantOperator s;
};
struct rtz_solve_report {
  rtz::SolveReport r;
};
struct rtz_spectral_report {
  rtz::SpectralReport r;
};

namespace {

thread_local std::string g_last_error;

rtz_status fail(rtz_status st, const char* what) {
  g_last_error = what;
  return st;
}

// Run `fn` and translate the exception taxonomy onto status codes.
template <typename Fn>
rtz_status guarded(Fn&& fn) {
  try {
    fn();
    return RTZ_OK;
  } catch (const rtz::InvalidInputError& e) {
    return fail(RTZ_EINVAL, e.what());
  } catch (const rtz::NotHermitianError& e) {
    return fail(RTZ_ENOT_HERMITIAN, e.what());
  } catch (const rtz::NotPositiveDefiniteError& e) {
    return fail(RTZ_ENOT_POSITIVE_DEFINITE, e.what());
  } catch (const rtz::SingularOperatorError& e) {
    return fail(RTZ_ESINGULAR, e.what());
  } catch (const rtz::ResourceLimitError& e) {
    return fail(RTZ_ERESOURCE, e.what());
  } catch (const rtz::DomainError& e) {
    return fail(RTZ_EDOMAIN, e.what());
  } catch (const std::bad_alloc&) {
    return fail(RTZ_ENOMEM, "out of memory");
  } catch (const std::exception& e) {
    return fail(RTZ_EINTERNAL, e.what());
  } catch (...) {
    return fail(RTZ_EINTERNAL, "unknown error");
  }
}

rtz_status require(bool ok, const char* what) {
  return ok ? RTZ_OK : fail(RTZ_EINVAL, what);
}

rtz::ComplexVector unpack(const double* interleaved, std::size_t n) {
  rtz::ComplexVector v(n);
  for (std::size_t i = 0; i < n; ++i) {
    v[i] = rtz::Complex(interleaved[2 * i], interleaved[2 * i + 1]);
  }
  return v;
}

void pack(const rtz::ComplexVector& v, double* interleaved) {
  for (std::size_t i = 0; i < v.size(); ++i) {
    interleaved[2 * i] = v[i].real();
    interleaved[2 * i + 1] = v[i].imag();
  }
}

rtz::DenseMatrix unpack_matrix(const double* a, std::size_t n) {
  rtz::DenseMatrix A(n);
  for (std::size_t i = 0; i < n * n; ++i) {
    A.a[i] = rtz::Complex(a[2 * i], a[2 * i + 1]);
  }
  return A;
}

}  // namespace

extern "C" {

const char* rtz_version(void) { return "1.0.0"; }

const char* rtz_last_error(void) { return g_last_error.c_str(); }

rtz_status rtz_model_create(uint64_t seed, size_t bandwidth, double decay,
                            int zero_phases, rtz_model** out) {
  if (rtz_status st = require(out != nullptr, "model_create: null output"))
    return st;
  return guarded([&] {
    rtz::SymbolModel m;
    m.seed = seed;
    m.bandwidth = bandwidth;
    m.decay = decay;
    m.zero_phases = zero_phases != 0;
    if (!(decay > 1.0)) {
      throw rtz::InvalidInputError("model_create: decay must exceed 1");
    }
    if (bandwidth == 0) {
      throw rtz::InvalidInputError("model_create: bandwidth must be positive");
    }
    *out = new rtz_model{m};
  });
}

void rtz_model_free(rtz_model* m) { delete m; }

rtz_status rtz_model_realize(const rtz_model* m, uint64_t trial,
                             rtz_coeffs** out) {
  if (rtz_status st =
          require(m != nullptr && out != nullptr, "model_realize: null arg"))
    return st;
  return guarded([&] { *out = new rtz_coeffs{m->m.realize(trial)}; });
}

rtz_status rtz_gaussian_phase(uint64_t seed, uint64_t trial, uint64_t k,
                              double* out) {
  if (rtz_status st = require(out != nullptr, "gaussian_phase: null output"))
    return st;
  return guarded([&] { *out = rtz::gaussian_phase(seed, trial, k); });
}

rtz_status rtz_wiener_tail(size_t K, double p, double* out) {
  if (rtz_status st = require(out != nullptr, "wiener_tail: null output"))
    return st;
  return guarded([&] { *out = rtz::wiener_tail(K, p); });
}

rtz_status rtz_coeffs_create(const double* half, size_t count,
                             rtz_coeffs** out) {
  if (rtz_status st = require(half != nullptr && out != nullptr && count > 0,
                              "coeffs_create: null or empty input"))
    return st;
  return guarded([&] {
    *out = new rtz_coeffs{rtz::CoefficientSequence(unpack(half, count))};
  });
}

void rtz_coeffs_free(rtz_coeffs* c) { delete c; }

rtz_status rtz_coeffs_bandwidth(const rtz_coeffs* c, size_t* out) {
  if (rtz_status st =
          require(c != nullptr && out != nullptr, "coeffs_bandwidth: null arg"))
    return st;
  *out = c->c.bandwidth();
  return RTZ_OK;
}

rtz_status rtz_coeffs_get(const rtz_coeffs* c, int64_t k, double* re,
                          double* im) {
  if (rtz_status st = require(c != nullptr && re != nullptr && im != nullptr,
                              "coeffs_get: null arg"))
    return st;
  const rtz::Complex v = c->c.at(k);
  *re = v.real();
  *im = v.imag();
  return RTZ_OK;
}

rtz_status rtz_coeffs_extended(const rtz_coeffs* c, size_t bandwidth,
                               rtz_coeffs** out) {
  if (rtz_status st =
          require(c != nullptr && out != nullptr, "coeffs_extended: null arg"))
    return st;
  return guarded([&] { *out = new rtz_coeffs{c->c.extended(bandwidth)}; });
}

rtz_status rtz_coeffs_eval(const rtz_coeffs* c, double theta, double* out) {
  if (rtz_status st =
          require(c != nullptr && out != nullptr, "coeffs_eval: null arg"))
    return st;
  return guarded([&] { *out = c->c.evaluate(theta); });
}

rtz_status rtz_coeffs_write_csv(const rtz_coeffs* c, const char* path) {
  if (rtz_status st = require(c != nullptr && path != nullptr,
                              "coeffs_write_csv: null arg"))
    return st;
  return guarded([&] { c->c.write_csv(path); });
}

rtz_status rtz_toeplitz_create(const rtz_coeffs* c, size_t n,
                               rtz_toeplitz** out) {
  if (rtz_status st =
          require(c != nullptr && out != nullptr, "toeplitz_create: null arg"))
    return st;
  return guarded([&] { *out = new rtz_toeplitz{rtz::ToeplitzSystem(c->c, n)}; });
}

void rtz_toeplitz_free(rtz_toeplitz* t) { delete t; }

rtz_status rtz_toeplitz_dim(const rtz_toeplitz* t, size_t* out) {
  if (rtz_status st =
          require(t != nullptr && out != nullptr, "toeplitz_dim: null arg"))
    return st;
  *out = t->t.dim();
  return RTZ_OK;
}

rtz_status rtz_toeplitz_matvec(const rtz_toeplitz* t, const double* x,
                               double* y) {
  if (rtz_status st = require(t != nullptr && x != nullptr && y != nullptr,
                              "toeplitz_matvec: null arg"))
    return st;
  return guarded([&] { pack(t->t.matvec(unpack(x, t->t.dim())), y); });
}

rtz_status rtz_toeplitz_dense(const rtz_toeplitz* t, double* out) {
  if (rtz_status st =
          require(t != nullptr && out != nullptr, "toeplitz_dense: null arg"))
    return st;
  return guarded([&] { pack(t->t.dense().a, out); });
}

rtz_status rtz_toeplitz_is_pd(const rtz_toeplitz* t, int* pd,
                              double* lambda_min) {
  if (rtz_status st =
          require(t != nullptr && pd != nullptr && lambda_min != nullptr,
                  "toeplitz_is_pd: null arg"))
    return st;
  return guarded([&] {
    const auto res = t->t.is_positive_definite();
    *pd = res.positive_definite ? 1 : 0;
    *lambda_min = res.lambda_min;
  });
}

rtz_status rtz_strang_create(const rtz_coeffs* c, size_t n, int even_rule,
                             rtz_circulant** out) {
  if (rtz_status st =
          require(c != nullptr && out != nullptr, "strang_create: null arg"))
    return st;
  if (rtz_status st = require(
          even_rule == RTZ_EVEN_RULE_ZERO || even_rule == RTZ_EVEN_RULE_AVERAGE,
          "strang_create: bad even rule"))
    return st;
  return guarded([&] {
    const rtz::EvenRule rule = even_rule == RTZ_EVEN_RULE_ZERO
                                   ? rtz::EvenRule::kZero
                                   : rtz::EvenRule::kAverage;
    *out = new rtz_circulant{rtz::strang_preconditioner(c->c, n, rule)};
  });
}

rtz_status rtz_circulant_create(const double* first_column, size_t n,
                                rtz_circulant** out) {
  if (rtz_status st =
          require(first_column != nullptr && out != nullptr && n > 0,
                  "circulant_create: null or empty input"))
    return st;
  return guarded([&] {
    *out = new rtz_circulant{rtz::CirculantOperator(unpack(first_column, n))};
  });
}

void rtz_circulant_free(rtz_circulant* s) { delete s; }

rtz_status rtz_circulant_dim(const rtz_circulant* s, size_t* out) {
  if (rtz_status st =
          require(s != nullptr && out != nullptr, "circulant_dim: null arg"))
    return st;
  *out = s->s.dim();
  return RTZ_OK;
}

rtz_status rtz_circulant_first_column(const rtz_circulant* s, double* out) {
  if (rtz_status st = require(s != nullptr && out != nullptr,
                              "circulant_first_column: null arg"))
    return st;
  pack(s->s.first_column(), out);
  return RTZ_OK;
}

rtz_status rtz_circulant_eigenvalues(const rtz_circulant* s, double* out) {
  if (rtz_status st = require(s != nullptr && out != nullptr,
                              "circulant_eigenvalues: null arg"))
    return st;
  return guarded([&] {
    const std::vector<double> eigs = s->s.eigenvalues_sorted();
    std::memcpy(out, eigs.data(), eigs.size() * sizeof(double));
  });
}

rtz_status rtz_circulant_apply(const rtz_circulant* s, const double* x,
                               double* y) {
  if (rtz_status st = require(s != nullptr && x != nullptr && y != nullptr,
                              "circulant_apply: null arg"))
    return st;
  return guarded([&] { pack(s->s.apply(unpack(x, s->s.dim())), y); });
}

rtz_status rtz_circulant_solve(const rtz_circulant* s, const double* b,
                               double* z) {
  if (rtz_status st = require(s != nullptr && b != nullptr && z != nullptr,
                              "circulant_solve: null arg"))
    return st;
  return guarded([&] { pack(s->s.solve(unpack(b, s->s.dim())), z); });
}

rtz_status rtz_circulant_inv_sqrt_apply(const rtz_circulant* s, const double* x,
                                        double* y) {
  if (rtz_status st = require(s != nullptr && x != nullptr && y != nullptr,
                              "circulant_inv_sqrt_apply: null arg"))
    return st;
  return guarded(
      [&] { pack(s->s.inverse_sqrt_apply(unpack(x, s->s.dim())), y); });
}

rtz_status rtz_make_rhs(size_t n, int kind, uint64_t seed, double* out) {
  if (rtz_status st = require(out != nullptr, "make_rhs: null output"))
    return st;
  if (rtz_status st =
          require(kind == RTZ_RHS_ONES || kind == RTZ_RHS_SEEDED_RANDOM,
                  "make_rhs: bad kind"))
    return st;
  return guarded([&] {
    const rtz::RhsKind k =
        kind == RTZ_RHS_ONES ? rtz::RhsKind::kOnes : rtz::RhsKind::kSeededRandom;
    pack(rtz::make_rhs(n, k, seed), out);
  });
}

rtz_status rtz_pcg_solve(const rtz_toeplitz* t, const rtz_circulant* s,
                         const double* b, double tol, size_t max_iter,
                         int indefinite_policy, rtz_solve_report** out) {
  if (rtz_status st = require(t != nullptr && b != nullptr && out != nullptr,
                              "pcg_solve: null arg"))
    return st;
  if (rtz_status st = require(indefinite_policy == RTZ_INDEFINITE_ABORT ||
                                  indefinite_policy == RTZ_INDEFINITE_CONTINUE,
                              "pcg_solve: bad indefinite policy"))
    return st;
  return guarded([&] {
    rtz::SolveOptions opts;
    opts.tol = tol;
    opts.max_iter = max_iter;
    opts.policy = indefinite_policy == RTZ_INDEFINITE_ABORT
                      ? rtz::IndefinitePolicy::kAbort
                      : rtz::IndefinitePolicy::kContinue;
    *out = new rtz_solve_report{rtz::pcg_solve(
        t->t, s ? &s->s : nullptr, unpack(b, t->t.dim()), opts)};
  });
}

void rtz_solve_report_free(rtz_solve_report* r) { delete r; }

rtz_status rtz_solve_report_iterations(const rtz_solve_report* r, size_t* out) {
  if (rtz_status st = require(r != nullptr && out != nullptr,
                              "solve_report_iterations: null arg"))
    return st;
  *out = r->r.iterations;
  return RTZ_OK;
}

rtz_status rtz_solve_report_converged(const rtz_solve_report* r, int* out) {
  if (rtz_status st = require(r != nullptr && out != nullptr,
                              "solve_report_converged: null arg"))
    return st;
  *out = r->r.converged ? 1 : 0;
  return RTZ_OK;
}

rtz_status rtz_solve_report_residual_count(const rtz_solve_report* r,
                                           size_t* out) {
  if (rtz_status st = require(r != nullptr && out != nullptr,
                              "solve_report_residual_count: null arg"))
    return st;
  *out = r->r.residual_ratios.size();
  return RTZ_OK;
}

rtz_status rtz_solve_report_residuals(const rtz_solve_report* r, double* out) {
  if (rtz_status st = require(r != nullptr && out != nullptr,
                              "solve_report_residuals: null arg"))
    return st;
  std::memcpy(out, r->r.residual_ratios.data(),
              r->r.residual_ratios.size() * sizeof(double));
  return RTZ_OK;
}

rtz_status rtz_solve_report_solution(const rtz_solve_report* r, double* out) {
  if (rtz_status st = require(r != nullptr && out != nullptr,
                              "solve_report_solution: null arg"))
    return st;
  pack(r->r.solution, out);
  return RTZ_OK;
}

rtz_status rtz_solve_report_true_residual(const rtz_solve_report* r,
                                          double* out) {
  if (rtz_status st = require(r != nullptr && out != nullptr,
                              "solve_report_true_residual: null arg"))
    return st;
  *out = r->r.true_residual_ratio;
  return RTZ_OK;
}

rtz_status rtz_solve_report_wall_time(const rtz_solve_report* r, double* out) {
  if (rtz_status st = require(r != nullptr && out != nullptr,
                              "solve_report_wall_time: null arg"))
    return st;
  *out = r->r.wall_time;
  return RTZ_OK;
}

rtz_status rtz_solve_report_negative_curvature(const rtz_solve_report* r,
                                               size_t* out) {
  if (rtz_status st = require(r != nullptr && out != nullptr,
                              "solve_report_negative_curvature: null arg"))
    return st;
  *out = r->r.negative_curvature_steps;
  return RTZ_OK;
}

rtz_status rtz_dense_hermitian_eigenvalues(const double* a, size_t n,
                                           double* out) {
  if (rtz_status st = require(a != nullptr && out != nullptr && n > 0,
                              "dense_hermitian_eigenvalues: null arg"))
    return st;
  return guarded([&] {
    const std::vector<double> eigs =
        rtz::hermitian_eigenvalues(unpack_matrix(a, n));
    std::memcpy(out, eigs.data(), n * sizeof(double));
  });
}

rtz_status rtz_preconditioned_spectrum(const rtz_toeplitz* t,
                                       const rtz_circulant* s, double epsilon,
                                       rtz_spectral_report** out) {
  if (rtz_status st = require(t != nullptr && s != nullptr && out != nullptr,
                              "preconditioned_spectrum: null arg"))
    return st;
  return guarded([&] {
    *out = new rtz_spectral_report{
        rtz::preconditioned_spectrum(t->t, s->s, epsilon)};
  });
}

void rtz_spectral_report_free(rtz_spectral_report* r) { delete r; }

rtz_status rtz_spectral_report_size(const rtz_spectral_report* r, size_t* out) {
  if (rtz_status st = require(r != nullptr && out != nullptr,
                              "spectral_report_size: null arg"))
    return st;
  *out = r->r.eigenvalues.size();
  return RTZ_OK;
}

rtz_status rtz_spectral_report_eigenvalues(const rtz_spectral_report* r,
                                           double* out) {
  if (rtz_status st = require(r != nullptr && out != nullptr,
                              "spectral_report_eigenvalues: null arg"))
    return st;
  std::memcpy(out, r->r.eigenvalues.data(),
              r->r.eigenvalues.size() * sizeof(double));
  return RTZ_OK;
}

rtz_status rtz_spectral_report_outliers(const rtz_spectral_report* r,
                                        size_t* out) {
  if (rtz_status st = require(r != nullptr && out != nullptr,
                              "spectral_report_outliers: null arg"))
    return st;
  *out = r->r.cluster_outliers;
  return RTZ_OK;
}

rtz_status rtz_spectral_report_geometric_mean(const rtz_spectral_report* r,
                                              double* out) {
  if (rtz_status st = require(r != nullptr && out != nullptr,
                              "spectral_report_geometric_mean: null arg"))
    return st;
  *out = r->r.geometric_mean;
  return RTZ_OK;
}

rtz_status rtz_spectral_report_write_csv(const rtz_spectral_report* r,
                                         const char* path) {
  if (rtz_status st = require(r != nullptr && path != nullptr,
                              "spectral_report_write_csv: null arg"))
    return st;
  return guarded([&] { r->r.write_csv(path); });
}

rtz_status rtz_clustering_count(const double* eigs, size_t n, double center,
                                double epsilon, size_t* out) {
  if (rtz_status st = require(eigs != nullptr && out != nullptr,
                              "clustering_count: null arg"))
    return st;
  return guarded([&] {
    const std::vector<double> v(eigs, eigs + n);
    *out = rtz::clustering_count(v, center, epsilon);
  });
}

rtz_status rtz_equidist_discrepancy(const rtz_toeplitz* t, const rtz_coeffs* c,
                                    int kind, double param, double* out) {
  if (rtz_status st = require(t != nullptr && c != nullptr && out != nullptr,
                              "equidist_discrepancy: null arg"))
    return st;
  if (rtz_status st =
          require(kind == RTZ_TEST_MONOMIAL || kind == RTZ_TEST_LOG_SHIFT,
                  "equidist_discrepancy: bad test function kind"))
    return st;
  return guarded([&] {
    rtz::TestFunction F;
    if (kind == RTZ_TEST_MONOMIAL) {
      if (param < 0.0 || param != static_cast<double>(static_cast<unsigned>(param))) {
        throw rtz::InvalidInputError(
            "equidist_discrepancy: monomial degree must be a small integer");
      }
      F = rtz::TestFunction::monomial(static_cast<unsigned>(param));
    } else {
      F = rtz::TestFunction::log_shift(param);
    }
    *out = rtz::equidistribution_discrepancy(t->t, c->c, F);
  });
}

rtz_status rtz_equidist_default_log_x(const rtz_toeplitz* t,
                                      const rtz_coeffs* c, double* out) {
  if (rtz_status st = require(t != nullptr && c != nullptr && out != nullptr,
                              "equidist_default_log_x: null arg"))
    return st;
  return guarded([&] {
    const std::vector<double> eigs = rtz::hermitian_eigenvalues(t->t.dense());
    double bound = 0.0;
    for (double v : eigs) bound = std::max(bound, std::abs(v));
    const std::size_t n = t->t.dim();
    for (std::size_t j = 1; j <= n; ++j) {
      const double theta = -rtz::kPi + 2.0 * rtz::kPi * static_cast<double>(j) /
                                           static_cast<double>(n + 1);
      bound = std::max(bound, std::abs(c->c.evaluate(theta)));
    }
    if (bound == 0.0) {
      throw rtz::DomainError("equidist_default_log_x: zero spectrum bound");
    }
    *out = 1.0 / (2.0 * bound);
  });
}

rtz_status rtz_szego_geometric_mean(const rtz_toeplitz* t, double* out) {
  if (rtz_status st = require(t != nullptr && out != nullptr,
                              "szego_geometric_mean: null arg"))
    return st;
  return guarded([&] { *out = rtz::szego_geometric_mean(t->t); });
}

rtz_status rtz_symbol_log_mean(const rtz_coeffs* c, double* out) {
  if (rtz_status st =
          require(c != nullptr && out != nullptr, "symbol_log_mean: null arg"))
    return st;
  return guarded([&] { *out = rtz::symbol_log_mean(c->c); });
}

rtz_status rtz_check_weyl(const double* a, const double* b, size_t n,
                          int* out) {
  if (rtz_status st =
          require(a != nullptr && b != nullptr && out != nullptr && n > 0,
                  "check_weyl: null arg"))
    return st;
  return guarded([&] {
    *out = rtz::check_weyl(unpack_matrix(a, n), unpack_matrix(b, n)) ? 1 : 0;
  });
}

rtz_status rtz_check_interlacing(const double* a, size_t n, size_t delete_index,
                                 int* out) {
  if (rtz_status st = require(a != nullptr && out != nullptr && n > 0,
                              "check_interlacing: null arg"))
    return st;
  return guarded([&] {
    *out = rtz::check_interlacing(unpack_matrix(a, n), delete_index) ? 1 : 0;
  });
}

}  // extern "C"
