#include "rtz/solver.hpp"

#include <chrono>
#include <cmath>

namespace rtz {

SolveReport pcg_solve(const ToeplitzSystem& T, const CirculantOperator* S,
                      const ComplexVector& b, const SolveOptions& opts) {
  const std::size_t n = T.dim();
  if (b.size() != n) {
    throw InvalidInputError("pcg_solve: rhs length does not match dimension");
  }
  require_finite(b, "pcg_solve");
  if (!(opts.tol > 0.0)) {
    throw InvalidInputError("pcg_solve: tolerance must be positive");
  }
  if (S && S->dim() != n) {
    throw InvalidInputError("pcg_solve: preconditioner size mismatch");
  }
  const double b_norm = norm2(b);
  if (b_norm == 0.0) {
    throw InvalidInputError("pcg_solve: zero right-hand side");
  }
  const std::size_t max_iter = opts.max_iter ? opts.max_iter : 4 * n;

  const auto t0 = std::chrono::steady_clock::now();
  SolveReport rep;
  rep.residual_ratios.reserve(max_iter + 1);
  rep.residual_ratios.push_back(1.0);

  ComplexVector x(n, Complex(0.0));
  ComplexVector r = b;
  ComplexVector z = S ? S->solve(r) : r;
  ComplexVector d = z;
  if (opts.record_iterates) rep.iterates.push_back(x);

  // <z, r> = r^* z is real for Hermitian PD operators; the real part is the
  // exact value up to roundoff in the imaginary component.
  double zr = inner(z, r).real();
  for (std::size_t j = 1; j <= max_iter; ++j) {
    ComplexVector Td = T.matvec(d);
    const double dTd = inner(Td, d).real();  // d^* T d
    if (!std::isfinite(dTd) || dTd == 0.0) {
      throw SingularOperatorError("pcg_solve: breakdown, d^* T d vanished");
    }
    if (dTd < 0.0) {
      if (opts.policy == IndefinitePolicy::kAbort) {
        throw NotPositiveDefiniteError(
            "pcg_solve: nonpositive curvature d^* T d <= 0");
      }
      ++rep.negative_curvature_steps;
    }
    const double alpha = zr / dTd;
    for (std::size_t i = 0; i < n; ++i) {
      x[i] += alpha * d[i];
      r[i] -= alpha * Td[i];
    }
    if (opts.record_iterates) rep.iterates.push_back(x);
    const double ratio = norm2(r) / b_norm;
    rep.residual_ratios.push_back(ratio);
    rep.iterations = j;
    if (ratio < opts.tol) {
      rep.converged = true;
      break;
    }
    if (j == max_iter) break;
    z = S ? S->solve(r) : r;
    const double zr_next = inner(z, r).real();
    if (zr == 0.0) {
      throw SingularOperatorError("pcg_solve: breakdown, <z, r> vanished");
    }
    const double beta = zr_next / zr;
    for (std::size_t i = 0; i < n; ++i) d[i] = z[i] + beta * d[i];
    zr = zr_next;
  }

  rep.solution = std::move(x);
  ComplexVector res = T.matvec(rep.solution);
  for (std::size_t i = 0; i < n; ++i) res[i] = b[i] - res[i];
  rep.true_residual_ratio = norm2(res) / b_norm;
  rep.wall_time =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - t0)
          .count();
  return rep;
}

}  // namespace rtz
