#pragma once

#include <vector>

#include "rtz/circulant.hpp"
#include "rtz/toeplitz.hpp"

namespace rtz {

// What to do when the search direction exposes nonpositive curvature
// (d^* T d <= 0, impossible for exactly PD systems):
//   kAbort    — throw NotPositiveDefiniteError (the library default);
//   kContinue — take the step anyway and count it, aborting only when the
//               curvature is exactly zero or non-finite. Experiment sweeps
//               use this so borderline random realizations still report an
//               iteration count instead of aborting the whole sweep.
enum class IndefinitePolicy { kAbort, kContinue };

struct SolveOptions {
  double tol = 1e-10;     // on ||r_j|| / ||r_0||
  std::size_t max_iter = 0;  // 0 means 4N
  IndefinitePolicy policy = IndefinitePolicy::kAbort;
  bool record_iterates = false;  // keep x_0..x_final (tests only; O(N^2) memory)
};

struct SolveReport {
  std::size_t iterations = 0;
  std::vector<double> residual_ratios;  // residual_ratios[0] = 1
  bool converged = false;
  ComplexVector solution;
  double wall_time = 0.0;  // seconds
  double true_residual_ratio = 0.0;  // ||b - T x|| / ||b|| at exit
  std::size_t negative_curvature_steps = 0;
  std::vector<ComplexVector> iterates;
};

// Preconditioned conjugate gradients on T x = b with circulant preconditioner
// S (pass nullptr for plain CG). Complex inner products <u,v> = v^* u:
//   x_0 = 0, r_0 = b, z_0 = S^{-1} r_0, d_1 = z_0;
//   alpha_j = <z_{j-1}, r_{j-1}> / <d_j, T d_j>,
//   x_j = x_{j-1} + alpha_j d_j,  r_j = r_{j-1} - alpha_j T d_j,
//   z_j = S^{-1} r_j,  beta_{j+1} = <z_j, r_j> / <z_{j-1}, r_{j-1}>,
//   d_{j+1} = z_j + beta_{j+1} d_j.
// Stops when ||r_j||/||r_0|| < tol (converged) or after max_iter steps
// (reported, not thrown).
SolveReport pcg_solve(const ToeplitzSystem& T, const CirculantOperator* S,
                      const ComplexVector& b, const SolveOptions& opts = {});

}  // namespace rtz
