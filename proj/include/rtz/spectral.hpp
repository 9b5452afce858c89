#pragma once

#include <map>
#include <string>
#include <vector>

#include "rtz/circulant.hpp"
#include "rtz/toeplitz.hpp"

namespace rtz {

// All real eigenvalues of a dense Hermitian matrix, ascending, by cyclic
// Jacobi with unitary 2x2 rotations. Input must be Hermitian to 1e-12
// (relative, entrywise); the iteration stops once the off-diagonal Frobenius
// norm falls below 1e-12 * ||A||_F.
std::vector<double> hermitian_eigenvalues(const DenseMatrix& A);

struct SpectralReport {
  std::vector<double> eigenvalues;  // ascending
  std::size_t cluster_outliers = 0;  // count of |lambda - 1| > epsilon
  double epsilon = 0.05;
  std::map<std::string, double> discrepancies;  // test-function name -> D
  double geometric_mean = 0.0;  // NaN when some eigenvalue <= 0

  // Rows `index,eigenvalue` (1-based, 17 significant digits, LF) followed by
  // a `#`-prefixed summary trailer with outliers / epsilon / geometric mean /
  // any discrepancies.
  void write_csv(const std::string& path) const;
};

// Spectrum of S^{-1} T computed as the Hermitian eigenproblem of the
// similarity S^{-1/2} T S^{-1/2}; real, and positive whenever T is PD.
SpectralReport preconditioned_spectrum(const ToeplitzSystem& T,
                                       const CirculantOperator& S,
                                       double epsilon = 0.05);

// How many eigenvalues fall strictly outside [center-eps, center+eps].
std::size_t clustering_count(const std::vector<double>& eigs, double center,
                             double epsilon);

// Test functions for the equidistribution discrepancy: monomials t^k with
// k <= 8, or log(1 + x t) (valid while |x| * max|t| < 1).
struct TestFunction {
  enum class Kind { kMonomial, kLogShift };
  Kind kind = Kind::kMonomial;
  unsigned degree = 1;
  double x = 0.0;

  static TestFunction monomial(unsigned k);
  static TestFunction log_shift(double x);
  double operator()(double t) const;
  std::string name() const;  // "t^2", "log(1+0.25t)"
};

// D = (1/N) | sum_j F(lambda_j) - F(f(theta_j)) | over the grid
// theta_j = -pi + 2 pi j/(N+1), j = 1..N, with both families sorted
// ascending before pairing. The symbol values come from `c`.
double equidistribution_discrepancy(const ToeplitzSystem& T,
                                    const CoefficientSequence& c,
                                    const TestFunction& F);

// Geometric mean of the eigenvalues of T, exp(mean log lambda); all
// eigenvalues must be positive.
double szego_geometric_mean(const ToeplitzSystem& T);

// exp of the 4096-point quadrature of (1/2pi) \int log f; grid points with
// |f| below 1e-13 are excluded (f log-integrable at isolated zeros), values
// below -1e-13 are a domain error.
double symbol_log_mean(const CoefficientSequence& c);

// Weyl inequalities: lambda_k(A) + lambda_1(B) <= lambda_k(A+B) <=
// lambda_k(A) + lambda_n(B) for all k, within 1e-10 slack.
bool check_weyl(const DenseMatrix& A, const DenseMatrix& B);

// Cauchy interlacing for the principal submatrix of A with row/column
// `delete_index` removed, within 1e-10 slack.
bool check_interlacing(const DenseMatrix& A, std::size_t delete_index);

}  // namespace rtz
