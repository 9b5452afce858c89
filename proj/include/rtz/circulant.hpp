#pragma once

#include <vector>

#include "rtz/symbol.hpp"
#include "rtz/types.hpp"

namespace rtz {

// Tie-break rule for the middle Strang entry s_m when N = 2m is even:
// zero, or the average (c_m + conj(c_m))/2 = Re(c_m).
enum class EvenRule { kZero, kAverage };

// Circulant operator determined by its first column; eigenvalues (the DFT of
// that column) are cached at construction. Immutable afterwards.
class CirculantOperator {
 public:
  explicit CirculantOperator(ComplexVector first_column);

  std::size_t dim() const { return col_.size(); }
  const ComplexVector& first_column() const { return col_; }

  // Raw cached DFT values, in DFT order (complex; imaginary parts are
  // roundoff when the operator is Hermitian).
  const ComplexVector& eigenvalues_raw() const { return eigs_; }

  // Hermitian iff every cached eigenvalue is real to relative tolerance.
  bool is_hermitian(double tol = 1e-12) const;

  // Real eigenvalues sorted ascending; rejects non-Hermitian operators.
  std::vector<double> eigenvalues_sorted() const;

  // y = C x (diagonalized product; used by tests and dense cross-checks).
  ComplexVector apply(const ComplexVector& x) const;

  // z with C z = b via division in DFT space; rejects singular or
  // near-singular operators (min |eig| < 1e-14 * max |eig|).
  ComplexVector solve(const ComplexVector& b) const;

  // y = C^{-1/2} x for Hermitian positive definite C; applying twice equals
  // solve(x).
  ComplexVector inverse_sqrt_apply(const ComplexVector& x) const;

 private:
  ComplexVector col_;
  ComplexVector eigs_;
};

// Strang preconditioner of the Toeplitz family of c at size N: copy the
// central band and wrap it. For N = 2m+1: s_l = c_l for l <= m,
// s_l = conj(c_{N-l}) for l > m. For N = 2m the ambiguous s_m follows `rule`.
// Requires bandwidth(c) >= ceil(N/2).
CirculantOperator strang_preconditioner(const CoefficientSequence& c,
                                        std::size_t N,
                                        EvenRule rule = EvenRule::kAverage);

}  // namespace rtz
