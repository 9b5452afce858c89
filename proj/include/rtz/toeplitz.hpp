#pragma once

#include "rtz/symbol.hpp"
#include "rtz/types.hpp"

namespace rtz {

// Largest dimension we will materialize densely / eigensolve (O(N^3) work).
inline constexpr std::size_t kDenseCap = 1024;

// Hermitian Toeplitz operator T with (T)_{jk} = c_{j-k}. Matvecs run in
// O(M log M) through a circulant embedding of size M = smallest power of two
// >= 2N, whose first column is [c_0..c_{N-1}, 0.., conj(c_{N-1})..conj(c_1)].
class ToeplitzSystem {
 public:
  // Requires bandwidth(c) >= N-1 so every entry of T is explicit.
  ToeplitzSystem(const CoefficientSequence& c, std::size_t N);

  std::size_t dim() const { return n_; }

  // The coefficients actually used, trimmed to c_0..c_{N-1}.
  const CoefficientSequence& coefficients() const { return coeffs_; }

  // y = T x via the embedding; agrees with the dense product to 1e-12.
  ComplexVector matvec(const ComplexVector& x) const;

  // Dense N x N materialization; refuses N above the cap.
  DenseMatrix dense(std::size_t cap = kDenseCap) const;

  struct PdResult {
    bool positive_definite;
    double lambda_min;
  };
  // Dense eigensolve (so N must fit the cap): is lambda_min positive?
  PdResult is_positive_definite(std::size_t cap = kDenseCap) const;

 private:
  std::size_t n_;
  CoefficientSequence coeffs_;
  ComplexVector embed_eigs_;  // cached DFT of the embedding's first column
};

}  // namespace rtz
