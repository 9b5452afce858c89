#include "rtz/toeplitz.hpp"

#include <string>

#include "rtz/spectral.hpp"
#include "rtz/transforms.hpp"

namespace rtz {

namespace {

std::size_t next_pow2(std::size_t n) {
  std::size_t m = 1;
  while (m < n) m <<= 1;
  return m;
}

CoefficientSequence trim(const CoefficientSequence& c, std::size_t N) {
  if (N == 0) throw InvalidInputError("ToeplitzSystem: dimension must be positive");
  if (c.bandwidth() + 1 < N) {
    throw InvalidInputError("ToeplitzSystem: coefficient bandwidth " +
                            std::to_string(c.bandwidth()) +
                            " insufficient for dimension " + std::to_string(N));
  }
  ComplexVector band(c.band().begin(), c.band().begin() + N);
  return CoefficientSequence(std::move(band));
}

}  // namespace

ToeplitzSystem::ToeplitzSystem(const CoefficientSequence& c, std::size_t N)
    : n_(N), coeffs_(trim(c, N)) {
  const std::size_t m = next_pow2(2 * N);
  ComplexVector col(m, Complex(0.0));
  for (std::size_t k = 0; k < N; ++k) col[k] = coeffs_.band()[k];
  for (std::size_t k = 1; k < N; ++k) col[m - k] = std::conj(coeffs_.band()[k]);
  embed_eigs_ = transforms::dft_forward(col);
}

ComplexVector ToeplitzSystem::matvec(const ComplexVector& x) const {
  if (x.size() != n_) {
    throw InvalidInputError("matvec: vector length does not match dimension");
  }
  require_finite(x, "matvec");
  const std::size_t m = embed_eigs_.size();
  ComplexVector pad(m, Complex(0.0));
  for (std::size_t i = 0; i < n_; ++i) pad[i] = x[i];
  ComplexVector X = transforms::dft_forward(pad);
  for (std::size_t i = 0; i < m; ++i) X[i] *= embed_eigs_[i];
  ComplexVector y = transforms::dft_inverse(X);
  y.resize(n_);
  return y;
}

DenseMatrix ToeplitzSystem::dense(std::size_t cap) const {
  if (n_ > cap) {
    throw ResourceLimitError("dense: dimension " + std::to_string(n_) +
                             " exceeds cap " + std::to_string(cap));
  }
  DenseMatrix A(n_);
  const ComplexVector& b = coeffs_.band();
  for (std::size_t j = 0; j < n_; ++j) {
    for (std::size_t k = 0; k < n_; ++k) {
      A.at(j, k) = j >= k ? b[j - k] : std::conj(b[k - j]);
    }
  }
  return A;
}

ToeplitzSystem::PdResult ToeplitzSystem::is_positive_definite(
    std::size_t cap) const {
  const std::vector<double> eigs = hermitian_eigenvalues(dense(cap));
  return {eigs.front() > 0.0, eigs.front()};
}

}  // namespace rtz
