#include "rtz/circulant.hpp"

#include <algorithm>
#include <cmath>

#include "rtz/transforms.hpp"

namespace rtz {

CirculantOperator::CirculantOperator(ComplexVector first_column)
    : col_(std::move(first_column)) {
  if (col_.empty()) {
    throw InvalidInputError("CirculantOperator: empty first column");
  }
  require_finite(col_, "CirculantOperator");
  eigs_ = transforms::dft_forward(col_);
}

bool CirculantOperator::is_hermitian(double tol) const {
  double max_im = 0.0, max_abs = 0.0;
  for (Complex z : eigs_) {
    max_im = std::max(max_im, std::abs(z.imag()));
    max_abs = std::max(max_abs, std::abs(z));
  }
  return max_im <= tol * std::max(1.0, max_abs);
}

std::vector<double> CirculantOperator::eigenvalues_sorted() const {
  if (!is_hermitian()) {
    throw NotHermitianError(
        "eigenvalues_sorted: circulant is not Hermitian (complex DFT values)");
  }
  std::vector<double> out(eigs_.size());
  for (std::size_t i = 0; i < eigs_.size(); ++i) out[i] = eigs_[i].real();
  std::sort(out.begin(), out.end());
  return out;
}

ComplexVector CirculantOperator::apply(const ComplexVector& x) const {
  if (x.size() != col_.size()) {
    throw InvalidInputError("apply: vector length does not match dimension");
  }
  require_finite(x, "apply");
  ComplexVector X = transforms::dft_forward(x);
  for (std::size_t i = 0; i < X.size(); ++i) X[i] *= eigs_[i];
  return transforms::dft_inverse(X);
}

ComplexVector CirculantOperator::solve(const ComplexVector& b) const {
  if (b.size() != col_.size()) {
    throw InvalidInputError("solve: vector length does not match dimension");
  }
  require_finite(b, "solve");
  double min_abs = std::abs(eigs_[0]), max_abs = min_abs;
  for (Complex z : eigs_) {
    min_abs = std::min(min_abs, std::abs(z));
    max_abs = std::max(max_abs, std::abs(z));
  }
  if (min_abs <= 1e-14 * max_abs) {
    throw SingularOperatorError("solve: circulant is singular or near-singular");
  }
  ComplexVector X = transforms::dft_forward(b);
  for (std::size_t i = 0; i < X.size(); ++i) X[i] /= eigs_[i];
  return transforms::dft_inverse(X);
}

ComplexVector CirculantOperator::inverse_sqrt_apply(
    const ComplexVector& x) const {
  if (x.size() != col_.size()) {
    throw InvalidInputError(
        "inverse_sqrt_apply: vector length does not match dimension");
  }
  require_finite(x, "inverse_sqrt_apply");
  if (!is_hermitian()) {
    throw NotHermitianError("inverse_sqrt_apply: circulant is not Hermitian");
  }
  for (Complex z : eigs_) {
    if (z.real() <= 0.0) {
      throw NotPositiveDefiniteError(
          "inverse_sqrt_apply: circulant has a nonpositive eigenvalue");
    }
  }
  ComplexVector X = transforms::dft_forward(x);
  for (std::size_t i = 0; i < X.size(); ++i) {
    X[i] /= std::sqrt(eigs_[i].real());
  }
  return transforms::dft_inverse(X);
}

CirculantOperator strang_preconditioner(const CoefficientSequence& c,
                                        std::size_t N, EvenRule rule) {
  if (N == 0) {
    throw InvalidInputError("strang_preconditioner: size must be positive");
  }
  const std::size_t need = (N + 1) / 2;  // ceil(N/2)
  if (c.bandwidth() < need) {
    throw InvalidInputError(
        "strang_preconditioner: coefficient bandwidth too small for size");
  }
  const std::size_t m = N / 2;  // N = 2m+1 or N = 2m
  ComplexVector s(N, Complex(0.0));
  for (std::size_t l = 0; l < N; ++l) {
    if (l < m || (l == m && N % 2 == 1)) {
      s[l] = c.at(static_cast<std::int64_t>(l));
    } else if (l == m) {  // even N: the wrap-around tie
      s[l] = rule == EvenRule::kZero
                 ? Complex(0.0)
                 : Complex(c.at(static_cast<std::int64_t>(m)).real(), 0.0);
    } else {
      s[l] = std::conj(c.at(static_cast<std::int64_t>(N - l)));
    }
  }
  return CirculantOperator(std::move(s));
}

}  // namespace rtz
