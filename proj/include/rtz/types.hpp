#pragma once

#include <cmath>
#include <complex>
#include <cstddef>
#include <vector>

#include "rtz/errors.hpp"

namespace rtz {

using Complex = std::complex<double>;
using ComplexVector = std::vector<Complex>;

inline constexpr double kPi = 3.141592653589793238462643383279502884;

inline bool is_finite(Complex z) {
  return std::isfinite(z.real()) && std::isfinite(z.imag());
}

inline bool all_finite(const ComplexVector& x) {
  for (Complex z : x) {
    if (!is_finite(z)) return false;
  }
  return true;
}

inline void require_finite(const ComplexVector& x, const char* what) {
  if (!all_finite(x)) {
    throw InvalidInputError(std::string(what) + ": non-finite entry");
  }
}

inline double norm2(const ComplexVector& x) {
  double s = 0.0;
  for (Complex z : x) s += std::norm(z);
  return std::sqrt(s);
}

// <u, v> = v^* u, the complex inner product used by the PCG recurrences.
inline Complex inner(const ComplexVector& u, const ComplexVector& v) {
  Complex s = 0.0;
  for (std::size_t i = 0; i < u.size(); ++i) s += std::conj(v[i]) * u[i];
  return s;
}

// Dense square matrix, row-major. Used for materialized Toeplitz systems and
// the Jacobi eigensolver input.
struct DenseMatrix {
  std::size_t n = 0;
  ComplexVector a;  // n * n entries

  DenseMatrix() = default;
  explicit DenseMatrix(std::size_t dim) : n(dim), a(dim * dim, Complex(0.0)) {}

  Complex& at(std::size_t i, std::size_t j) { return a[i * n + j]; }
  const Complex& at(std::size_t i, std::size_t j) const { return a[i * n + j]; }

  double max_abs() const {
    double m = 0.0;
    for (Complex z : a) m = std::max(m, std::abs(z));
    return m;
  }

  double frobenius_norm() const {
    double s = 0.0;
    for (Complex z : a) s += std::norm(z);
    return std::sqrt(s);
  }
};

}  // namespace rtz
