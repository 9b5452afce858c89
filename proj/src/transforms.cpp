#include "rtz/transforms.hpp"

#include <cstdint>
#include <utility>

namespace rtz::transforms {

namespace {

bool is_pow2(std::size_t n) { return n != 0 && (n & (n - 1)) == 0; }

std::size_t next_pow2(std::size_t n) {
  std::size_t m = 1;
  while (m < n) m <<= 1;
  return m;
}

// In-place radix-2 DIT, length must be a power of two. sign = -1 forward.
void fft_pow2(ComplexVector& a, int sign) {
  const std::size_t n = a.size();
  if (n <= 1) return;

  // bit-reversal permutation
  for (std::size_t i = 1, j = 0; i < n; ++i) {
    std::size_t bit = n >> 1;
    for (; j & bit; bit >>= 1) j ^= bit;
    j ^= bit;
    if (i < j) std::swap(a[i], a[j]);
  }

  for (std::size_t len = 2; len <= n; len <<= 1) {
    const double ang = sign * 2.0 * kPi / static_cast<double>(len);
    const std::size_t half = len / 2;
    // per-stage twiddle table keeps the roundoff of repeated multiplication
    // out of the butterflies
    ComplexVector w(half);
    for (std::size_t k = 0; k < half; ++k) {
      w[k] = Complex(std::cos(ang * static_cast<double>(k)),
                     std::sin(ang * static_cast<double>(k)));
    }
    for (std::size_t i = 0; i < n; i += len) {
      for (std::size_t k = 0; k < half; ++k) {
        Complex u = a[i + k];
        Complex v = a[i + k + half] * w[k];
        a[i + k] = u + v;
        a[i + k + half] = u - v;
      }
    }
  }
}

// Bluestein chirp-z: N-point DFT as a 2N-ish circular convolution carried on
// a power-of-two grid. The chirp exponent k^2 is reduced mod 2N so the angle
// stays in [0, 2*pi) for any N.
ComplexVector bluestein(const ComplexVector& x, int sign) {
  const std::size_t n = x.size();
  const std::size_t m = next_pow2(2 * n - 1);
  const std::uint64_t two_n = 2 * static_cast<std::uint64_t>(n);

  ComplexVector chirp(n);
  for (std::size_t k = 0; k < n; ++k) {
    const std::uint64_t sq = (static_cast<std::uint64_t>(k) * k) % two_n;
    const double ang = sign * kPi * static_cast<double>(sq) / static_cast<double>(n);
    chirp[k] = Complex(std::cos(ang), std::sin(ang));
  }

  ComplexVector a(m, Complex(0.0)), b(m, Complex(0.0));
  for (std::size_t k = 0; k < n; ++k) a[k] = x[k] * chirp[k];
  b[0] = Complex(1.0);
  for (std::size_t k = 1; k < n; ++k) {
    b[k] = std::conj(chirp[k]);
    b[m - k] = b[k];
  }

  fft_pow2(a, -1);
  fft_pow2(b, -1);
  for (std::size_t k = 0; k < m; ++k) a[k] *= b[k];
  fft_pow2(a, +1);
  const double scale = 1.0 / static_cast<double>(m);

  ComplexVector out(n);
  for (std::size_t k = 0; k < n; ++k) out[k] = a[k] * scale * chirp[k];
  return out;
}

ComplexVector transform(const ComplexVector& x, int sign) {
  if (x.empty()) throw InvalidInputError("dft: empty input");
  require_finite(x, "dft");
  if (is_pow2(x.size())) {
    ComplexVector a = x;
    fft_pow2(a, sign);
    return a;
  }
  return bluestein(x, sign);
}

}  // namespace

ComplexVector dft_forward(const ComplexVector& x) { return transform(x, -1); }

ComplexVector dft_inverse(const ComplexVector& X) {
  ComplexVector x = transform(X, +1);
  const double scale = 1.0 / static_cast<double>(x.size());
  for (Complex& z : x) z *= scale;
  return x;
}

}  // namespace rtz::transforms
