#include "rtz/symbol.hpp"

#include <cmath>
#include <cstdio>
#include <stdexcept>

namespace rtz {

namespace rng {

std::uint64_t mix64(std::uint64_t z) {
  z ^= z >> 30;
  z *= 0xBF58476D1CE4E5B9ULL;
  z ^= z >> 27;
  z *= 0x94D049BB133111EBULL;
  z ^= z >> 31;
  return z;
}

std::uint64_t counter_hash(std::uint64_t seed, std::uint64_t trial,
                           std::uint64_t k, std::uint64_t stream) {
  std::uint64_t h = mix64(seed + 0x9E3779B97F4A7C15ULL);
  h = mix64(h ^ (trial + 0xD1B54A32D192ED03ULL));
  h = mix64(h ^ (k + 0x8CB92BA72F3D8DD7ULL));
  h = mix64(h ^ stream);
  return h;
}

double normal_draw(std::uint64_t seed, std::uint64_t trial, std::uint64_t k,
                   std::uint64_t pair) {
  const std::uint64_t h1 = counter_hash(seed, trial, k, 2 * pair);
  const std::uint64_t h2 = counter_hash(seed, trial, k, 2 * pair + 1);
  // u1 in (0,1] so the log is finite; u2 in [0,1).
  const double u1 = static_cast<double>((h1 >> 11) + 1) * 0x1.0p-53;
  const double u2 = static_cast<double>(h2 >> 11) * 0x1.0p-53;
  return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * kPi * u2);
}

}  // namespace rng

double gaussian_phase(std::uint64_t seed, std::uint64_t trial,
                      std::uint64_t k) {
  if (k == 0) {
    throw InvalidInputError("gaussian_phase: k = 0 has no random phase");
  }
  return rng::normal_draw(seed, trial, k, 0);
}

CoefficientSequence::CoefficientSequence(ComplexVector band)
    : band_(std::move(band)) {
  if (band_.empty()) {
    throw InvalidInputError("CoefficientSequence: need at least c_0");
  }
  require_finite(band_, "CoefficientSequence");
  if (band_[0].imag() != 0.0) {
    throw InvalidInputError("CoefficientSequence: c_0 must be real");
  }
}

Complex CoefficientSequence::at(std::int64_t k) const {
  const std::uint64_t a = static_cast<std::uint64_t>(k < 0 ? -k : k);
  if (a >= band_.size()) return Complex(0.0);
  return k < 0 ? std::conj(band_[a]) : band_[a];
}

CoefficientSequence CoefficientSequence::extended(std::size_t K) const {
  ComplexVector band(K + 1, Complex(0.0));
  const std::size_t copy = std::min(K + 1, band_.size());
  for (std::size_t i = 0; i < copy; ++i) band[i] = band_[i];
  return CoefficientSequence(std::move(band));
}

double CoefficientSequence::evaluate(double theta) const {
  // f(theta) = c_0 + 2 Re sum_k c_k e^{ik theta}, accumulated via the
  // recurrence e^{i(k+1)theta} = e^{ik theta} * e^{i theta}.
  const Complex rot(std::cos(theta), std::sin(theta));
  Complex phase = rot;
  double acc = 0.0;
  for (std::size_t k = 1; k < band_.size(); ++k) {
    acc += (band_[k] * phase).real();
    phase *= rot;
  }
  return band_[0].real() + 2.0 * acc;
}

void CoefficientSequence::write_csv(const std::string& path) const {
  std::FILE* f = std::fopen(path.c_str(), "wb");
  if (!f) throw InvalidInputError("write_csv: cannot open " + path);
  std::fputs("k,re,im\n", f);
  for (std::size_t k = 0; k < band_.size(); ++k) {
    std::fprintf(f, "%zu,%.17g,%.17g\n", k, band_[k].real(), band_[k].imag());
  }
  std::fclose(f);
}

Complex SymbolModel::amplitude(std::size_t k) const {
  if (k == 0) return Complex(2.0, 0.0);
  const double mag = std::pow(1.0 + static_cast<double>(k), -decay);
  return Complex(mag, mag);  // (1+i)/(1+k)^p
}

CoefficientSequence SymbolModel::realize(std::uint64_t trial) const {
  if (!(decay > 1.0)) {
    throw InvalidInputError("SymbolModel: decay exponent must exceed 1");
  }
  if (bandwidth == 0) {
    throw InvalidInputError("SymbolModel: bandwidth must be positive");
  }
  ComplexVector band(bandwidth + 1);
  band[0] = amplitude(0);
  for (std::size_t k = 1; k <= bandwidth; ++k) {
    Complex c = amplitude(k);
    if (!zero_phases) {
      const double phi = gaussian_phase(seed, trial, k);
      c *= Complex(std::cos(phi), std::sin(phi));
    }
    band[k] = c;
  }
  return CoefficientSequence(std::move(band));
}

double wiener_tail(std::size_t K, double p) {
  if (!(p > 1.0)) {
    throw InvalidInputError("wiener_tail: decay exponent must exceed 1");
  }
  return std::sqrt(2.0) * std::pow(1.0 + static_cast<double>(K), 1.0 - p) /
         (p - 1.0);
}

ComplexVector make_rhs(std::size_t n, RhsKind kind, std::uint64_t seed) {
  if (n == 0) throw InvalidInputError("make_rhs: n must be positive");
  ComplexVector b(n);
  if (kind == RhsKind::kOnes) {
    for (Complex& z : b) z = Complex(1.0);
  } else {
    for (std::size_t j = 0; j < n; ++j) {
      b[j] = Complex(rng::normal_draw(seed, kRhsTrial, j + 1, 0), 0.0);
    }
  }
  return b;
}

}  // namespace rtz
