#pragma once

#include <cstdint>
#include <string>

#include "rtz/types.hpp"

namespace rtz {

// Counter-based deterministic RNG: a splitmix64-style finalizer keyed on
// (seed, trial, k, stream) feeding Box-Muller. Pure functions of their
// arguments, identical on every platform, so any coefficient or right-hand
// side can be regenerated independently of evaluation order.
namespace rng {

std::uint64_t mix64(std::uint64_t z);
std::uint64_t counter_hash(std::uint64_t seed, std::uint64_t trial,
                           std::uint64_t k, std::uint64_t stream);

// Standard normal draw; `pair` selects an independent stream pair
// (Box-Muller consumes streams 2*pair and 2*pair+1).
double normal_draw(std::uint64_t seed, std::uint64_t trial, std::uint64_t k,
                   std::uint64_t pair);

}  // namespace rng

// Trial index reserved for right-hand-side generation so rhs draws never
// collide with coefficient phase draws.
inline constexpr std::uint64_t kRhsTrial = ~std::uint64_t{0};

// Standard-normal phase for coefficient c_k of a given trial. k = 0 is
// rejected: the phase of c_0 is pinned to zero so the diagonal stays real.
double gaussian_phase(std::uint64_t seed, std::uint64_t trial, std::uint64_t k);

// Hermitian coefficient sequence stored as its nonnegative half c_0..c_K;
// negative indices are implied by c_{-k} = conj(c_k).
class CoefficientSequence {
 public:
  // band holds c_0..c_K. Requires at least c_0, Im(c_0) = 0, all finite.
  explicit CoefficientSequence(ComplexVector band);

  std::size_t bandwidth() const { return band_.size() - 1; }  // K
  const ComplexVector& band() const { return band_; }

  // c_k for any integer k; zero outside the band, conjugated for k < 0.
  Complex at(std::int64_t k) const;

  // Same sequence zero-padded (or truncated) to bandwidth K.
  CoefficientSequence extended(std::size_t K) const;

  // f(theta) = c_0 + 2 Re sum_{k=1..K} c_k e^{ik theta}; real by symmetry.
  double evaluate(double theta) const;

  // CSV rows `k,re,im` for 0 <= k <= K, 17 significant digits, LF endings.
  void write_csv(const std::string& path) const;

 private:
  ComplexVector band_;
};

// The random generating-function model: magnitudes a_0 = 2,
// a_k = (1+i)/(1+k)^p for k >= 1, phases phi_k(trial) ~ N(0,1) drawn from the
// counter RNG, giving c_k = a_k e^{i phi_k}. zero_phases = true freezes all
// phases at zero (the deterministic variant used for limit diagnostics).
struct SymbolModel {
  std::uint64_t seed = 20240101;
  std::size_t bandwidth = 64;  // K: coefficients c_0..c_K
  double decay = 1.1;          // p; must exceed 1 (Wiener class)
  bool zero_phases = false;

  Complex amplitude(std::size_t k) const;  // a_k
  CoefficientSequence realize(std::uint64_t trial) const;
};

// Upper bound on the magnitude tail sum_{k>K} |a_k| via integral comparison:
// sqrt(2) * (1+K)^{1-p} / (p-1). Requires p > 1.
double wiener_tail(std::size_t K, double p = 1.1);

// Right-hand-side factory: all-ones, or reproducible real standard-normal
// entries keyed on (seed, kRhsTrial, index+1).
enum class RhsKind { kOnes, kSeededRandom };
ComplexVector make_rhs(std::size_t n, RhsKind kind, std::uint64_t seed = 0);

}  // namespace rtz
