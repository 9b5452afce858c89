#pragma once

#include "rtz/types.hpp"

namespace rtz::transforms {

// Unnormalized forward DFT with negative exponent:
//   X_j = sum_k x_k * exp(-2*pi*i*j*k/N).
// Arbitrary lengths are supported exactly: radix-2 Cooley-Tukey for powers of
// two, Bluestein's chirp-z reduction otherwise. Throws InvalidInputError on
// empty or non-finite input.
ComplexVector dft_forward(const ComplexVector& x);

// Inverse of dft_forward: x_k = (1/N) sum_j X_j * exp(+2*pi*i*j*k/N).
ComplexVector dft_inverse(const ComplexVector& X);

}  // namespace rtz::transforms
