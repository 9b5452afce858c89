#pragma once

#include <stdexcept>
#include <string>

namespace rtz {

// Error taxonomy shared by the C++ core and the C ABI layer. Each subclass
// maps to one rtz_status code in randtoeplitz.h.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Bad argument: wrong length, non-finite entry, out-of-range index.
struct InvalidInputError : Error {
  using Error::Error;
};

// A matrix that is required to be Hermitian is not (contract violation).
struct NotHermitianError : Error {
  using Error::Error;
};

struct NotPositiveDefiniteError : Error {
  using Error::Error;
};

struct SingularOperatorError : Error {
  using Error::Error;
};

// Dense materialization / eigensolve requested above the configured cap.
struct ResourceLimitError : Error {
  using Error::Error;
};

// Mathematical domain violation (log of a nonpositive value etc).
struct DomainError : Error {
  using Error::Error;
};

}  // namespace rtz
