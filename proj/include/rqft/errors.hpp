#pragma once

#include <stdexcept>
#include <string>

namespace rqft {

// All recoverable failures surface as typed exceptions so callers (CLI,
// bindings) can map them to exit codes without string matching.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct BadBox : Error {
  using Error::Error;
};
struct NonConvergence : Error {
  using Error::Error;
};
struct BudgetExceeded : Error {
  using Error::Error;
};
struct CoincidenceDivergence : Error {
  using Error::Error;
};
struct NegativeSmearing : Error {
  using Error::Error;
};
struct SingularWavefunction : Error {
  using Error::Error;
};
struct OutOfRange : Error {
  using Error::Error;
};
struct ExponentViolation : Error {
  using Error::Error;
};
struct LightconeSingularity : Error {
  using Error::Error;
};
struct ValidationError : Error {
  using Error::Error;
};

}  // namespace rqft
