#ifndef FSE_ERRORS_HPP
#define FSE_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace fse {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Invalid argument / out of supported domain.
struct DomainError : Error {
  using Error::Error;
};

// Result representable only outside double range.
struct OverflowError : Error {
  using Error::Error;
};

// Requested accuracy cannot be certified.
struct AccuracyError : Error {
  using Error::Error;
};

// Iteration budget exhausted before the convergence criteria were met.
struct ConvergenceError : Error {
  using Error::Error;
};

// Non-finite samples appeared during evolution.
struct InstabilityError : Error {
  using Error::Error;
};

// A projection/deflation left (numerically) nothing of the state.
struct DegenerateError : Error {
  using Error::Error;
};

}  // namespace fse

#endif
