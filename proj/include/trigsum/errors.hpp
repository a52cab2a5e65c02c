#ifndef TRIGSUM_ERRORS_HPP
#define TRIGSUM_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace trigsum {

/// Base class for all library errors.
class Error : public std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// An argument lies outside the domain an operation supports.
class DomainError : public Error {
  using Error::Error;
};

/// A series tail bound could not be driven below the requested tolerance
/// within the work ceiling.
class ConvergenceError : public Error {
  using Error::Error;
};

/// Adaptive integration exhausted its subdivision budget.
class QuadratureError : public Error {
  using Error::Error;
};

}  // namespace trigsum

#endif  // TRIGSUM_ERRORS_HPP
