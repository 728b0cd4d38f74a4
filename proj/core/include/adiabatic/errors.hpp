#pragma once

#include <stdexcept>
#include <string>

namespace adiabatic {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A parameter or precondition was violated by the caller.
class InvalidArgument : public Error {
 public:
  using Error::Error;
};

/// The adiabatic gap vanishes, so the qubit eigenvectors are undefined.
class DegeneratePoint : public Error {
 public:
  using Error::Error;
};

/// An iterative method hit its iteration cap or a tolerance was not met.
class ConvergenceError : public Error {
 public:
  using Error::Error;
};

/// The requested quantity depends on a choice between degenerate ground
/// states that the caller did not make.
class DegenerateGroundState : public Error {
 public:
  using Error::Error;
};

}  // namespace adiabatic
