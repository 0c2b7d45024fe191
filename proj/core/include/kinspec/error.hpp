#pragma once

#include <stdexcept>
#include <string>

namespace kinspec {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Invalid parameters or inconsistent sizes passed to an operation.
class InvalidArgument : public Error {
 public:
  using Error::Error;
};

/// Density at or below the floor: velocity, temperature and heat flux are undefined.
class DegenerateState : public Error {
 public:
  using Error::Error;
};

/// Kernel-mode quadrature did not reach its tolerance after maximal refinement.
class QuadratureError : public Error {
 public:
  using Error::Error;
};

/// Time step violates the transport CFL bound or the explicit stiffness bound.
class StabilityError : public Error {
 public:
  using Error::Error;
};

/// Non-finite values appeared in the solution.
class NumericFailure : public Error {
 public:
  using Error::Error;
};

/// Malformed or semantically invalid run configuration.
class ConfigError : public Error {
 public:
  using Error::Error;
};

/// Checkpoint or kernel-cache container could not be read or does not match.
class FormatError : public Error {
 public:
  using Error::Error;
};

}  // namespace kinspec
