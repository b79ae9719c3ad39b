#pragma once

#include <stdexcept>
#include <string>

namespace galoisdraw {

/// Base class of every error thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Operands live in different coefficient domains (or different moduli).
class DomainMismatch : public Error {
 public:
  using Error::Error;
};

/// Input violates an operation precondition.
class InvalidArgument : public Error {
 public:
  using Error::Error;
};

/// Input is outside what an engine supports (e.g. factorization degree cap).
class Unsupported : public Error {
 public:
  using Error::Error;
};

/// An iterative numeric method did not reach its tolerance.
class NotConverged : public Error {
 public:
  using Error::Error;
};

}  // namespace galoisdraw
