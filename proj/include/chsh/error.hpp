#pragma once

#include <stdexcept>
#include <string>

namespace chsh {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Operand dimensions do not match.
class ShapeError : public Error {
 public:
  using Error::Error;
};

/// A tensor product would exceed the configured dimension cap.
class CapacityError : public Error {
 public:
  using Error::Error;
};

/// A scalar parameter lies outside its admissible range.
class DomainError : public Error {
 public:
  using Error::Error;
};

/// A documented precondition on structured inputs is violated.
class PreconditionError : public Error {
 public:
  using Error::Error;
};

/// An input degenerates (e.g. a vanishing norm) so the operation is undefined.
class DegenerateInputError : public Error {
 public:
  using Error::Error;
};

/// Quadrature could not certify the requested accuracy.
class PrecisionError : public Error {
 public:
  using Error::Error;
};

/// A computed quantity contradicts an identity it must satisfy.
class ConsistencyError : public Error {
 public:
  using Error::Error;
};

}  // namespace chsh
