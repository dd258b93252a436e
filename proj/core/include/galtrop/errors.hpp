#pragma once

#include <stdexcept>
#include <string>

namespace galtrop {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Input data violates a type invariant (non-primitive ray, bad rational...).
class MalformedInput : public Error {
 public:
  using Error::Error;
};

/// A mathematical precondition of an operation does not hold.
class PreconditionError : public Error {
 public:
  using Error::Error;
};

/// Twist data is not a homomorphism into Aut(fan).
class InvalidTwist : public Error {
 public:
  using Error::Error;
};

/// The cone is outside the supported (smooth simplicial) class.
class UnsupportedCone : public Error {
 public:
  using Error::Error;
};

/// Lookup failed (point outside the support of a fan, missing cone...).
class NotFound : public Error {
 public:
  using Error::Error;
};

}  // namespace galtrop
