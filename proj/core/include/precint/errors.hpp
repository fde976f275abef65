#pragma once

#include <stdexcept>
#include <string>

namespace precint {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class DivisionByZero : public Error {
 public:
  DivisionByZero() : Error("division by zero") {}
  explicit DivisionByZero(const std::string& what) : Error(what) {}
};

/// A documented precondition of an operation was violated by the caller.
class PreconditionError : public Error {
 public:
  using Error::Error;
};

/// Two field elements from incompatible number fields were combined.
class FieldMismatch : public Error {
 public:
  using Error::Error;
};

/// Raised by the integral-basis loop when its safety cap is hit. Never
/// expected on valid input; the cap is derived from the discriminant.
class InternalError : public Error {
 public:
  using Error::Error;
};

/// An orbit with solutions of nonzero valuation growth was requested without
/// a right bound.
class MissingRightBound : public Error {
 public:
  MissingRightBound(std::string orbit, const std::string& diagnosis)
      : Error("orbit " + orbit + " needs a right bound: " + diagnosis),
        orbit_(std::move(orbit)) {}

  const std::string& orbit() const noexcept { return orbit_; }

 private:
  std::string orbit_;
};

/// Transition matrix between two bases is singular (they span different spaces).
class SingularTransition : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  ParseError(const std::string& message, std::size_t position)
      : Error(message + " at position " + std::to_string(position)), position_(position) {}

  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

}  // namespace precint
