#pragma once

#include <stdexcept>
#include <string>

namespace qrac {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Mismatched operand dimensions.
class DimensionError : public Error {
 public:
  using Error::Error;
};

// Bad user-supplied value: unknown scheme name, invalid level, domain error.
class InvalidArgumentError : public Error {
 public:
  using Error::Error;
};

// Result would not fit the declared integer capacity.
class CapacityError : public Error {
 public:
  using Error::Error;
};

// Scheme file is structurally malformed (parse error, missing keys, bad shape).
class SchemeFormatError : public Error {
 public:
  using Error::Error;
};

// A numeric invariant of a quantum object is broken.
class InvariantViolation : public Error {
 public:
  using Error::Error;
};

// Bloch reconstruction is not PSD; carries the offending eigenvalue.
class NotAStateError : public InvariantViolation {
 public:
  NotAStateError(const std::string& message, double min_eig)
      : InvariantViolation(message), min_eigenvalue(min_eig) {}

  double min_eigenvalue;
};

}  // namespace qrac
