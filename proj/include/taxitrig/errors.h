#ifndef TAXITRIG_ERRORS_H_
#define TAXITRIG_ERRORS_H_

#include <stdexcept>
#include <string>

namespace taxitrig {

// Base of every exception thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Arithmetic or comparison between an exact and a float Scalar.
class BackendMismatch : public Error {
 public:
  using Error::Error;
};

// Input outside the domain of an operation (non-finite angle, x/0).
class DomainError : public Error {
 public:
  using Error::Error;
};

// Malformed textual input (numbers, function names, form names).
class ParseError : public Error {
 public:
  using Error::Error;
};

// An operation was asked for something it does not define, e.g. the
// quotient-rule derivative of sine.
class UsageError : public Error {
 public:
  using Error::Error;
};

// Internal consistency check failed. Never expected in a correct build.
class InvariantViolation : public Error {
 public:
  using Error::Error;
};

// A finite-difference stencil hit a pole or crossed a breakpoint.
class OracleInapplicable : public Error {
 public:
  using Error::Error;
};

}  // namespace taxitrig

#endif  // TAXITRIG_ERRORS_H_
