#pragma once

#include <stdexcept>
#include <string>
#include <utility>

namespace wittkit {

// Base of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// An argument violates an operation's precondition (n = 0, non-unital
// series, k out of range, ...). The CLI maps this to exit code 2.
class UsageError : public Error {
 public:
  using Error::Error;
};

// A precondition of a check did not hold; carries the name of
// the failing hypothesis.
class PreconditionError : public UsageError {
 public:
  PreconditionError(std::string hypothesis, const std::string& detail)
      : UsageError(hypothesis + ": " + detail), hypothesis_(std::move(hypothesis)) {}
  const std::string& hypothesis() const noexcept { return hypothesis_; }

 private:
  std::string hypothesis_;
};

// An enumeration would exceed its configured budget.
class ResourceError : public Error {
 public:
  using Error::Error;
};

// A mathematical assertion failed at runtime (inexact division, lost
// integrality, identity mismatch). Exit code 1.
class MathError : public Error {
 public:
  using Error::Error;
};

// A numeric product or series was detected to diverge or not converge within
// the iteration cap.
class ConvergenceError : public MathError {
 public:
  using MathError::MathError;
};

}  // namespace wittkit
