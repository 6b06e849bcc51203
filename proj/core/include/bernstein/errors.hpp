#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace bernstein {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
  /// Short machine-readable category, e.g. "domain" or "capacity".
  virtual const char* kind() const noexcept = 0;
};

/// An argument lies outside the mathematical domain of the operation.
class DomainError : public Error {
 public:
  using Error::Error;
  const char* kind() const noexcept override { return "domain"; }
};

/// Exact arithmetic would exceed a configured size budget; use float mode.
class CapacityError : public Error {
 public:
  using Error::Error;
  const char* kind() const noexcept override { return "capacity"; }
};

/// One-sided limits were requested from a function that has none.
class NotRegulatedError : public Error {
 public:
  using Error::Error;
  const char* kind() const noexcept override { return "not-regulated"; }
};

/// Constructor arguments violate a type invariant.
class ConstructionError : public Error {
 public:
  using Error::Error;
  const char* kind() const noexcept override { return "construction"; }
};

/// A certified bound was violated. Indicates a bug, never bad input.
class ConsistencyError : public Error {
 public:
  using Error::Error;
  const char* kind() const noexcept override { return "consistency"; }
};

/// Malformed text input (rationals, JSON documents, schedules).
class ParseError : public Error {
 public:
  using Error::Error;
  const char* kind() const noexcept override { return "parse"; }
};

/// Exact variation needs every turning point as a rational node.
class NeedsBreakpointsError : public Error {
 public:
  using Error::Error;
  const char* kind() const noexcept override { return "needs-breakpoints"; }
};

/// A finite-sample procedure could not reach a verdict.
class InconclusiveError : public Error {
 public:
  InconclusiveError(const std::string& what, std::vector<std::size_t> best_effort = {})
      : Error(what), best_effort_(std::move(best_effort)) {}
  const char* kind() const noexcept override { return "inconclusive"; }
  const std::vector<std::size_t>& best_effort() const noexcept { return best_effort_; }

 private:
  std::vector<std::size_t> best_effort_;
};

}  // namespace bernstein
