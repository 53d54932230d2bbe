#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace pdm {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Argument outside the mathematical domain of an operation (poles, |z| >= pi/2, ...).
class DomainError : public Error {
 public:
  using Error::Error;
};

/// Caller broke a documented precondition or a type invariant.
class PreconditionError : public Error {
 public:
  using Error::Error;
};

/// Series, root search or quadrature did not reach the requested tolerance.
class ConvergenceError : public Error {
 public:
  ConvergenceError(const std::string& what, std::size_t terms_used, double last_term)
      : Error(what + " (terms used: " + std::to_string(terms_used) +
              ", last term magnitude: " + std::to_string(last_term) + ")"),
        terms_used_(terms_used),
        last_term_(last_term) {}

  explicit ConvergenceError(const std::string& what) : Error(what) {}

  std::size_t terms_used() const noexcept { return terms_used_; }
  double last_term() const noexcept { return last_term_; }

 private:
  std::size_t terms_used_ = 0;
  double last_term_ = 0.0;
};

}  // namespace pdm
