#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace onestep {

/// A mathematically invalid request (degenerate lattice, violated stability
/// guard, non-distribution input, ...). Distinct from bad user syntax.
class DomainError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Scheme source text that does not conform to the grammar or violates a
/// scheme invariant. Carries the 1-based source location.
class ParseError : public std::runtime_error {
 public:
  ParseError(std::string message, std::size_t line, std::size_t column)
      : std::runtime_error("line " + std::to_string(line) + ", column " +
                           std::to_string(column) + ": " + message),
        line_(line),
        column_(column) {}

  std::size_t line() const { return line_; }
  std::size_t column() const { return column_; }

 private:
  std::size_t line_;
  std::size_t column_;
};

/// Raised when a diffusion matrix has an eigenvalue below -1e-10: the
/// drift/diffusion pair admits no real noise factor at that state.
class NotPositiveSemidefinite : public DomainError {
 public:
  NotPositiveSemidefinite(double min_eigenvalue, std::string message)
      : DomainError(std::move(message)), min_eigenvalue_(min_eigenvalue) {}

  explicit NotPositiveSemidefinite(double min_eigenvalue)
      : NotPositiveSemidefinite(min_eigenvalue,
                                "diffusion matrix is not positive semidefinite (min eigenvalue " +
                                    std::to_string(min_eigenvalue) + ")") {}

  double min_eigenvalue() const { return min_eigenvalue_; }

  /// Filled in by the integrator under the strict policy: the state and time
  /// at which the factorization failed.
  void attach_state(std::vector<double> state, double time) {
    state_ = std::move(state);
    time_ = time;
    has_state_ = true;
  }
  bool has_state() const { return has_state_; }
  const std::vector<double>& state() const { return state_; }
  double time() const { return time_; }

 private:
  double min_eigenvalue_;
  std::vector<double> state_;
  double time_ = 0.0;
  bool has_state_ = false;
};

}  // namespace onestep
