#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace spinlat {

enum class ErrorKind {
  invalid_argument,
  parse,
  budget_exceeded,
  convergence_failure,
  numerical_validity,
  degenerate_gap,
  no_interior_extremum,
  underdetermined_fit,
  log_domain,
};

const char* to_string(ErrorKind kind);

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

/// Raised by the eigensolver when the iteration budget runs out. Carries the
/// best residual norms reached so far, one per requested eigenpair.
class ConvergenceFailure : public Error {
 public:
  ConvergenceFailure(const std::string& what, std::vector<double> residuals)
      : Error(ErrorKind::convergence_failure, what),
        residuals_(std::move(residuals)) {}

  const std::vector<double>& residuals() const noexcept { return residuals_; }

 private:
  std::vector<double> residuals_;
};

[[noreturn]] inline void fail(ErrorKind kind, const std::string& what) {
  throw Error(kind, what);
}

inline void require(bool condition, const std::string& what) {
  if (!condition) fail(ErrorKind::invalid_argument, what);
}

}  // namespace spinlat
