#pragma once

#include <stdexcept>
#include <string>

namespace unruh {

/// Thrown when an argument lies outside the domain of an operation.
class DomainError : public std::domain_error {
public:
  using std::domain_error::domain_error;
};

/// Thrown when quadrature or extrapolation fails to reach its tolerance.
/// Carries the worst residual observed so callers can report it.
class NumericError : public std::runtime_error {
public:
  NumericError(const std::string& what, double worst_residual)
      : std::runtime_error(what), worst_residual_(worst_residual) {}

  double worst_residual() const noexcept { return worst_residual_; }

private:
  double worst_residual_;
};

}  // namespace unruh
