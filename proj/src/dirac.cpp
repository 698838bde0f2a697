#include "unruh/dirac.hpp"

#include <cmath>
#include <sstream>

#include "unruh/errors.hpp"

namespace unruh {

namespace {
constexpr double eigen_residual_tol = 1e-10;
}

DiracMatrix gamma0() {
  DiracMatrix g = DiracMatrix::Zero();
  g.diagonal() << 1.0, 1.0, -1.0, -1.0;
  return g;
}

DiracMatrix gamma3() {
  DiracMatrix g = DiracMatrix::Zero();
  g(0, 2) = 1.0;
  g(1, 3) = -1.0;
  g(2, 0) = -1.0;
  g(3, 1) = 1.0;
  return g;
}

Bispinor spin_up() {
  Bispinor s;
  s << 1.0, 0.0, 1.0, 0.0;
  return s;
}

DiracMatrix boost_matrix(double tau, const AcceleratedWorldline& w) {
  const double half_rapidity = tau / (2.0 * w.time_scale());
  return std::cosh(half_rapidity) * DiracMatrix::Identity() +
         std::sinh(half_rapidity) * (gamma0() * gamma3());
}

Bispinor apply_boost(const Bispinor& s, double tau, const AcceleratedWorldline& w) {
  return boost_matrix(tau, w) * s;
}

double spinor_scale_factor(const Bispinor& s, double tau, const AcceleratedWorldline& w) {
  const double norm = s.norm();
  if (!(norm > 0.0)) throw DomainError("spinor_scale_factor: zero bispinor");
  const Bispinor image = gamma0() * gamma3() * s;
  const double plus = (image - s).norm() / norm;
  const double minus = (image + s).norm() / norm;
  const double half_rapidity = tau / (2.0 * w.time_scale());
  if (plus < eigen_residual_tol) return std::exp(half_rapidity);
  if (minus < eigen_residual_tol) return std::exp(-half_rapidity);
  std::ostringstream msg;
  msg << "spinor_scale_factor: not an eigenvector of gamma0 gamma3 (residual "
      << std::min(plus, minus) << ")";
  throw DomainError(msg.str());
}

}  // namespace unruh
