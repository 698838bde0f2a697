#pragma once

#include <Eigen/Dense>

#include "unruh/kinematics.hpp"

namespace unruh {

using DiracMatrix = Eigen::Matrix4cd;
using Bispinor = Eigen::Vector4cd;

// Dirac basis: gamma^0 = diag(1, 1, -1, -1); gamma^3 has sigma_z in the upper
// right block and -sigma_z in the lower left.
DiracMatrix gamma0();
DiracMatrix gamma3();

/// Spin up along z, [1, 0, 1, 0]^T (unnormalised).
Bispinor spin_up();

/// S(tau) = exp(gamma^0 gamma^3 a tau / 2c) = cosh(a tau/2c) I + gamma^0 gamma^3 sinh(a tau/2c).
DiracMatrix boost_matrix(double tau, const AcceleratedWorldline& w);

Bispinor apply_boost(const Bispinor& s, double tau, const AcceleratedWorldline& w);

/// e^{+-a tau / 2c} for an eigenvector of gamma^0 gamma^3 with eigenvalue +-1.
/// Throws DomainError (reporting the residual) for anything else.
double spinor_scale_factor(const Bispinor& s, double tau, const AcceleratedWorldline& w);

}  // namespace unruh
