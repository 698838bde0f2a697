#include "unruh/kinematics.hpp"

#include <cmath>

#include "unruh/errors.hpp"

namespace unruh {

AcceleratedWorldline::AcceleratedWorldline(double accel, PhysicalConstants consts)
    : accel_(accel), consts_(consts) {
  if (!std::isfinite(accel) || accel <= 0.0) {
    throw DomainError("proper acceleration must be finite and positive");
  }
  consts_.validate();
}

PlaneWaveMode::PlaneWaveMode(double omega, Direction direction)
    : omega_(omega), direction_(direction) {
  if (!std::isfinite(omega) || omega <= 0.0) {
    throw DomainError("mode frequency must be finite and positive");
  }
  if (direction != Direction::plus_z && direction != Direction::minus_z) {
    throw DomainError("mode direction must be +1 or -1");
  }
}

double lab_velocity_of_lab_time(double t, const AcceleratedWorldline& w) {
  const double at_c = w.accel() * t / w.constants().c;
  // hypot keeps the ratio well defined once a t / c is large.
  return w.constants().c * at_c / std::hypot(1.0, at_c);
}

double lab_velocity_of_proper_time(double tau, const AcceleratedWorldline& w) {
  return w.constants().c * std::tanh(tau / w.time_scale());
}

SpacetimePoint worldline_point(double tau, const AcceleratedWorldline& w) {
  const double u = tau / w.time_scale();
  const double c = w.constants().c;
  return {w.time_scale() * std::sinh(u), c * w.time_scale() * std::cosh(u)};
}

double doppler_frequency(double tau, const PlaneWaveMode& mode, const AcceleratedWorldline& w) {
  return mode.omega() * std::exp(-mode.epsilon() * tau / w.time_scale());
}

double doppler_phase(double tau, const PlaneWaveMode& mode, const AcceleratedWorldline& w) {
  const int eps = mode.epsilon();
  return -eps * mode.omega() * w.time_scale() * std::exp(-eps * tau / w.time_scale());
}

}  // namespace unruh
