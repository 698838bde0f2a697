#pragma once

#include "unruh/units.hpp"

namespace unruh {

/// Hyperbolic worldline of an observer with constant proper acceleration a > 0
/// along +z, passing through the vertex z = c^2/a at t = tau = 0.
class AcceleratedWorldline {
public:
  AcceleratedWorldline(double accel, PhysicalConstants consts);

  double accel() const { return accel_; }
  const PhysicalConstants& constants() const { return consts_; }

  /// c / a, the natural time scale of the worldline.
  double time_scale() const { return consts_.c / accel_; }

private:
  double accel_;
  PhysicalConstants consts_;
};

enum class Direction : int { plus_z = +1, minus_z = -1 };

inline int sign(Direction d) { return static_cast<int>(d); }

/// Minkowski plane wave with angular frequency omega > 0 travelling along +z or -z.
class PlaneWaveMode {
public:
  PlaneWaveMode(double omega, Direction direction);

  double omega() const { return omega_; }
  Direction direction() const { return direction_; }
  int epsilon() const { return sign(direction_); }
  double wavenumber(const PhysicalConstants& consts) const { return epsilon() * omega_ / consts.c; }

private:
  double omega_;
  Direction direction_;
};

struct SpacetimePoint {
  double t;
  double z;
};

/// v(t) = a t / sqrt(1 + a^2 t^2 / c^2).
double lab_velocity_of_lab_time(double t, const AcceleratedWorldline& w);

/// v(tau) = c tanh(a tau / c).
double lab_velocity_of_proper_time(double tau, const AcceleratedWorldline& w);

/// (t, z) = ((c/a) sinh(a tau/c), (c^2/a) cosh(a tau/c)).
SpacetimePoint worldline_point(double tau, const AcceleratedWorldline& w);

/// Instantaneous rest-frame frequency omega_K exp(-eps_K a tau / c).
double doppler_frequency(double tau, const PlaneWaveMode& mode, const AcceleratedWorldline& w);

/// Accumulated phase phi(tau) = -eps_K (omega_K c/a) exp(-eps_K a tau / c).
///
/// This is the antiderivative of doppler_frequency, so dphi/dtau = omega'(tau).
/// It equals omega_K t(tau) - K z(tau) on the worldline, the phase of the
/// e^{+i omega t} (creation) part of the mode. Flipping the overall
/// sign is not harmless: with e^{i Omega tau} fixed, the conjugate phase for
/// eps_K = +1 yields the emission-side spectrum instead of the Planck one.
double doppler_phase(double tau, const PlaneWaveMode& mode, const AcceleratedWorldline& w);

}  // namespace unruh
