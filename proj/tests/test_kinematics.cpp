#include <doctest.h>

#include <random>

#include "test_support.hpp"
#include "unruh/errors.hpp"
#include "unruh/kinematics.hpp"

using namespace unruh;
using unruh::test::rel_err;

namespace {
const AcceleratedWorldline unit(1.0, PhysicalConstants::natural());
const AcceleratedWorldline earth(9.80665, PhysicalConstants::codata2018());
}  // namespace

TEST_CASE("worldline and mode construction") {
  CHECK_THROWS_AS(AcceleratedWorldline(0.0, PhysicalConstants::natural()), DomainError);
  CHECK_THROWS_AS(AcceleratedWorldline(-2.0, PhysicalConstants::natural()), DomainError);
  CHECK_THROWS_AS(PlaneWaveMode(0.0, Direction::plus_z), DomainError);
  CHECK_THROWS_AS(PlaneWaveMode(1.0, static_cast<Direction>(0)), DomainError);
  const PlaneWaveMode m(3.0, Direction::minus_z);
  CHECK(m.epsilon() == -1);
  CHECK(m.wavenumber(PhysicalConstants::natural()) == -3.0);
}

TEST_CASE("lab velocity of lab time") {
  CHECK(lab_velocity_of_lab_time(0.0, unit) == 0.0);
  CHECK(rel_err(lab_velocity_of_lab_time(1.0, unit), 0.70710678118654752) < 1e-15);
  CHECK(lab_velocity_of_lab_time(10.0, unit) > 0.995);
  CHECK(rel_err(lab_velocity_of_lab_time(10.0, unit), 0.99503719020998914) < 1e-15);
  double prev = 0.0;
  for (double t = 0.5; t < 1e6; t *= 2.0) {
    const double v = lab_velocity_of_lab_time(t, unit);
    CHECK(v > prev);
    CHECK(v < 1.0);
    CHECK(lab_velocity_of_lab_time(-t, unit) == -v);
    prev = v;
  }
}

TEST_CASE("lab velocity of proper time") {
  CHECK(lab_velocity_of_proper_time(0.0, unit) == 0.0);
  CHECK(rel_err(lab_velocity_of_proper_time(1.0, unit), 0.76159415595576489) < 1e-15);
  for (double u = -4.0; u <= 4.0; u += 0.25) {
    const double tau = u * earth.time_scale();
    const double t = worldline_point(tau, earth).t;
    const double v1 = lab_velocity_of_lab_time(t, earth);
    const double v2 = lab_velocity_of_proper_time(tau, earth);
    CHECK(std::abs(v1 - v2) <= 1e-12 * earth.constants().c);
  }
}

TEST_CASE("lab acceleration obeys the Lorentz-transformed law") {
  // dv/dt = a (1 - v^2/c^2)^{3/2}, by central differences.
  for (double t : {-2.0, -0.3, 0.0, 0.7, 3.0}) {
    const double h = 1e-5;
    const double dvdt =
        (lab_velocity_of_lab_time(t + h, unit) - lab_velocity_of_lab_time(t - h, unit)) / (2 * h);
    const double v = lab_velocity_of_lab_time(t, unit);
    CHECK(rel_err(dvdt, std::pow(1.0 - v * v, 1.5)) < 1e-8);
  }
}

TEST_CASE("worldline point") {
  const auto p0 = worldline_point(0.0, unit);
  CHECK(p0.t == 0.0);
  CHECK(p0.z == 1.0);
  const auto p1 = worldline_point(1.0, unit);
  CHECK(rel_err(p1.t, 1.1752011936438015) < 1e-15);
  CHECK(rel_err(p1.z, 1.5430806348152437) < 1e-15);

  const auto& k = earth.constants();
  const double c4_a2 = std::pow(k.c, 4) / (earth.accel() * earth.accel());
  for (double u = -10.0; u <= 10.0; u += 0.5) {
    const auto p = worldline_point(u * earth.time_scale(), earth);
    // The invariant is a difference of two large squares; judge it on the scale of z^2.
    CHECK(std::abs(p.z * p.z - k.c * k.c * p.t * p.t - c4_a2) < 1e-14 * p.z * p.z);
    CHECK(p.z > k.c * std::abs(p.t));
  }
}

TEST_CASE("doppler frequency") {
  const PlaneWaveMode plus(2.0, Direction::plus_z);
  const PlaneWaveMode minus(2.0, Direction::minus_z);
  CHECK(doppler_frequency(0.0, plus, unit) == 2.0);
  CHECK(doppler_frequency(0.0, minus, unit) == 2.0);
  CHECK(rel_err(doppler_frequency(1.0, plus, unit), 2.0 * 0.36787944117144232) < 1e-15);
  // First-order Doppler shift: slope at tau = 0 is -eps omega a / c.
  const double h = 1e-6;
  for (const auto& m : {plus, minus}) {
    const double slope = (doppler_frequency(h, m, unit) - doppler_frequency(-h, m, unit)) / (2 * h);
    CHECK(rel_err(slope, -m.epsilon() * m.omega()) < 1e-9);
  }
}

TEST_CASE("doppler frequency matches the Lorentz transformation") {
  // omega' = (omega - K v) / sqrt(1 - v^2/c^2)
  for (const auto dir : {Direction::plus_z, Direction::minus_z}) {
    const PlaneWaveMode m(1.5, dir);
    for (double u = -3.0; u <= 3.0; u += 0.5) {
      const double v = lab_velocity_of_proper_time(u, unit);
      const double boosted = (m.omega() - m.wavenumber(unit.constants()) * v) / std::sqrt(1 - v * v);
      CHECK(rel_err(doppler_frequency(u, m, unit), boosted) < 1e-12);
    }
  }
}

TEST_CASE("doppler phase") {
  const PlaneWaveMode plus(1.0, Direction::plus_z);
  const PlaneWaveMode minus(1.0, Direction::minus_z);
  CHECK(doppler_phase(0.0, minus, unit) == 1.0);
  CHECK(doppler_phase(0.0, plus, unit) == -1.0);
  CHECK(rel_err(doppler_phase(1.0, minus, unit), 2.7182818284590452) < 1e-15);

  // dphi/dtau = omega'(tau) on a tau / (c/a) in [-3, 3].
  for (const auto& m : {plus, minus}) {
    for (double u = -3.0; u <= 3.0; u += 0.25) {
      const double h = 1e-5;
      const double d = (doppler_phase(u + h, m, unit) - doppler_phase(u - h, m, unit)) / (2 * h);
      CHECK(rel_err(d, doppler_frequency(u, m, unit)) < 1e-6);
    }
  }
}

TEST_CASE("doppler phase is the plane-wave phase on the worldline") {
  const auto& k = earth.constants();
  for (const auto dir : {Direction::plus_z, Direction::minus_z}) {
    const PlaneWaveMode m(2.0e3, dir);
    for (double u = -2.0; u <= 2.0; u += 0.5) {
      const double tau = u * earth.time_scale();
      const auto p = worldline_point(tau, earth);
      const double plane = m.omega() * p.t - m.wavenumber(k) * p.z;
      CHECK(rel_err(doppler_phase(tau, m, earth), plane) < 1e-9);
    }
  }
}

TEST_CASE("kinematic invariants on random samples") {
  std::mt19937_64 rng(20240611);
  std::uniform_real_distribution<double> accel_dist(-3.0, 13.0);
  std::uniform_real_distribution<double> u_dist(-20.0, 20.0);
  std::uniform_real_distribution<double> omega_dist(-2.0, 6.0);
  const auto si = PhysicalConstants::codata2018();
  for (int i = 0; i < 500; ++i) {
    const AcceleratedWorldline w(std::pow(10.0, accel_dist(rng)), si);
    const double tau1 = u_dist(rng) * w.time_scale();
    const double tau2 = u_dist(rng) * w.time_scale() / 4.0;
    const PlaneWaveMode m(std::pow(10.0, omega_dist(rng)), i % 2 ? Direction::plus_z : Direction::minus_z);

    CHECK(std::abs(lab_velocity_of_proper_time(tau1, w)) <= si.c);
    // Beyond |u| ~ 18 the gap z - c|t| drops below one ulp of z.
    const auto p = worldline_point(tau1 * 0.75, w);
    CHECK(p.z > si.c * std::abs(p.t));

    const double composed = doppler_frequency(tau1, m, w) * std::exp(-m.epsilon() * tau2 / w.time_scale());
    CHECK(rel_err(doppler_frequency(tau1 + tau2, m, w), composed) < 1e-12);

    const PlaneWaveMode flipped(m.omega(), m.epsilon() > 0 ? Direction::minus_z : Direction::plus_z);
    CHECK(std::abs(doppler_phase(tau1, m, w)) == std::abs(doppler_phase(-tau1, flipped, w)));
  }
}
