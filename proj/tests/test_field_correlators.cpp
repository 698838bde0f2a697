#include <doctest.h>

#include <numbers>
#include <random>

#include "test_support.hpp"
#include "unruh/errors.hpp"
#include "unruh/field_correlators.hpp"

using namespace unruh;
using unruh::test::rel_err;

namespace {

const auto natural = PhysicalConstants::natural();
const auto si = PhysicalConstants::codata2018();
const AcceleratedWorldline unit(1.0, natural);
constexpr double pi = std::numbers::pi;

// Midpoint sum of 2 cos(x_j q) over n cells of width h centred on x_mid:
// 2 cos(q x_mid) sin(n q h / 2) / sin(q h / 2).
double dirichlet_closed_form(double delta, const ModeGrid& g, const AcceleratedWorldline& w) {
  const double q = delta * w.time_scale();
  const double h = g.spacing(w);
  const double mid = 0.5 * (g.x_min(w) + g.x_max(w));
  const double measure = g.volume / (2.0 * pi * w.constants().c) * h;
  const double ratio = std::abs(q * h) < 1e-300
                           ? g.n_modes
                           : std::sin(g.n_modes * q * h / 2.0) / std::sin(q * h / 2.0);
  return measure * 2.0 * std::cos(q * mid) * ratio;
}

}  // namespace

TEST_CASE("thermal density values") {
  CHECK(rel_err(thermal_density(1.0, 1.0, natural), 2.0 * 0.58197670686932642) < 1e-15);
  CHECK(rel_err(thermal_density(2.0 * pi, 1.0, natural), 1.0 / (std::exp(2.0 * pi) - 1.0) / pi) <
        1e-14);
  CHECK(rel_err(thermal_density(1.0, 1.0, natural, Statistics::fermi_dirac),
                2.0 / (std::exp(1.0) + 1.0)) < 1e-15);
  CHECK_THROWS_AS(thermal_density(0.0, 1.0, natural), DomainError);
  CHECK_THROWS_AS(thermal_density(1.0, -1.0, natural), DomainError);
}

TEST_CASE("thermal density Rayleigh-Jeans limit") {
  // hbar Omega << k T: S -> 2 c k T / Omega^2.
  const double t = 300.0;
  const double omega = 1e-6 * si.k_boltzmann * t / si.hbar;
  const double rj = 2.0 * si.c * si.k_boltzmann * t / (omega * omega);
  CHECK(rel_err(thermal_density(omega, t, si), rj) < 1e-6);
}

TEST_CASE("accelerated density reference values") {
  CHECK(rel_err(accelerated_vacuum_density(1.0, unit, Statistics::bose_einstein),
                0.0037418731973212882) < 1e-14);
  CHECK(rel_err(accelerated_vacuum_density(1.0, unit, Statistics::fermi_dirac),
                0.0037279237792500557) < 1e-14);
  CHECK(rel_err(accelerated_vacuum_density(1.0, unit, Statistics::fermi_dirac, 2.0),
                0.0037279237792500557 / 2.0) < 1e-14);
  CHECK_THROWS_AS(accelerated_vacuum_density(0.0, unit, Statistics::bose_einstein), DomainError);
  CHECK_THROWS_AS(accelerated_vacuum_density(1.0, unit, Statistics::fermi_dirac, -1.0),
                  DomainError);
}

TEST_CASE("accelerated vacuum is thermal at the Unruh temperature") {
  for (auto stats : {Statistics::bose_einstein, Statistics::fermi_dirac}) {
    for (double accel : {9.80665, 2.5e20}) {
      const AcceleratedWorldline w(accel, si);
      const double t = unruh_temperature(accel, si);
      double worst = 0.0;
      for (int i = 0; i < 50; ++i) {
        const double omega_t = 1e-2 * std::pow(200.0, i / 49.0);
        const double omega = omega_t / w.time_scale();
        worst = std::max(worst, rel_err(accelerated_vacuum_density(omega, w, stats),
                                        thermal_density(omega, t, si, stats)));
      }
      CHECK(worst <= 1e-14);
    }
  }
}

TEST_CASE("densities are positive and decreasing") {
  double prev = INFINITY;
  for (double omega = 0.01; omega < 20.0; omega *= 1.3) {
    const double s = accelerated_vacuum_density(omega, unit, Statistics::bose_einstein);
    CHECK(s > 0.0);
    CHECK(s < prev);
    prev = s;
  }
}

TEST_CASE("tabulation matches pointwise evaluation") {
  const std::vector<double> omegas{0.5, 1.0, 2.0};
  const auto thermal = tabulate_thermal(omegas, 1.0 / (2.0 * pi), natural);
  const auto accel = tabulate_accelerated(omegas, unit, Statistics::bose_einstein);
  CHECK(thermal.kind == DensityKind::thermal);
  CHECK(accel.kind == DensityKind::accelerated_vacuum);
  REQUIRE(thermal.values.size() == 3);
  for (std::size_t i = 0; i < omegas.size(); ++i) {
    CHECK(accel.values[i] == accelerated_vacuum_density(omegas[i], unit, Statistics::bose_einstein));
    CHECK(rel_err(thermal.values[i], accel.values[i]) < 1e-14);
  }
}

TEST_CASE("mode grid construction") {
  const auto g = default_mode_grid(unit);
  CHECK(g.n_modes == 4096);
  CHECK(rel_err(g.x_min(unit), -8.0) < 1e-14);
  CHECK(rel_err(g.x_max(unit), 8.0) < 1e-14);
  CHECK(rel_err(g.x_range(unit), 16.0) < 1e-14);
  CHECK_THROWS_AS(ModeGrid::from_log_range(1.0, -1.0, 10, 1.0, unit), DomainError);
  CHECK_THROWS_AS(ModeGrid::from_log_range(-1.0, 1.0, 1, 1.0, unit), DomainError);
  CHECK_THROWS_AS(ModeGrid::from_log_range(-1.0, 1.0, 10, 0.0, unit), DomainError);
}

TEST_CASE("delta kernel at zero and its symmetry") {
  const auto g = default_mode_grid(unit);
  CHECK(rel_err(delta_kernel(0.0, unit, g).real(), g.volume / pi * g.x_range(unit)) < 1e-10);
  std::mt19937_64 rng(5);
  std::uniform_real_distribution<double> d(-30.0, 30.0);
  for (int i = 0; i < 50; ++i) {
    const double delta = d(rng);
    const Complex k = delta_kernel(delta, unit, g);
    CHECK(std::abs(k.imag()) <= 1e-10 * (1.0 + std::abs(k.real())));
    CHECK(std::abs(k - std::conj(delta_kernel(-delta, unit, g))) <= 1e-9);
  }
}

TEST_CASE("delta kernel equals the closed-form Dirichlet sum") {
  for (const auto& g : {default_mode_grid(unit), ModeGrid::from_log_range(-3.0, 5.0, 300, 2.0, unit)}) {
    for (double delta : {-7.3, -0.4, 0.013, 1.0, 2.9, 11.0}) {
      const double want = dirichlet_closed_form(delta, g, unit);
      CHECK(std::abs(delta_kernel(delta, unit, g).real() - want) <=
            1e-9 * delta_kernel(0.0, unit, g).real());
    }
  }
}

TEST_CASE("delta kernel acts as a delta function on test functions") {
  const auto g = default_mode_grid(unit);
  const double weight = 2.0 * g.volume;  // 2 V a / c^2 with a = c = 1
  SUBCASE("gaussian") {
    auto f = [](double d) { return std::exp(-0.5 * d * d); };
    CHECK(rel_err(kernel_moment(f, 12.0, unit, g), weight) < 0.02);
  }
  SUBCASE("lorentzian") {
    auto f = [](double d) { return 1.0 / (1.0 + d * d); };
    CHECK(rel_err(kernel_moment(f, 400.0, unit, g, 1e-8), weight) < 0.02);
  }
  SUBCASE("compact bump") {
    auto f = [](double d) {
      const double r = d / 4.0;
      return std::abs(r) < 1.0 ? std::exp(1.0 - 1.0 / (1.0 - r * r)) : 0.0;
    };
    CHECK(rel_err(kernel_moment(f, 4.0, unit, g), weight) < 0.02);
  }
}

TEST_CASE("delta weight converges as the grid widens") {
  double prev = INFINITY;
  for (double range : {8.0, 12.0, 16.0}) {
    const int n = static_cast<int>(256 * range);
    const auto g = ModeGrid::from_log_range(-range / 2.0, range / 2.0, n, 1.0, unit);
    const double err = std::abs(kernel_delta_weight(unit, g) - 2.0);
    CAPTURE(range);
    CHECK(err < prev);
    prev = err;
  }
  CHECK(prev < 1e-3);
}

TEST_CASE("delta weight scales with volume and acceleration") {
  for (double a : {0.5, 3.0}) {
    const AcceleratedWorldline w(a, natural);
    const auto g = ModeGrid::from_log_range(-8.0, 8.0, 4096, 2.5, w);
    CHECK(rel_err(kernel_delta_weight(w, g), 2.0 * 2.5 * a) < 1e-3);
  }
}

TEST_CASE("coarse or narrow grids are rejected") {
  CHECK_THROWS_AS(kernel_delta_weight(unit, ModeGrid::from_log_range(-8.0, 8.0, 16, 1.0, unit)),
                  NumericError);
  CHECK_THROWS_AS(kernel_delta_weight(unit, ModeGrid::from_log_range(-1.0, 1.0, 512, 1.0, unit)),
                  NumericError);
}

TEST_CASE("mode-sum density matches the closed form") {
  const auto g = default_mode_grid(unit);
  for (auto stats : {Statistics::bose_einstein, Statistics::fermi_dirac}) {
    for (double omega : {0.5, 1.0, 2.0}) {
      CAPTURE(omega);
      CHECK(rel_err(accelerated_density_from_modes(omega, unit, g, stats),
                    accelerated_vacuum_density(omega, unit, stats)) < 0.01);
    }
  }
  // Dimensionful check: a = g on Earth, SI units.
  const AcceleratedWorldline earth(9.80665, si);
  const auto ge = default_mode_grid(earth);
  const double omega = 1.0 / earth.time_scale();
  CHECK(rel_err(accelerated_density_from_modes(omega, earth, ge, Statistics::bose_einstein),
                accelerated_vacuum_density(omega, earth, Statistics::bose_einstein)) < 0.01);
  CHECK_THROWS_AS(accelerated_density_from_modes(1e5, unit, g, Statistics::bose_einstein),
                  DomainError);
}
