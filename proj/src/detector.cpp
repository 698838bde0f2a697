#include "unruh/detector.hpp"

#include <array>
#include <cmath>
#include <numbers>

#include "unruh/errors.hpp"
#include "unruh/numerics.hpp"

namespace unruh {

namespace {

constexpr double band_rel_tol = 1e-12;

// Panels in the scaled variable t = (Omega - omega0) / gamma.
std::vector<double> band_panels() {
  const double L = detector_band_halfwidths;
  return {-L, -10.0, -3.0, -1.0, 0.0, 1.0, 3.0, 10.0, L};
}

}  // namespace

void DetectorParams::validate() const {
  if (!std::isfinite(omega0) || omega0 <= 0.0) throw DomainError("omega0 must be positive");
  if (!std::isfinite(gamma) || gamma <= 0.0) throw DomainError("gamma must be positive");
  if (!(gamma < omega0 / 5.0)) throw DomainError("gamma must be below omega0 / 5");
}

DensitySource thermal_source(double temperature, const PhysicalConstants& consts) {
  return {"thermal", DensityKind::thermal, [=](double omega) {
            return thermal_density(omega, temperature, consts);
          }};
}

DensitySource accelerated_source(const AcceleratedWorldline& w, Statistics stats) {
  return {"accelerated", DensityKind::accelerated_vacuum, [=](double omega) {
            return accelerated_vacuum_density(omega, w, stats);
          }};
}

double occupation_from_density(double omega, double density, const PhysicalConstants& consts) {
  return omega * density / (2.0 * consts.hbar * consts.c);
}

double lorentzian_band_mass(const DetectorParams& p) {
  p.validate();
  const double norm = 2.0 * std::atan(detector_band_halfwidths);
  auto weight = [=](double t) { return 1.0 / (norm * (1.0 + t * t)); };
  const auto panels = band_panels();
  return numerics::integrate_real(weight, panels, band_rel_tol).value.real();
}

double steady_state_energy(const DetectorParams& p, const DensitySource& source,
                           const PhysicalConstants& consts) {
  p.validate();
  if (p.omega0 - detector_band_halfwidths * p.gamma <= 0.0) {
    throw DomainError("detector band omega0 +- 30 gamma extends to non-positive frequency");
  }
  const double norm = 2.0 * std::atan(detector_band_halfwidths);
  auto integrand = [&](double t) {
    const double omega = p.omega0 + p.gamma * t;
    return occupation_from_density(omega, source.density(omega), consts) /
           (norm * (1.0 + t * t));
  };
  const auto panels = band_panels();
  return numerics::integrate_real(integrand, panels, band_rel_tol).value.real();
}

double narrowband_occupation(const DetectorParams& p, const DensitySource& source,
                             const PhysicalConstants& consts) {
  p.validate();
  std::array<double, 3> h{};
  std::array<double, 3> e{};
  for (std::size_t i = 0; i < h.size(); ++i) {
    const DetectorParams pi{p.omega0, p.gamma / static_cast<double>(1u << i)};
    h[i] = pi.gamma * pi.gamma;
    e[i] = steady_state_energy(pi, source, consts);
  }
  const double limit = numerics::extrapolate_to_zero<double>(h, e);
  double previous = std::abs(e[0] - limit);
  for (std::size_t i = 1; i < e.size(); ++i) {
    const double residual = std::abs(e[i] - limit);
    if (!(residual < previous)) {
      throw NumericError("narrowband extrapolation residuals are not monotone",
                         residual / std::abs(limit));
    }
    previous = residual;
  }
  return limit;
}

}  // namespace unruh
