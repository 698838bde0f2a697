#pragma once

#include <functional>
#include <string>

#include "unruh/field_correlators.hpp"

namespace unruh {

/// Damped harmonic oscillator coupled to the field.
struct DetectorParams {
  double omega0;  // resonance
  double gamma;   // dissipation; the narrowband contract needs gamma < omega0 / 5

  void validate() const;
};

/// A spectral density S(Omega) the detector can be immersed in.
struct DensitySource {
  std::string name;
  DensityKind kind;
  std::function<double(double)> density;
};

DensitySource thermal_source(double temperature, const PhysicalConstants& consts);
DensitySource accelerated_source(const AcceleratedWorldline& w,
                                 Statistics stats = Statistics::bose_einstein);

/// Occupation implied by a density, n(Omega) = Omega S(Omega) / (2 hbar c).
double occupation_from_density(double omega, double density, const PhysicalConstants& consts);

/// Half-width of the integration band in units of gamma.
inline constexpr double detector_band_halfwidths = 30.0;

/// Integral of the band-normalised Lorentzian weight over the band; 1 up to quadrature error.
double lorentzian_band_mass(const DetectorParams& p);

/// Steady-state energy in units of hbar omega0: the occupation averaged with a
/// Lorentzian of half-width gamma centred on omega0, normalised over the band
/// omega0 +- 30 gamma. Throws DomainError if the band reaches Omega <= 0.
double steady_state_energy(const DetectorParams& p, const DensitySource& source,
                           const PhysicalConstants& consts);

/// gamma -> 0 limit of steady_state_energy, by Richardson extrapolation in
/// gamma^2 over {gamma, gamma/2, gamma/4}. Throws NumericError if the
/// residuals do not shrink along the schedule.
double narrowband_occupation(const DetectorParams& p, const DensitySource& source,
                             const PhysicalConstants& consts);

}  // namespace unruh
