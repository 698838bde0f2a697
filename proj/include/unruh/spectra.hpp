#pragma once

#include <optional>
#include <span>
#include <vector>

#include "unruh/kinematics.hpp"
#include "unruh/special_functions.hpp"

namespace unruh {

/// Bose-Einstein (scalar field) or Fermi-Dirac (spin-1/2 field) statistics.
enum class Statistics { bose_einstein, fermi_dirac };

const char* to_string(Statistics stats);

/// Regulator and quadrature settings for the numerical spectrum.
///
/// The integrand is damped by exp(-s |tau|) for every s in s_schedule and the
/// complex amplitude is extrapolated polynomially to s = 0 from the last
/// extrapolation_order + 1 entries. s is in units of a/c, tau_window in c/a.
struct RegularizationConfig {
  std::vector<double> s_schedule{0.04, 0.02, 0.01, 0.005};
  double tau_window = 40.0;
  double quad_rel_tol = 1e-10;
  int extrapolation_order = 3;
  /// Largest accepted relative change between the two highest-order extrapolants.
  double extrapolation_tol = 1e-2;

  void validate() const;
};

struct SpectrumPoint {
  double omega_rindler;
  double value;
  std::optional<Complex> amplitude;
};

/// Which frequency multiplies the Fermi-Dirac prefactor 2 pi c / (omega a).
/// `mode_frequency` is the printed form (omega_K); `rindler_frequency` applies
/// the replacement omega_K -> Omega.
enum class FdPrefactor { mode_frequency, rindler_frequency };

/// Closed form of the tau integral
///   int dtau e^{i Omega tau} [e^{-eps a tau/2c} for FD] e^{i phi(tau)},
/// (c/a) Gamma(nu) (-i w)^{-nu} with nu = i Omega c/a (+1/2 for FD), w = omega_K c/a,
/// for a -z wave; a +z wave gives the complex conjugate.
Complex analytic_amplitude(double omega, const PlaneWaveMode& mode,
                           const AcceleratedWorldline& w, Statistics stats);

/// BE: (2 pi c / Omega a) / (e^{2 pi Omega c/a} - 1)
/// FD: (2 pi c / omega_K a) / (e^{2 pi Omega c/a} + 1)
double analytic_spectrum(double omega, const PlaneWaveMode& mode, const AcceleratedWorldline& w,
                         Statistics stats, FdPrefactor prefactor = FdPrefactor::mode_frequency);

/// Spinor envelope multiplying the FD integrand, exp(-eps_K a tau / 2c).
/// For a -z wave this is the spin-up boost eigenvalue exp(a tau / 2c).
double fd_envelope(double tau, const PlaneWaveMode& mode, const AcceleratedWorldline& w);

struct NumericAmplitude {
  Complex amplitude;            // extrapolated to s = 0
  std::vector<Complex> samples; // one per s_schedule entry
  double extrapolation_change;  // relative change between the last two extrapolants
  double quadrature_error;      // largest absolute error estimate among the samples
};

/// Regularised tau integral at a single damping s (units a/c).
Complex regularized_amplitude(double omega, const PlaneWaveMode& mode,
                              const AcceleratedWorldline& w, Statistics stats, double s,
                              const RegularizationConfig& reg);

NumericAmplitude numeric_amplitude(double omega, const PlaneWaveMode& mode,
                                   const AcceleratedWorldline& w, Statistics stats,
                                   const RegularizationConfig& reg = {});

/// |amplitude|^2 of numeric_amplitude.
double numeric_spectrum(double omega, const PlaneWaveMode& mode, const AcceleratedWorldline& w,
                        Statistics stats, const RegularizationConfig& reg = {});

/// Unaccelerated observer: |int dtau e^{i(Omega + omega_K) tau} e^{-s|tau|}|^2 at one
/// damping s, measured in units of omega_K (as is reg.tau_window for this path).
double inertial_regularized_spectrum(double omega, const PlaneWaveMode& mode, double s,
                                     const RegularizationConfig& reg = {});

/// The same pipeline extrapolated to s = 0; vanishes for Omega > 0.
double inertial_spectrum(double omega, const PlaneWaveMode& mode,
                         const RegularizationConfig& reg = {});

/// 1/(e^x - 1) for BE (x > 0), 1/(e^x + 1) for FD.
double planck_factor(double x, Statistics stats);

struct SpectrumComparison {
  double omega;
  Statistics stats;
  double analytic;
  double numeric;
  double rel_err;
};

/// Analytic and numeric spectra over a frequency list. Points are evaluated
/// concurrently; each is independent, so results do not depend on scheduling.
std::vector<SpectrumComparison> compare_spectra(std::span<const double> omegas,
                                                const PlaneWaveMode& mode,
                                                const AcceleratedWorldline& w, Statistics stats,
                                                const RegularizationConfig& reg = {});

}  // namespace unruh
