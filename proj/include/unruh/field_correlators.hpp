#pragma once

#include <functional>
#include <optional>
#include <vector>

#include "unruh/kinematics.hpp"
#include "unruh/spectra.hpp"

namespace unruh {

/// Box-quantised modes, log-uniform in omega: x = log(omega c / a) is sampled at
/// the midpoints of n_modes equal cells on [log(omega_min c/a), log(omega_max c/a)],
/// once for each propagation direction.
///
/// window_width (units of a/c) is the frequency resolution used to read the
/// delta-function weight off the finite mode sum.
struct ModeGrid {
  double omega_min;
  double omega_max;
  int n_modes;
  double volume;
  double window_width = 0.5;

  /// Grid spanning x in [x_min, x_max] for the given worldline.
  static ModeGrid from_log_range(double x_min, double x_max, int n_modes, double volume,
                                 const AcceleratedWorldline& w);

  void validate() const;

  double x_min(const AcceleratedWorldline& w) const;
  double x_max(const AcceleratedWorldline& w) const;
  double x_range(const AcceleratedWorldline& w) const { return x_max(w) - x_min(w); }
  double spacing(const AcceleratedWorldline& w) const { return x_range(w) / n_modes; }
};

/// Default grid: x in [-8, 8], 4096 modes per direction, unit volume.
ModeGrid default_mode_grid(const AcceleratedWorldline& w);

enum class DensityKind { thermal, accelerated_vacuum };

struct SpectralDensity {
  std::vector<double> grid;
  std::vector<double> values;
  DensityKind kind;
  Statistics statistics;
};

/// (2 hbar c / Omega) / (e^{hbar Omega / k T} - 1); FD swaps -1 for +1.
double thermal_density(double omega, double temperature, const PhysicalConstants& consts,
                       Statistics stats = Statistics::bose_einstein);

/// BE: (2 hbar c / Omega) / (e^{2 pi Omega c / a} - 1).
/// FD: (2 hbar c / omega_K) / (e^{2 pi Omega c / a} + 1); omega_K defaults to Omega.
double accelerated_vacuum_density(double omega, const AcceleratedWorldline& w, Statistics stats,
                                  std::optional<double> omega_k = std::nullopt);

/// Finite sum over both directions of (1/omega_K) (omega_K c/a)^{i eps_K Delta c/a},
/// each mode weighted by its share (V / 2 pi c) dx of the continuum measure.
Complex delta_kernel(double delta_omega, const AcceleratedWorldline& w, const ModeGrid& grid);

/// int dDelta delta_kernel(Delta) f(Delta) over |Delta| <= half_width, by
/// adaptive quadrature. Tends to (2 V a / c^2) f(0) as the grid fills in.
double kernel_moment(const std::function<double(double)>& f, double half_width,
                     const AcceleratedWorldline& w, const ModeGrid& grid,
                     double rel_tol = 1e-10);

/// Delta-function weight of the finite mode sum, measured against a unit
/// Gaussian window of width grid.window_width; converges to 2 V a / c^2.
double kernel_delta_weight(const AcceleratedWorldline& w, const ModeGrid& grid,
                           double rel_tol = 1e-10);

/// Accelerated-vacuum density assembled mode by mode: the per-mode tau
/// integrals give (c / 2 pi a)^2 (2 pi hbar c^2 / V) |Gamma(nu)|^2 e^{-pi Omega c/a},
/// times the delta weight of the finite mode sum. Each mode contributes
/// <a_K a_K^dag> = 1, which is all that survives of the (anti)commutator
/// algebra. For FD the omega_K^{-1} left in the per-mode amplitude is replaced
/// by Omega^{-1}. Throws NumericError when the grid cannot resolve the weight.
double accelerated_density_from_modes(double omega, const AcceleratedWorldline& w,
                                      const ModeGrid& grid, Statistics stats,
                                      const RegularizationConfig& reg = {});

SpectralDensity tabulate_thermal(const std::vector<double>& omegas, double temperature,
                                 const PhysicalConstants& consts,
                                 Statistics stats = Statistics::bose_einstein);

SpectralDensity tabulate_accelerated(const std::vector<double>& omegas,
                                     const AcceleratedWorldline& w, Statistics stats);

}  // namespace unruh
