#include "unruh/field_correlators.hpp"

#include <cmath>
#include <numbers>
#include <sstream>

#include "unruh/errors.hpp"
#include "unruh/numerics.hpp"

namespace unruh {

namespace {

constexpr double pi = std::numbers::pi;

void require_positive(double value, const char* what) {
  if (!std::isfinite(value) || value <= 0.0) {
    throw DomainError(std::string(what) + " must be finite and positive");
  }
}

// Gaussian window truncated where it is below e^{-50} of its peak.
constexpr double window_half_width_sigmas = 10.0;

}  // namespace

ModeGrid ModeGrid::from_log_range(double x_min, double x_max, int n_modes, double volume,
                                  const AcceleratedWorldline& w) {
  const double rate = 1.0 / w.time_scale();  // a / c
  ModeGrid grid{rate * std::exp(x_min), rate * std::exp(x_max), n_modes, volume};
  grid.validate();
  return grid;
}

void ModeGrid::validate() const {
  require_positive(omega_min, "omega_min");
  require_positive(omega_max, "omega_max");
  if (!(omega_min < omega_max)) throw DomainError("omega_min must be below omega_max");
  if (n_modes < 2) throw DomainError("n_modes must be at least 2");
  require_positive(volume, "volume");
  require_positive(window_width, "window_width");
}

double ModeGrid::x_min(const AcceleratedWorldline& w) const {
  return std::log(omega_min * w.time_scale());
}

double ModeGrid::x_max(const AcceleratedWorldline& w) const {
  return std::log(omega_max * w.time_scale());
}

ModeGrid default_mode_grid(const AcceleratedWorldline& w) {
  return ModeGrid::from_log_range(-8.0, 8.0, 4096, 1.0, w);
}

double thermal_density(double omega, double temperature, const PhysicalConstants& consts,
                       Statistics stats) {
  require_positive(omega, "Omega");
  require_positive(temperature, "temperature");
  const double x = consts.hbar * omega / (consts.k_boltzmann * temperature);
  const double occupation =
      stats == Statistics::bose_einstein ? 1.0 / std::expm1(x) : 1.0 / (std::exp(x) + 1.0);
  return 2.0 * consts.hbar * consts.c / omega * occupation;
}

double accelerated_vacuum_density(double omega, const AcceleratedWorldline& w, Statistics stats,
                                  std::optional<double> omega_k) {
  require_positive(omega, "Omega");
  const auto& k = w.constants();
  const double x = 2.0 * pi * omega * w.time_scale();
  if (stats == Statistics::bose_einstein) {
    return 2.0 * k.hbar * k.c / omega / std::expm1(x);
  }
  const double freq = omega_k.value_or(omega);
  require_positive(freq, "omega_K");
  return 2.0 * k.hbar * k.c / freq / (std::exp(x) + 1.0);
}

Complex delta_kernel(double delta_omega, const AcceleratedWorldline& w, const ModeGrid& grid) {
  grid.validate();
  const double h = grid.spacing(w);
  const double x0 = grid.x_min(w) + 0.5 * h;
  const double q = delta_omega * w.time_scale();
  const double measure = grid.volume / (2.0 * pi * w.constants().c) * h;

  Complex total = 0.0;
  for (int eps : {+1, -1}) {
    // Successive modes differ by the fixed phasor e^{i eps h q}.
    const Complex step = std::polar(1.0, eps * h * q);
    Complex term = std::polar(1.0, eps * x0 * q);
    Complex sum = 0.0;
    for (int j = 0; j < grid.n_modes; ++j) {
      sum += term;
      term *= step;
    }
    total += sum;
  }
  return measure * total;
}

double kernel_moment(const std::function<double(double)>& f, double half_width,
                     const AcceleratedWorldline& w, const ModeGrid& grid, double rel_tol) {
  require_positive(half_width, "half_width");
  // Highest oscillation rate in Delta is |x| c / a at the grid edges.
  const double rate = std::max(std::abs(grid.x_min(w)), std::abs(grid.x_max(w))) * w.time_scale();
  const auto panels = numerics::oscillation_panels(
      -half_width, half_width, [=](double) { return rate; }, half_width);
  auto integrand = [&](double d) { return delta_kernel(d, w, grid).real() * f(d); };
  return numerics::integrate_real(integrand, panels, rel_tol).value.real();
}

double kernel_delta_weight(const AcceleratedWorldline& w, const ModeGrid& grid, double rel_tol) {
  grid.validate();
  const double sigma = grid.window_width / w.time_scale();
  const double half_width = window_half_width_sigmas * sigma;

  // Copies of the kernel recur every 2 pi a / (c h); keep them out of the window.
  const double period = 2.0 * pi / (grid.spacing(w) * w.time_scale());
  // The window sees modes out to |x| ~ 1/window_width; the grid must reach past that.
  const double reach = std::min(-grid.x_min(w), grid.x_max(w)) * grid.window_width;
  const double truncation = reach > 0.0 ? std::erfc(reach / std::numbers::sqrt2) : 1.0;
  if (period < 4.0 * half_width || truncation > 0.1) {
    std::ostringstream msg;
    msg << "mode grid too coarse for window " << grid.window_width << ": kernel period "
        << period * w.time_scale() << " c/a, truncated window mass " << truncation;
    throw NumericError(msg.str(), std::max(truncation, 4.0 * half_width / period));
  }

  auto window = [=](double d) { return std::exp(-0.5 * (d / sigma) * (d / sigma)); };
  return kernel_moment(window, half_width, w, grid, rel_tol);
}

double accelerated_density_from_modes(double omega, const AcceleratedWorldline& w,
                                      const ModeGrid& grid, Statistics stats,
                                      const RegularizationConfig& reg) {
  require_positive(omega, "Omega");
  grid.validate();
  reg.validate();
  const double omega_t = omega * w.time_scale();
  const double x = std::log(omega_t);
  if (x < grid.x_min(w) || x > grid.x_max(w)) {
    throw DomainError("Omega lies outside the frequency band of the mode grid");
  }

  const auto& k = w.constants();
  const double gamma_abs2 = stats == Statistics::bose_einstein ? gamma_abs2_imag(omega_t)
                                                               : gamma_abs2_half_imag(omega_t);
  double per_mode = gamma_abs2 * std::exp(-pi * omega_t);
  if (stats == Statistics::fermi_dirac) per_mode /= omega_t;

  const double tau_factor = w.time_scale() / (2.0 * pi);
  const double field_norm = 2.0 * pi * k.hbar * k.c * k.c / grid.volume;
  const double weight = kernel_delta_weight(w, grid, reg.quad_rel_tol);
  return tau_factor * tau_factor * field_norm * per_mode * weight;
}

SpectralDensity tabulate_thermal(const std::vector<double>& omegas, double temperature,
                                 const PhysicalConstants& consts, Statistics stats) {
  SpectralDensity out{omegas, {}, DensityKind::thermal, stats};
  for (double omega : omegas) out.values.push_back(thermal_density(omega, temperature, consts, stats));
  return out;
}

SpectralDensity tabulate_accelerated(const std::vector<double>& omegas,
                                     const AcceleratedWorldline& w, Statistics stats) {
  SpectralDensity out{omegas, {}, DensityKind::accelerated_vacuum, stats};
  for (double omega : omegas) out.values.push_back(accelerated_vacuum_density(omega, w, stats));
  return out;
}

}  // namespace unruh
