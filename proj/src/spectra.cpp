#include "unruh/spectra.hpp"

#include <algorithm>
#include <cmath>
#include <future>
#include <numbers>
#include <sstream>

#include "unruh/errors.hpp"
#include "unruh/numerics.hpp"

namespace unruh {

namespace {

using namespace std::complex_literals;
constexpr double pi = std::numbers::pi;

// Beyond the point where the local phase rate reaches this many radians per
// unit of a tau / c the remaining tail is integrated along a rotated contour.
constexpr double fast_side_rate_cap = 32.0;

void require_positive(double value, const char* what) {
  if (!std::isfinite(value) || value <= 0.0) {
    throw DomainError(std::string(what) + " must be finite and positive");
  }
}

double spin_shift(Statistics stats) { return stats == Statistics::fermi_dirac ? 0.5 : 0.0; }

// int_0^{y0} y^{mu-1} e^{i sigma w y} dy by its power series; y0 must be small.
Complex frozen_tail(Complex mu, double sigma_w, double y0) {
  if (std::abs(sigma_w) * y0 > 1.0) {
    throw NumericError("tau window too narrow for the frozen-phase tail series",
                       std::abs(sigma_w) * y0);
  }
  const Complex z = 1i * sigma_w * y0;
  const Complex lead = std::exp(mu * std::log(y0));
  Complex power = 1.0;  // z^n / n!
  Complex sum = 0.0;
  for (int n = 0; n < 200; ++n) {
    const Complex term = power / (static_cast<double>(n) + mu);
    sum += term;
    if (std::abs(term) < 1e-18 * std::abs(sum)) break;
    power *= z / static_cast<double>(n + 1);
  }
  return lead * sum;
}

// int_{y1}^inf y^{mu-1} e^{i sigma w y} dy along y = y1 + i sigma t, where the
// integrand decays as e^{-w t} and no longer oscillates. Needs Re mu < 1.
Complex fast_tail(Complex mu, int sigma, double w, double y1, double rel_tol, double& error) {
  const Complex dir = 1i * static_cast<double>(sigma);
  auto integrand = [&](double t) { return std::pow(y1 + dir * t, mu - 1.0) * std::exp(-w * t); };
  std::vector<double> breaks{0.0};
  for (double t = 1.0; t <= 64.0; t *= 2.0) breaks.push_back(t / w);
  const auto r = numerics::integrate(integrand, breaks, rel_tol);
  error += r.error;
  return dir * std::exp(dir * w * y1) * r.value;
}

// Dimensionless integral over v = -eps u, u = a tau / c:
//   int dv exp((i lambda Omega + delta) v - s|v| + i lambda w e^v),  lambda = -eps.
// Written in the original variable u the integrand is
//   exp((i Omega + lambda delta) u - s|u| + i lambda w e^{lambda u}),
// which is what gets evaluated; the v grid only orders the panels so the frozen
// side is always at v -> -inf.
Complex accelerated_integral(double omega_t, double w, int eps, double delta, double s,
                             const RegularizationConfig& reg, double& error) {
  const int lambda = -eps;
  const double lam = lambda;
  auto f_of_u = [=](double u) {
    const Complex exponent = (1i * omega_t + lam * delta) * u - s * std::abs(u) +
                             1i * lam * w * std::exp(lam * u);
    return std::exp(exponent);
  };
  auto integrand = [&](double v) { return f_of_u(lam * v); };

  const double lo = -reg.tau_window;
  // The regulator kink at v = 0 must stay inside the bulk, so hi >= 0; for
  // w > fast_side_rate_cap this costs panels proportional to w.
  const double hi = std::max(0.0, std::min(reg.tau_window, std::log(fast_side_rate_cap / w)));
  auto rate = [=](double v) { return omega_t + w * std::exp(v); };
  auto panels = numerics::oscillation_panels(lo, hi, rate, 1.0);
  if (lo < 0.0 && hi > 0.0) {
    panels.push_back(0.0);
    std::sort(panels.begin(), panels.end());
    panels.erase(std::unique(panels.begin(), panels.end()), panels.end());
  }
  const auto bulk = numerics::integrate(integrand, panels, reg.quad_rel_tol);
  error += bulk.error;

  const Complex mu_frozen = 1i * lam * omega_t + delta + s;
  const Complex mu_fast = 1i * lam * omega_t + delta - s;
  const Complex low_tail = frozen_tail(mu_frozen, lam * w, std::exp(lo));
  const Complex high_tail = fast_tail(mu_fast, lambda, w, std::exp(hi), reg.quad_rel_tol, error);
  return low_tail + bulk.value + high_tail;
}

struct Extrapolated {
  Complex value;
  double change;
};

Extrapolated extrapolate(std::span<const double> s, std::span<const Complex> samples, int order) {
  const std::size_t n = static_cast<std::size_t>(order) + 1;
  const auto hs = s.last(n);
  const auto ys = samples.last(n);
  const Complex best = numerics::extrapolate_to_zero(hs, ys);
  const Complex lower = numerics::extrapolate_to_zero(hs.last(n - 1), ys.last(n - 1));
  return {best, std::abs(best - lower)};
}

}  // namespace

const char* to_string(Statistics stats) {
  return stats == Statistics::bose_einstein ? "be" : "fd";
}

void RegularizationConfig::validate() const {
  if (s_schedule.empty()) throw DomainError("s_schedule must not be empty");
  for (std::size_t i = 0; i < s_schedule.size(); ++i) {
    require_positive(s_schedule[i], "s_schedule entry");
    if (i > 0 && !(s_schedule[i] < s_schedule[i - 1])) {
      throw DomainError("s_schedule must be strictly decreasing");
    }
  }
  require_positive(tau_window, "tau_window");
  if (!(quad_rel_tol > 0.0 && quad_rel_tol < 1e-3)) {
    throw DomainError("quad_rel_tol must lie in (0, 1e-3)");
  }
  if (extrapolation_order < 1 ||
      static_cast<std::size_t>(extrapolation_order) + 1 > s_schedule.size()) {
    throw DomainError("extrapolation_order needs order + 1 schedule entries and order >= 1");
  }
  require_positive(extrapolation_tol, "extrapolation_tol");
}

Complex analytic_amplitude(double omega, const PlaneWaveMode& mode,
                           const AcceleratedWorldline& w, Statistics stats) {
  require_positive(omega, "Omega");
  const double omega_t = omega * w.time_scale();
  const double wk = mode.omega() * w.time_scale();
  const Complex nu = Complex(spin_shift(stats), omega_t);
  // (-i wk)^{-nu} on the principal branch: log(-i wk) = log wk - i pi/2.
  const Complex log_amp = log_gamma_complex(nu) - nu * Complex(std::log(wk), -pi / 2.0);
  const Complex minus_z = w.time_scale() * std::exp(log_amp);
  return mode.direction() == Direction::minus_z ? minus_z : std::conj(minus_z);
}

double analytic_spectrum(double omega, const PlaneWaveMode& mode, const AcceleratedWorldline& w,
                         Statistics stats, FdPrefactor prefactor) {
  require_positive(omega, "Omega");
  const double x = 2.0 * pi * omega * w.time_scale();
  if (stats == Statistics::bose_einstein) {
    return 2.0 * pi * w.time_scale() / omega / std::expm1(x);
  }
  const double freq = prefactor == FdPrefactor::mode_frequency ? mode.omega() : omega;
  return 2.0 * pi * w.time_scale() / freq / (std::exp(x) + 1.0);
}

double fd_envelope(double tau, const PlaneWaveMode& mode, const AcceleratedWorldline& w) {
  return std::exp(-mode.epsilon() * tau / (2.0 * w.time_scale()));
}

Complex regularized_amplitude(double omega, const PlaneWaveMode& mode,
                              const AcceleratedWorldline& w, Statistics stats, double s,
                              const RegularizationConfig& reg) {
  require_positive(omega, "Omega");
  require_positive(s, "s");
  reg.validate();
  double error = 0.0;
  const double scale = w.time_scale();
  return scale * accelerated_integral(omega * scale, mode.omega() * scale, mode.epsilon(),
                                      spin_shift(stats), s, reg, error);
}

NumericAmplitude numeric_amplitude(double omega, const PlaneWaveMode& mode,
                                   const AcceleratedWorldline& w, Statistics stats,
                                   const RegularizationConfig& reg) {
  require_positive(omega, "Omega");
  reg.validate();
  const double scale = w.time_scale();
  NumericAmplitude out{};
  out.quadrature_error = 0.0;
  for (double s : reg.s_schedule) {
    double error = 0.0;
    out.samples.push_back(scale * accelerated_integral(omega * scale, mode.omega() * scale,
                                                       mode.epsilon(), spin_shift(stats), s, reg,
                                                       error));
    out.quadrature_error = std::max(out.quadrature_error, scale * error);
  }
  const auto ex = extrapolate(reg.s_schedule, out.samples, reg.extrapolation_order);
  out.amplitude = ex.value;
  out.extrapolation_change = ex.change / std::abs(ex.value);
  if (!(out.extrapolation_change <= reg.extrapolation_tol)) {
    std::ostringstream msg;
    msg << "s -> 0 extrapolation unstable at Omega = " << omega << ": relative change "
        << out.extrapolation_change;
    throw NumericError(msg.str(), out.extrapolation_change);
  }
  return out;
}

double numeric_spectrum(double omega, const PlaneWaveMode& mode, const AcceleratedWorldline& w,
                        Statistics stats, const RegularizationConfig& reg) {
  return std::norm(numeric_amplitude(omega, mode, w, stats, reg).amplitude);
}

namespace {

// int dx e^{i k x - s|x|}, x = omega_K tau; bulk by quadrature, tails closed form.
Complex inertial_integral(double k, double s, const RegularizationConfig& reg) {
  auto integrand = [=](double x) { return std::exp(Complex(-s * std::abs(x), k * x)); };
  const double half = reg.tau_window;
  auto panels = numerics::oscillation_panels(-half, 0.0, [=](double) { return k; }, 1.0);
  const auto right = numerics::oscillation_panels(0.0, half, [=](double) { return k; }, 1.0);
  panels.insert(panels.end(), right.begin() + 1, right.end());
  const auto bulk = numerics::integrate(integrand, panels, reg.quad_rel_tol);
  const Complex q(s, -k);  // s - i k
  const Complex tails = std::exp(-q * half) / q + std::exp(-std::conj(q) * half) / std::conj(q);
  return bulk.value + tails;
}

}  // namespace

double inertial_regularized_spectrum(double omega, const PlaneWaveMode& mode, double s,
                                     const RegularizationConfig& reg) {
  require_positive(omega, "Omega");
  require_positive(s, "s");
  reg.validate();
  const double k = (omega + mode.omega()) / mode.omega();
  return std::norm(inertial_integral(k, s, reg) / mode.omega());
}

double inertial_spectrum(double omega, const PlaneWaveMode& mode,
                         const RegularizationConfig& reg) {
  require_positive(omega, "Omega");
  reg.validate();
  const double k = (omega + mode.omega()) / mode.omega();
  std::vector<Complex> samples;
  double scale = 0.0;
  for (double s : reg.s_schedule) {
    samples.push_back(inertial_integral(k, s, reg) / mode.omega());
    scale = std::max(scale, std::abs(samples.back()));
  }
  const auto ex = extrapolate(reg.s_schedule, samples, reg.extrapolation_order);
  // The limit is zero, so judge stability against the sample magnitude.
  const double change = ex.change / scale;
  if (!(change <= reg.extrapolation_tol)) {
    throw NumericError("inertial s -> 0 extrapolation unstable", change);
  }
  return std::norm(ex.value);
}

double planck_factor(double x, Statistics stats) {
  if (stats == Statistics::bose_einstein) {
    require_positive(x, "Bose-Einstein Planck argument");
    return 1.0 / std::expm1(x);
  }
  if (!std::isfinite(x)) throw DomainError("Fermi-Dirac Planck argument must be finite");
  return 1.0 / (std::exp(x) + 1.0);
}

std::vector<SpectrumComparison> compare_spectra(std::span<const double> omegas,
                                                const PlaneWaveMode& mode,
                                                const AcceleratedWorldline& w, Statistics stats,
                                                const RegularizationConfig& reg) {
  reg.validate();
  std::vector<std::future<SpectrumComparison>> jobs;
  for (double omega : omegas) {
    jobs.push_back(std::async(std::launch::async, [=, &mode, &w, &reg] {
      const double exact = analytic_spectrum(omega, mode, w, stats);
      const double numeric = numeric_spectrum(omega, mode, w, stats, reg);
      return SpectrumComparison{omega, stats, exact, numeric, std::abs(numeric - exact) / exact};
    }));
  }
  std::vector<SpectrumComparison> rows;
  for (auto& job : jobs) rows.push_back(job.get());
  return rows;
}

}  // namespace unruh
