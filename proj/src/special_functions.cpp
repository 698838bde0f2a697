#include "unruh/special_functions.hpp"

#include <array>
#include <cmath>
#include <numbers>

#include "unruh/errors.hpp"

namespace unruh {

namespace {

constexpr double lanczos_g = 7.0;
constexpr std::array<double, 9> lanczos_coeffs = {
    0.99999999999980993,  676.5203681218851,     -1259.1392167224028,
    771.32342877765313,   -176.61502916214059,   12.507343278686905,
    -0.13857109526572012, 9.9843695780195716e-6, 1.5056327351493116e-7,
};

constexpr double log_sqrt_two_pi = 0.91893853320467274178;

// Above this argument the closed forms are evaluated as exp(log(...)).
constexpr double log_space_threshold = 50.0;

Complex lanczos_log_gamma(Complex z) {
  // Series is written for Gamma(z + 1), so shift by one.
  const Complex zm1 = z - 1.0;
  Complex series = lanczos_coeffs[0];
  for (std::size_t k = 1; k < lanczos_coeffs.size(); ++k) {
    series += lanczos_coeffs[k] / (zm1 + static_cast<double>(k));
  }
  const Complex t = zm1 + lanczos_g + 0.5;
  return log_sqrt_two_pi + (zm1 + 0.5) * std::log(t) - t + std::log(series);
}

}  // namespace

Complex log_gamma_complex(Complex z) {
  if (!std::isfinite(z.real()) || !std::isfinite(z.imag())) {
    throw DomainError("log_gamma_complex: non-finite argument");
  }
  if (z.imag() == 0.0 && z.real() <= 0.0 && z.real() == std::floor(z.real())) {
    throw DomainError("log_gamma_complex: pole at non-positive integer");
  }
  if (z.real() >= 0.5) {
    return lanczos_log_gamma(z);
  }
  const double shift = std::ceil(0.5 - z.real());
  Complex correction = 0.0;
  for (double k = 0.0; k < shift; k += 1.0) {
    correction += std::log(z + k);
  }
  return lanczos_log_gamma(z + shift) - correction;
}

double gamma_abs2_imag(double x) {
  if (!std::isfinite(x) || x <= 0.0) {
    throw DomainError("gamma_abs2_imag: argument must be finite and positive");
  }
  const double px = std::numbers::pi * x;
  if (x <= log_space_threshold) {
    return std::numbers::pi / (x * std::sinh(px));
  }
  // log sinh(px) = px - log 2 + log1p(-exp(-2 px))
  const double log_value = std::log(std::numbers::pi) - std::log(x) - px + std::numbers::ln2 -
                           std::log1p(-std::exp(-2.0 * px));
  return std::exp(log_value);
}

double gamma_abs2_half_imag(double x) {
  if (!std::isfinite(x)) {
    throw DomainError("gamma_abs2_half_imag: argument must be finite");
  }
  const double px = std::numbers::pi * std::abs(x);
  if (std::abs(x) <= log_space_threshold) {
    return std::numbers::pi / std::cosh(px);
  }
  const double log_value = std::log(2.0 * std::numbers::pi) - px - std::log1p(std::exp(-2.0 * px));
  return std::exp(log_value);
}

}  // namespace unruh
