#include <boost/math/quadrature/gauss_kronrod.hpp>
#include <cmath>
#include <numbers>
#include <sstream>

#include "unruh/errors.hpp"
#include "unruh/numerics.hpp"

namespace unruh::numerics {

namespace {

constexpr unsigned max_depth = 20;
using Kronrod = boost::math::quadrature::gauss_kronrod<double, 21>;

template <typename F>
Integral integrate_impl(const F& f, std::span<const double> breakpoints, double rel_tol) {
  Integral total{0.0, 0.0, 0.0};
  double worst_ratio = 0.0;
  double worst_at = 0.0;
  for (std::size_t i = 0; i + 1 < breakpoints.size(); ++i) {
    const double lo = breakpoints[i];
    const double hi = breakpoints[i + 1];
    if (!(hi > lo)) continue;
    // Boost compares its error estimate in the unit-interval variable against a
    // tolerance in the original one, so panels are mapped onto [-1, 1] here to
    // keep both measured on the same scale whatever the units.
    const double mid = 0.5 * (lo + hi);
    const double half = 0.5 * (hi - lo);
    auto unit_panel = [&](double t) { return f(mid + half * t) * half; };
    double err = 0.0;
    double l1 = 0.0;
    const auto value = Kronrod::integrate(unit_panel, -1.0, 1.0, max_depth, rel_tol, &err, &l1);
    total.value += value;
    total.error += err;
    total.l1 += l1;
    const double ratio = l1 > 0.0 ? err / l1 : 0.0;
    if (ratio > worst_ratio) {
      worst_ratio = ratio;
      worst_at = lo;
    }
  }
  // Boost stops at max_depth silently; a tenfold miss means it gave up.
  if (!std::isfinite(std::abs(total.value)) || worst_ratio > 10.0 * rel_tol) {
    std::ostringstream msg;
    msg << "quadrature did not converge: relative error " << worst_ratio
        << " on panel starting at " << worst_at << " (target " << rel_tol << ")";
    throw NumericError(msg.str(), worst_ratio);
  }
  return total;
}

}  // namespace

Integral integrate(const std::function<std::complex<double>(double)>& f,
                   std::span<const double> breakpoints, double rel_tol) {
  return integrate_impl(f, breakpoints, rel_tol);
}

Integral integrate_real(const std::function<double(double)>& f,
                        std::span<const double> breakpoints, double rel_tol) {
  return integrate_impl(f, breakpoints, rel_tol);
}

std::vector<double> oscillation_panels(double lo, double hi,
                                       const std::function<double(double)>& rate,
                                       double max_width) {
  std::vector<double> points{lo};
  double x = lo;
  while (x < hi) {
    const double r = std::abs(rate(x));
    double width = max_width;
    if (r > 0.0) width = std::min(width, 0.5 * std::numbers::pi / r);
    // The rate may grow inside the panel; probe the far end and shrink once.
    const double r_end = std::abs(rate(std::min(x + width, hi)));
    if (r_end > 0.0) width = std::min(width, 0.5 * std::numbers::pi / r_end);
    x = std::min(x + width, hi);
    points.push_back(x);
  }
  return points;
}

}  // namespace unruh::numerics
