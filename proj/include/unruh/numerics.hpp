#pragma once

#include <complex>
#include <functional>
#include <span>
#include <vector>

namespace unruh::numerics {

struct Integral {
  std::complex<double> value;
  double error;  // summed Gauss-Kronrod error estimate
  double l1;     // integral of |f|, the scale the tolerance is measured against
};

/// Adaptive Gauss-Kronrod (21 point) over consecutive panels [b_i, b_{i+1}].
///
/// Each panel is refined until its error estimate is below rel_tol times its L1
/// norm, which keeps the tolerance meaningful when the signed result is small
/// through cancellation. Throws NumericError if any panel misses the target.
Integral integrate(const std::function<std::complex<double>(double)>& f,
                   std::span<const double> breakpoints, double rel_tol);

/// Real-valued overload; the imaginary part of the result is zero.
Integral integrate_real(const std::function<double(double)>& f,
                        std::span<const double> breakpoints, double rel_tol);

/// Breakpoints covering [lo, hi] such that no panel is wider than a quarter of
/// the local period 2 pi / rate(x), nor wider than max_width.
std::vector<double> oscillation_panels(double lo, double hi,
                                       const std::function<double(double)>& rate,
                                       double max_width);

/// Polynomial (Neville) extrapolation of samples y(h_i) to h = 0.
template <typename T>
T extrapolate_to_zero(std::span<const double> h, std::span<const T> y) {
  std::vector<T> p(y.begin(), y.end());
  const std::size_t n = p.size();
  for (std::size_t k = 1; k < n; ++k) {
    for (std::size_t i = 0; i + k < n; ++i) {
      p[i] = (h[i + k] * p[i] - h[i] * p[i + 1]) / (h[i + k] - h[i]);
    }
  }
  return p.front();
}

}  // namespace unruh::numerics
