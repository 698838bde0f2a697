#pragma once

#include <complex>

namespace unruh {

using Complex = std::complex<double>;

/// log Gamma(z) on the principal branch (cut along the negative real axis).
///
/// Lanczos approximation (g = 7, nine terms) for Re z >= 1/2; to the left of
/// that line the recurrence log Gamma(z) = log Gamma(z + n) - sum log(z + k)
/// shifts the argument into the Lanczos region. Throws DomainError at the
/// poles z = 0, -1, -2, ... and for non-finite input.
Complex log_gamma_complex(Complex z);

/// |Gamma(i x)|^2 = pi / (x sinh(pi x)), x > 0.
double gamma_abs2_imag(double x);

/// |Gamma(1/2 + i x)|^2 = pi / cosh(pi x).
double gamma_abs2_half_imag(double x);

}  // namespace unruh
