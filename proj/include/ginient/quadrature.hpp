#pragma once

#include <cstddef>
#include <functional>

namespace ginient {

/// Controls every adaptive integral in the library.
///
/// `tail_cutoff_survival` is the survival level at which infinite supports are
/// truncated by operations that integrate a density power (entropy, the GMD
/// double integral). Integrals of survival functions use an exact half-line
/// map instead and ignore it.
struct QuadratureSettings {
  double abs_tol = 1e-12;
  double rel_tol = 1e-10;
  std::size_t max_subdivisions = 4000;
  double tail_cutoff_survival = 1e-12;

  /// Throws DomainError unless tolerances > 0 and max_subdivisions >= 10.
  void validate() const;
};

struct Integral {
  double value = 0.0;
  double abs_error = 0.0;
  std::size_t subdivisions = 0;
};

using Integrand = std::function<double(double)>;

/// Global adaptive 15-point Gauss-Kronrod on a finite [a, b]. The interval
/// with the largest error estimate is bisected until the summed estimate
/// meets max(abs_tol, rel_tol * |I|). Throws DivergentIntegralError when the
/// subdivision budget runs out or the integrand produces a non-finite value.
Integral integrate(const Integrand& f, double a, double b, const QuadratureSettings& q);

/// Integral over [a, inf) through x = a + expm1(s), s = u / (1 - u), u in
/// [0, 1). The double map turns both exponential and power tails into
/// integrands that vanish smoothly at u = 1. Points past the largest double
/// contribute nothing, so a DivergentIntegralError is also raised when
/// x |f(x)| at x = a + 1e300 exceeds the tolerance.
Integral integrate_half_line(const Integrand& f, double a, const QuadratureSettings& q);

/// Integral over [a, b] through x = a + expm1(s). Suited to long finite
/// ranges such as a support truncated far out in a power tail.
Integral integrate_log_scaled(const Integrand& f, double a, double b, const QuadratureSettings& q);

}  // namespace ginient
