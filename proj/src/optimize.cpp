#include "ginient/optimize.hpp"

#include <cmath>

namespace ginient {

namespace {
constexpr std::size_t kTraceLength = 6;
}

MinimizeResult brent_minimize(const std::function<double(double)>& f, double lo, double hi,
                              double tol, std::size_t max_iterations) {
  const double golden = 0.5 * (3.0 - std::sqrt(5.0));
  const double eps = 1e-15;

  double a = lo;
  double b = hi;
  double x = a + golden * (b - a);
  double w = x;
  double v = x;
  double fx = f(x);
  double fw = fx;
  double fv = fx;
  double d = 0.0;
  double e = 0.0;

  MinimizeResult result;
  auto remember = [&](double t) {
    result.trace.push_back(t);
    if (result.trace.size() > kTraceLength) result.trace.erase(result.trace.begin());
  };

  for (std::size_t iter = 0; iter < max_iterations; ++iter) {
    const double mid = 0.5 * (a + b);
    const double tol1 = eps * std::abs(x) + tol / 3.0;
    const double tol2 = 2.0 * tol1;
    if (std::abs(x - mid) <= tol2 - 0.5 * (b - a)) {
      result.x = x;
      result.fx = fx;
      result.iterations = iter;
      result.converged = true;
      return result;
    }

    bool golden_step = true;
    if (std::abs(e) > tol1) {
      // Parabola through x, w, v.
      double r = (x - w) * (fx - fv);
      double qq = (x - v) * (fx - fw);
      double p = (x - v) * qq - (x - w) * r;
      qq = 2.0 * (qq - r);
      if (qq > 0.0) p = -p;
      qq = std::abs(qq);
      const double e_prev = e;
      e = d;
      if (std::abs(p) < std::abs(0.5 * qq * e_prev) && p > qq * (a - x) && p < qq * (b - x)) {
        d = p / qq;
        const double u = x + d;
        if (u - a < tol2 || b - u < tol2) d = (mid >= x) ? tol1 : -tol1;
        golden_step = false;
      }
    }
    if (golden_step) {
      e = (x >= mid) ? a - x : b - x;
      d = golden * e;
    }

    const double u = std::abs(d) >= tol1 ? x + d : x + (d > 0.0 ? tol1 : -tol1);
    const double fu = f(u);
    remember(u);

    if (fu <= fx) {
      if (u >= x) a = x; else b = x;
      v = w; fv = fw;
      w = x; fw = fx;
      x = u; fx = fu;
    } else {
      if (u < x) a = u; else b = u;
      if (fu <= fw || w == x) {
        v = w; fv = fw;
        w = u; fw = fu;
      } else if (fu <= fv || v == x || v == w) {
        v = u; fv = fu;
      }
    }
  }

  result.x = x;
  result.fx = fx;
  result.iterations = max_iterations;
  result.converged = false;
  return result;
}

}  // namespace ginient
