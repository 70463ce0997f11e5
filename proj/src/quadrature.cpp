#include "ginient/quadrature.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <queue>
#include <sstream>
#include <vector>

#include "ginient/errors.hpp"

namespace ginient {

void QuadratureSettings::validate() const {
  if (!(abs_tol > 0.0) || !(rel_tol > 0.0)) {
    throw DomainError("quadrature tolerances must be positive");
  }
  if (max_subdivisions < 10) {
    throw DomainError("quadrature max_subdivisions must be at least 10");
  }
  if (!(tail_cutoff_survival > 0.0) || !(tail_cutoff_survival < 1.0)) {
    throw DomainError("quadrature tail_cutoff_survival must lie in (0, 1)");
  }
}

namespace {

// Last point checked for decay by integrate_half_line.
constexpr double kFarPoint = 1e300;

// Kronrod abscissae; odd indices are the 7-point Gauss nodes.
constexpr std::array<double, 8> kXgk = {
    0.991455371120812639206854697526329, 0.949107912342758524526189684047851,
    0.864864423359769072789712788640926, 0.741531185599394439863864773280788,
    0.586087235467691130294144845693013, 0.405845151377397166906606412076961,
    0.207784955007898467600689403773245, 0.000000000000000000000000000000000};
constexpr std::array<double, 8> kWgk = {
    0.022935322010529224963732008058970, 0.063092092629978553290700663189204,
    0.104790010322250183839876322541518, 0.140653259715525918745189590510238,
    0.169004726639267902826583426598550, 0.190350578064785409913256402421014,
    0.204432940075298892414161999234649, 0.209482141084727828012999174891714};
constexpr std::array<double, 4> kWg = {
    0.129484966168869693270611432679082, 0.279705391489276667901467771423780,
    0.381830050505118944950369775488975, 0.417959183673469387755102040816327};

struct Segment {
  double a;
  double b;
  double value;
  double error;
  bool operator<(const Segment& other) const { return error < other.error; }
};

Segment gauss_kronrod(const Integrand& f, double a, double b) {
  const double center = 0.5 * (a + b);
  const double half = 0.5 * (b - a);
  const double fc = f(center);
  double kronrod = fc * kWgk[7];
  double gauss = fc * kWg[3];
  for (int j = 0; j < 7; ++j) {
    const double dx = half * kXgk[j];
    const double pair = f(center - dx) + f(center + dx);
    kronrod += kWgk[j] * pair;
    if (j % 2 == 1) gauss += kWg[j / 2] * pair;
  }
  kronrod *= half;
  gauss *= half;
  if (!std::isfinite(kronrod)) {
    std::ostringstream os;
    os << "integrand is not finite on [" << a << ", " << b << "]";
    throw DivergentIntegralError(os.str());
  }
  return {a, b, kronrod, std::abs(kronrod - gauss)};
}

}  // namespace

Integral integrate(const Integrand& f, double a, double b, const QuadratureSettings& q) {
  q.validate();
  if (!std::isfinite(a) || !std::isfinite(b)) {
    throw DomainError("integrate() needs finite limits; use integrate_half_line");
  }
  if (a == b) return {};
  if (b < a) {
    Integral r = integrate(f, b, a, q);
    r.value = -r.value;
    return r;
  }

  std::priority_queue<Segment> heap;
  Segment first = gauss_kronrod(f, a, b);
  double total = first.value;
  double error = first.error;
  heap.push(first);
  std::size_t count = 1;

  while (error > std::max(q.abs_tol, q.rel_tol * std::abs(total))) {
    if (count >= q.max_subdivisions) {
      std::ostringstream os;
      os << "adaptive quadrature exceeded " << q.max_subdivisions
         << " subdivisions (estimate " << total << ", error " << error << ")";
      throw DivergentIntegralError(os.str());
    }
    Segment worst = heap.top();
    const double mid = 0.5 * (worst.a + worst.b);
    if (!(mid > worst.a && mid < worst.b)) {
      throw DivergentIntegralError("adaptive quadrature reached machine resolution");
    }
    heap.pop();
    Segment left = gauss_kronrod(f, worst.a, mid);
    Segment right = gauss_kronrod(f, mid, worst.b);
    total += left.value + right.value - worst.value;
    error += left.error + right.error - worst.error;
    heap.push(left);
    heap.push(right);
    ++count;
  }

  // Re-sum to shed the drift of the incremental updates.
  double value = 0.0;
  double err = 0.0;
  std::vector<Segment> parts;
  parts.reserve(heap.size());
  while (!heap.empty()) {
    parts.push_back(heap.top());
    heap.pop();
  }
  std::sort(parts.begin(), parts.end(), [](const Segment& l, const Segment& r) { return l.a < r.a; });
  for (const Segment& s : parts) {
    value += s.value;
    err += s.error;
  }
  return {value, err, count};
}

Integral integrate_half_line(const Integrand& f, double a, const QuadratureSettings& q) {
  auto mapped = [&](double u) {
    const double s = u / (1.0 - u);
    const double x = a + std::expm1(s);
    if (std::isinf(x)) return 0.0;  // beyond the double range
    const double fx = f(x);
    if (fx == 0.0) return 0.0;
    const double w = 1.0 / ((1.0 - u) * (1.0 - u));
    if (s < 700.0) return fx * std::exp(s) * w;
    // e^s nearly overflows here while f(x) is tiny; combine them in logs.
    if (!(fx > 0.0)) return fx * std::exp(s) * w;
    return std::exp(std::log(fx) + s) * w;
  };
  const Integral r = integrate(mapped, 0.0, 1.0, q);
  // Nothing past the largest double is integrated, so the integrand has to
  // be gone by then: x f(x) bounds the missing piece for power-law tails.
  const double far = a + kFarPoint;
  const double tail = far * std::abs(f(far));
  if (!(tail <= std::max(q.abs_tol, q.rel_tol * std::abs(r.value)))) {
    std::ostringstream os;
    os << "integrand has not decayed by x = " << far << " (x f(x) = " << tail << ")";
    throw DivergentIntegralError(os.str());
  }
  return r;
}

Integral integrate_log_scaled(const Integrand& f, double a, double b, const QuadratureSettings& q) {
  if (!(b >= a)) throw DomainError("integrate_log_scaled needs a <= b");
  const double s_max = std::log1p(b - a);
  auto mapped = [&](double s) {
    const double x = a + std::expm1(s);
    if (std::isinf(x)) return 0.0;
    const double fx = f(x);
    if (fx == 0.0) return 0.0;
    if (s < 700.0 || !(fx > 0.0)) return fx * std::exp(s);
    return std::exp(std::log(fx) + s);
  };
  return integrate(mapped, 0.0, s_max, q);
}

}  // namespace ginient
