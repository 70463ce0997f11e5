#include "ginient/inequality.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <sstream>

#include "ginient/entropy.hpp"
#include "ginient/errors.hpp"

namespace ginient {

namespace {

// x * S(x) must be this small at the far checkpoint for the mean integral to
// be trusted in double range.
constexpr double kTailMassTolerance = 1e-10;

void require_nonnegative_support(const UnivariateModel& F) {
  const Support s = F.support();
  if (!std::isfinite(s.lower) || s.lower < 0.0) {
    throw DomainError("'" + F.family() + "' must have a non-negative support for Gini-type indices");
  }
}

// Growth test for the tail of the mean integral: int_R^{2R} S grows or stays
// flat exactly when R * S(R) does not go to zero.
void check_tail_growth(const UnivariateModel& F) {
  const Support s = F.support();
  if (s.bounded_above()) return;
  constexpr std::array<double, 8> checkpoints = {1e4, 1e8, 1e16, 1e32, 1e64, 1e128, 1e200, 1e280};
  double previous = -1.0;
  for (double x : checkpoints) {
    const double sx = F.survival(s.lower + x);
    if (sx == 0.0) return;
    const double h = x * sx;
    if (previous >= 0.0 && h >= previous * (1.0 - 1e-9) && h > kTailMassTolerance) {
      std::ostringstream os;
      os << "mean of '" << F.family() << "' is infinite: x * S(x) does not decay (" << h << " at x = " << x << ")";
      throw InfiniteMeanError(os.str());
    }
    previous = h;
  }
  if (previous > kTailMassTolerance) {
    std::ostringstream os;
    os << "mean of '" << F.family() << "' does not converge within double range (x * S(x) = " << previous
       << " at x = 1e280)";
    throw InfiniteMeanError(os.str());
  }
}

// Integral of g over [lower, upper] of the support, exact half-line map when
// unbounded.
Integral integrate_support(const UnivariateModel& F, const Integrand& g, const QuadratureSettings& q) {
  const Support s = F.support();
  if (s.bounded_above()) return integrate(g, s.lower, s.upper, q);
  return integrate_half_line(g, s.lower, q);
}

}  // namespace

GiniOrder::GiniOrder(double nu) : nu_(nu) {
  if (!std::isfinite(nu) || !(nu > 1.0)) {
    std::ostringstream os;
    os << "Gini order nu must be > 1 (got " << nu << ")";
    throw DomainError(os.str());
  }
}

double mean_model(const UnivariateModel& F, const QuadratureSettings& q) {
  require_nonnegative_support(F);
  check_tail_growth(F);
  const Support s = F.support();
  double mu = 0.0;
  try {
    mu = s.lower + integrate_support(F, [&](double x) { return F.survival(x); }, q).value;
  } catch (const DivergentIntegralError& e) {
    throw InfiniteMeanError(std::string("mean integral diverges: ") + e.what());
  }
  if (!(mu > 0.0)) throw DomainError("'" + F.family() + "' has zero mean");
  return mu;
}

double quantile(const UnivariateModel& F, double p) {
  if (!(p >= 0.0 && p <= 1.0)) throw DomainError("quantile level must lie in [0, 1]");
  const Support s = F.support();
  if (p == 0.0) return s.lower;
  if (p == 1.0) return s.upper;

  const bool upper_half = p > 0.5;
  const double tail = 1.0 - p;  // exact for p > 0.5
  auto reached = [&](double x) { return upper_half ? F.survival(x) <= tail : F.cdf(x) >= p; };

  double lo = std::isfinite(s.lower) ? s.lower : -1.0;
  double hi;
  if (s.bounded_above()) {
    hi = s.upper;
  } else {
    double step = 1.0;
    hi = lo + step;
    while (!reached(hi)) {
      lo = hi;
      step *= 2.0;
      hi = lo + step;
      if (!std::isfinite(hi)) return hi;
    }
  }
  for (int iter = 0; iter < 2000; ++iter) {
    if (hi - lo <= 1e-12 * std::max(1.0, std::abs(hi))) break;
    const double mid = 0.5 * (lo + hi);
    if (mid <= lo || mid >= hi) break;
    if (reached(mid)) hi = mid; else lo = mid;
  }
  return 0.5 * (lo + hi);
}

LorenzPoint lorenz_model(const UnivariateModel& F, double u, const QuadratureSettings& q) {
  if (!(u >= 0.0 && u <= 1.0)) throw DomainError("Lorenz abscissa u must lie in [0, 1]");
  const double mu = mean_model(F, q);
  if (u == 0.0) return {0.0, 0.0};
  if (u == 1.0) return {1.0, 1.0};
  const double area = integrate([&](double t) { return quantile(F, t); }, 0.0, u, q).value;
  return {u, std::clamp(area / mu, 0.0, u)};
}

std::vector<LorenzPoint> lorenz_grid(const UnivariateModel& F, std::size_t points, const QuadratureSettings& q) {
  if (points < 2) throw DomainError("Lorenz grid needs at least two points");
  std::vector<LorenzPoint> out;
  out.reserve(points);
  for (std::size_t i = 0; i < points; ++i) {
    const double u = (i + 1 == points) ? 1.0 : static_cast<double>(i) / static_cast<double>(points - 1);
    out.push_back(lorenz_model(F, u, q));
  }
  return out;
}

double gini_model(const UnivariateModel& F, const QuadratureSettings& q) {
  const double mu = mean_model(F, q);
  auto weighted_quantile = [&](double t) {
    if (t >= 1.0) return 0.0;
    return (1.0 - t) * quantile(F, t);
  };
  const double area_times_mu = integrate(weighted_quantile, 0.0, 1.0, q).value;
  return 1.0 - 2.0 * area_times_mu / mu;
}

double generalized_gini_model(const UnivariateModel& F, const GiniOrder& nu, const QuadratureSettings& q) {
  const double mu = mean_model(F, q);
  const double order = nu.nu();
  const Support s = F.support();
  auto powered = [&](double x) {
    const double sx = F.survival(x);
    return sx > 0.0 ? std::pow(sx, order) : 0.0;
  };
  const double eta = s.lower + integrate_support(F, powered, q).value;
  return 1.0 - eta / mu;
}

double gmd_model(const UnivariateModel& F, const QuadratureSettings& q) {
  const Support s = F.support();
  if (!std::isfinite(s.lower)) throw DomainError("GMD needs a support bounded below");
  check_tail_growth(F);
  auto product = [&](double t) { return F.survival(t) * F.cdf(t); };
  try {
    return 2.0 * integrate_support(F, product, q).value;
  } catch (const DivergentIntegralError& e) {
    throw InfiniteMeanError(std::string("GMD integral diverges: ") + e.what());
  }
}

namespace {

constexpr std::array<double, 10> kGlNodes = {
    -0.973906528517171720077964012084452, -0.865063366688984510732096688423493,
    -0.679409568299024406234327365114874, -0.433395394129247190799265943165784,
    -0.148874338981631210884826001129720, 0.148874338981631210884826001129720,
    0.433395394129247190799265943165784,  0.679409568299024406234327365114874,
    0.865063366688984510732096688423493,  0.973906528517171720077964012084452};
constexpr std::array<double, 10> kGlWeights = {
    0.066671344308688137593568809893332, 0.149451349150580593145776339657697,
    0.219086362515982043995534934228163, 0.269266719309996355091226921569469,
    0.295524224714752870173892994651338, 0.295524224714752870173892994651338,
    0.269266719309996355091226921569469, 0.219086362515982043995534934228163,
    0.149451349150580593145776339657697, 0.066671344308688137593568809893332};

constexpr std::size_t kGmdPanels = 96;

struct Node {
  double x;
  double weight;  // includes the Jacobian of the panel map
};

}  // namespace

double gmd_double_integral(const UnivariateModel& F, const QuadratureSettings& q) {
  q.validate();
  const Support s = F.support();
  if (!std::isfinite(s.lower)) throw DomainError("GMD needs a support bounded below");
  check_tail_growth(F);

  // Grid coordinate: linear for bounded supports, s = log1p(x - lower) for
  // unbounded ones cut at the survival cutoff.
  const bool bounded = s.bounded_above();
  const double lower = s.lower;
  const double top = bounded ? s.upper : survival_cutoff_point(F, q.tail_cutoff_survival);
  const double coord_max = bounded ? top - lower : std::log1p(top - lower);
  auto to_x = [&](double c) { return bounded ? lower + c : lower + std::expm1(c); };
  auto dx_dc = [&](double c) { return bounded ? 1.0 : std::exp(c); };
  auto to_c = [&](double x) { return bounded ? x - lower : std::log1p(x - lower); };
  auto density = [&](double x) { return s.contains(x) ? F.pdf(x) : 0.0; };

  auto panel_nodes = [&](double c0, double c1, std::vector<Node>& out) {
    const double half = 0.5 * (c1 - c0);
    const double mid = 0.5 * (c0 + c1);
    for (std::size_t k = 0; k < kGlNodes.size(); ++k) {
      const double c = mid + half * kGlNodes[k];
      out.push_back({to_x(c), kGlWeights[k] * half * dx_dc(c)});
    }
  };

  const double width = coord_max / static_cast<double>(kGmdPanels);
  std::vector<Node> outer;
  outer.reserve(kGmdPanels * kGlNodes.size());
  for (std::size_t i = 0; i < kGmdPanels; ++i) panel_nodes(i * width, (i + 1) * width, outer);

  double total = 0.0;
  std::vector<Node> inner;
  inner.reserve((kGmdPanels + 1) * kGlNodes.size());
  for (const Node& xo : outer) {
    const double fx = density(xo.x);
    if (fx == 0.0) continue;
    // Inner grid: same panels, the one holding x split at x so |x - y| is
    // smooth on every piece.
    const double cx = to_c(xo.x);
    inner.clear();
    for (std::size_t j = 0; j < kGmdPanels; ++j) {
      const double c0 = j * width;
      const double c1 = (j + 1) * width;
      if (cx > c0 && cx < c1) {
        panel_nodes(c0, cx, inner);
        panel_nodes(cx, c1, inner);
      } else {
        panel_nodes(c0, c1, inner);
      }
    }
    double inner_sum = 0.0;
    for (const Node& yi : inner) inner_sum += yi.weight * std::abs(xo.x - yi.x) * density(yi.x);
    total += xo.weight * fx * inner_sum;
  }
  if (!std::isfinite(total)) throw DivergentIntegralError("GMD double integral is not finite");
  return total;
}

EmpiricalIndices empirical_indices(const Sample& s, const GiniOrder& nu) {
  const std::size_t n = s.size();
  if (n < 2) throw DomainError("empirical indices need at least two observations");
  if (!s.all_non_negative()) throw DomainError("Gini-type indices need non-negative observations");
  const std::vector<double> x = s.sorted();
  const double total = s.sum();
  if (!(total > 0.0)) throw DomainError("Gini-type indices are undefined for a zero-mean sample");
  const double dn = static_cast<double>(n);
  const double mean = total / dn;

  EmpiricalIndices out;
  out.lorenz.reserve(n + 1);
  out.lorenz.push_back({0.0, 0.0});
  double partial = 0.0;
  double twice_area = 0.0;
  for (std::size_t i = 1; i <= n; ++i) {
    const double previous = partial / total;
    partial += x[i - 1];
    const double current = (i == n) ? 1.0 : partial / total;
    out.lorenz.push_back({static_cast<double>(i) / dn, current});
    twice_area += (previous + current) / dn;
  }
  out.gini = 1.0 - twice_area;

  double survival_integral = x[0];
  for (std::size_t i = 1; i < n; ++i) {
    const double level = static_cast<double>(n - i) / dn;
    survival_integral += std::pow(level, nu.nu()) * (x[i] - x[i - 1]);
  }
  out.generalized_gini = 1.0 - survival_integral / mean;
  out.gmd = empirical_gmd(s);
  return out;
}

double empirical_gmd(const Sample& s) {
  const std::size_t n = s.size();
  if (n < 2) throw DomainError("GMD needs at least two observations");
  const std::vector<double> x = s.sorted();
  // sum_{i<j} (x_(j) - x_(i)) = sum_j x_(j) (2j - n - 1), 1-based j.
  double pair_sum = 0.0;
  for (std::size_t j = 0; j < n; ++j) {
    pair_sum += x[j] * (2.0 * static_cast<double>(j + 1) - static_cast<double>(n) - 1.0);
  }
  const double dn = static_cast<double>(n);
  return 2.0 * pair_sum / (dn * dn);
}

std::string lorenz_csv(const std::vector<LorenzPoint>& points) {
  std::ostringstream os;
  os.precision(17);
  os << "u,L\n";
  for (const LorenzPoint& p : points) os << p.u << ',' << p.L << '\n';
  return os.str();
}

}  // namespace ginient
