#include "ginient/entropy.hpp"

#include <cmath>
#include <numeric>
#include <sstream>

#include "ginient/errors.hpp"

namespace ginient {

namespace {

// Deviation of the integrated density from one tolerated before a model is
// rejected as unnormalized.
constexpr double kNormalizationTolerance = 1e-8;

// The truncated tail is considered negligible when its proxy stays below
// this fraction of max(1, |integral|).
constexpr double kTailProxyTolerance = 1e-6;

// Farthest truncation point for integrals over an unbounded support.
constexpr double kLastCutoff = 1e300;

void check_probabilities(const std::vector<double>& p) {
  if (p.empty()) throw DomainError("probability vector must have at least one cell");
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (!std::isfinite(p[i]) || p[i] < 0.0) {
      std::ostringstream os;
      os << "probability " << i << " is invalid (" << p[i] << ")";
      throw DomainError(os.str());
    }
  }
}

}  // namespace

ProbVector::ProbVector(std::vector<double> p) : p_(std::move(p)) {
  check_probabilities(p_);
  const double total = std::accumulate(p_.begin(), p_.end(), 0.0);
  if (std::abs(total - 1.0) > kSumTolerance) {
    std::ostringstream os;
    os.precision(17);
    os << "probabilities sum to " << total << ", not 1";
    throw DomainError(os.str());
  }
}

ProbVector ProbVector::normalized(std::vector<double> weights) {
  check_probabilities(weights);
  const double total = std::accumulate(weights.begin(), weights.end(), 0.0);
  if (!(total > 0.0)) throw DomainError("cannot normalize weights that sum to zero");
  for (double& w : weights) w /= total;
  return ProbVector(std::move(weights));
}

ProbVector ProbVector::uniform(std::size_t k) {
  if (k == 0) throw DomainError("uniform law needs k >= 1");
  return ProbVector(std::vector<double>(k, 1.0 / static_cast<double>(k)));
}

EntropyOrder::EntropyOrder(double alpha) : alpha_(alpha), shannon_(false) {
  if (!std::isfinite(alpha) || alpha >= 2.0) {
    std::ostringstream os;
    os << "entropy order alpha must be finite and < 2 (got " << alpha << ")";
    throw DomainError(os.str());
  }
  if (alpha == 1.0) {
    throw DomainError("entropy order alpha = 1 is the Shannon limit; use EntropyOrder::shannon()");
  }
}

EntropyOrder EntropyOrder::shannon() { return EntropyOrder(1.0, true); }

double mathai_discrete(const ProbVector& p, const EntropyOrder& order) {
  if (order.is_shannon()) {
    throw DomainError("mathai_discrete is undefined at alpha = 1; use shannon_discrete");
  }
  // p^(2-a) - p = p * expm1((1-a) ln p); summing these keeps precision near
  // alpha = 1 and equals sum p^(2-a) - 1 because the p_i sum to one.
  const double a = order.alpha();
  double acc = 0.0;
  for (double pi : p.values()) {
    if (pi > 0.0) acc += pi * std::expm1((1.0 - a) * std::log(pi));
  }
  return acc / (a - 1.0);
}

double shannon_discrete(const ProbVector& p) {
  double h = 0.0;
  for (double pi : p.values()) {
    if (pi > 0.0) h -= pi * std::log(pi);
  }
  return h;
}

double survival_cutoff_point(const UnivariateModel& f, double cutoff) {
  const Support s = f.support();
  if (s.bounded_above()) return s.upper;
  double x = std::max(1.0, s.lower + 1.0);
  while (f.survival(x) >= cutoff) {
    x = 2.0 * x;
    if (!std::isfinite(x) || x > 1e300) {
      throw DivergentIntegralError("survival function does not fall below the tail cutoff");
    }
  }
  return x;
}

TruncatedIntegral integrate_over_support(const UnivariateModel& f, const Integrand& g,
                                         const QuadratureSettings& q) {
  q.validate();
  const Support s = f.support();
  TruncatedIntegral out;
  if (s.bounded_above()) {
    out.cutoff = s.upper;
    out.integral = integrate(g, s.lower, s.upper, q);
    return out;
  }
  // Start where the survival function is negligible, then push the cut out
  // while the integrand itself is not: g = f^p with p < 1 has a heavier tail
  // than f.
  out.cutoff = survival_cutoff_point(f, q.tail_cutoff_survival);
  out.integral = integrate_log_scaled(g, s.lower, out.cutoff, q);
  out.tail_proxy = (out.cutoff - s.lower) * std::abs(g(out.cutoff));
  while (out.tail_proxy > q.rel_tol * std::max(1.0, std::abs(out.integral.value)) && out.cutoff < kLastCutoff) {
    const double next = std::min(out.cutoff * 1e3, kLastCutoff);
    const Integral piece = integrate_log_scaled(g, out.cutoff, next, q);
    out.integral.value += piece.value;
    out.integral.abs_error += piece.abs_error;
    out.integral.subdivisions += piece.subdivisions;
    out.cutoff = next;
    out.tail_proxy = (out.cutoff - s.lower) * std::abs(g(out.cutoff));
  }
  return out;
}

double mathai_continuous(const UnivariateModel& f, const EntropyOrder& order, const QuadratureSettings& q) {
  if (order.is_shannon()) {
    throw DomainError("mathai_continuous is undefined at alpha = 1");
  }
  const double power = order.power();
  const Support s = f.support();

  auto density = [&](double x) { return s.contains(x) ? f.pdf(x) : 0.0; };
  const TruncatedIntegral mass = integrate_over_support(f, density, q);
  // Mass beyond the cut is the survival at the cut point.
  const double tail_mass = s.bounded_above() ? 0.0 : f.survival(mass.cutoff);
  const double total = mass.integral.value + tail_mass;
  if (std::abs(total - 1.0) > kNormalizationTolerance) {
    std::ostringstream os;
    os.precision(12);
    os << "density of '" << f.family() << "' integrates to " << total << ", not 1";
    throw DomainError(os.str());
  }

  auto powered = [&](double x) {
    const double fx = density(x);
    return fx > 0.0 ? std::pow(fx, power) : 0.0;
  };
  const TruncatedIntegral r = integrate_over_support(f, powered, q);
  if (r.tail_proxy > kTailProxyTolerance * std::max(1.0, std::abs(r.integral.value))) {
    std::ostringstream os;
    os << "integral of f^" << power << " for '" << f.family()
       << "' does not converge: integrand has not decayed at the tail cutoff x = " << r.cutoff;
    throw DivergentIntegralError(os.str());
  }
  return (r.integral.value - 1.0) / (order.alpha() - 1.0);
}

}  // namespace ginient
