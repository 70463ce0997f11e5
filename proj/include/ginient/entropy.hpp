#pragma once

#include <span>
#include <vector>

#include "ginient/model.hpp"
#include "ginient/quadrature.hpp"

namespace ginient {

/// A discrete probability law (p_1, ..., p_k). Construction rejects negative
/// entries and sums further than 1e-12 from one; `normalized` is the only
/// place where inputs get rescaled.
class ProbVector {
 public:
  static constexpr double kSumTolerance = 1e-12;

  explicit ProbVector(std::vector<double> p);
  static ProbVector normalized(std::vector<double> weights);
  static ProbVector uniform(std::size_t k);

  std::span<const double> values() const { return p_; }
  std::size_t size() const { return p_.size(); }
  double operator[](std::size_t i) const { return p_[i]; }

 private:
  std::vector<double> p_;
};

/// Order alpha of Mathai's entropy: alpha < 2, and alpha == 1 only as the
/// explicit Shannon marker.
class EntropyOrder {
 public:
  explicit EntropyOrder(double alpha);
  static EntropyOrder shannon();

  double alpha() const { return alpha_; }
  bool is_shannon() const { return shannon_; }
  /// Exponent 2 - alpha applied to probabilities or densities.
  double power() const { return 2.0 - alpha_; }

 private:
  EntropyOrder(double alpha, bool shannon) : alpha_(alpha), shannon_(shannon) {}
  double alpha_;
  bool shannon_;
};

/// (sum p_i^(2-alpha) - 1) / (alpha - 1). Zero cells contribute nothing.
/// Throws DomainError for the Shannon marker.
double mathai_discrete(const ProbVector& p, const EntropyOrder& order);

/// -sum p_i ln p_i with 0 ln 0 = 0; the alpha -> 1 limit of mathai_discrete.
double shannon_discrete(const ProbVector& p);

/// (int f^(2-alpha) dx - 1) / (alpha - 1) over the model's support. Infinite
/// supports are truncated as in integrate_over_support. Throws DivergentIntegralError when the integral
/// fails to converge or the integrand has not died out at the cut, and
/// DomainError when the density does not integrate to one within 1e-8.
double mathai_continuous(const UnivariateModel& f, const EntropyOrder& order,
                         const QuadratureSettings& q = {});

/// Point beyond which the survival function is below `cutoff` (found by
/// doubling). Returns support().upper for bounded supports.
double survival_cutoff_point(const UnivariateModel& f, double cutoff);

/// Integral of g over the model's support. Unbounded supports are cut first
/// where the survival function drops below q.tail_cutoff_survival, and the
/// cut then moves out by factors of 1000 (up to 1e300) until the tail proxy
/// (x_c - lower) * |g(x_c)| is below q.rel_tol * max(1, |integral|).
struct TruncatedIntegral {
  Integral integral;
  double cutoff = 0.0;
  double tail_proxy = 0.0;
};
TruncatedIntegral integrate_over_support(const UnivariateModel& f, const Integrand& g,
                                         const QuadratureSettings& q);

}  // namespace ginient
