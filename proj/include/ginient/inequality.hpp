#pragma once

#include <string>
#include <vector>

#include "ginient/model.hpp"
#include "ginient/quadrature.hpp"
#include "ginient/sample.hpp"

namespace ginient {

/// Inequality-aversion order nu > 1 of the generalized Gini index; nu = 2 is
/// the ordinary Gini index.
class GiniOrder {
 public:
  explicit GiniOrder(double nu);
  double nu() const { return nu_; }

 private:
  double nu_;
};

struct LorenzPoint {
  double u = 0.0;  // population share
  double L = 0.0;  // income share
};

/// Mean of a model with support bounded below. Throws InfiniteMeanError when
/// x * S(x) fails to vanish far in the tail (the tail increments of the
/// truncated mean integral do not shrink) or when the mean integral diverges.
double mean_model(const UnivariateModel& F, const QuadratureSettings& q = {});

/// Generalized inverse inf{t : F(t) >= p}, by bisection on the CDF (on the
/// survival function above the median) to 1e-12.
double quantile(const UnivariateModel& F, double p);

/// (u, (1/mu) int_0^u F^{-1}(t) dt). Requires 0 <= u <= 1 and a non-negative
/// support; L(0) = 0 and L(1) = 1 exactly.
LorenzPoint lorenz_model(const UnivariateModel& F, double u, const QuadratureSettings& q = {});

/// Lorenz curve on `points` equally spaced u in [0, 1].
std::vector<LorenzPoint> lorenz_grid(const UnivariateModel& F, std::size_t points,
                                     const QuadratureSettings& q = {});

/// 1 - 2 int_0^1 L(u) du. The area is taken as (1/mu) int_0^1 (1 - t) F^{-1}(t) dt,
/// which is the same double integral with the order of integration swapped,
/// so the whole computation stays in quantile space.
double gini_model(const UnivariateModel& F, const QuadratureSettings& q = {});

/// 1 - (1/mu) int_0^inf S(x)^nu dx.
double generalized_gini_model(const UnivariateModel& F, const GiniOrder& nu,
                              const QuadratureSettings& q = {});

/// 2 int S(t) F(t) dt over the support.
double gmd_model(const UnivariateModel& F, const QuadratureSettings& q = {});

/// E|X - Y| as the double integral of |x - y| f(x) f(y) on a Gauss-Legendre
/// grid over the support truncated at q.tail_cutoff_survival. Independent of
/// gmd_model and kept as its cross-check.
double gmd_double_integral(const UnivariateModel& F, const QuadratureSettings& q = {});

/// Plug-in indices of a sample, built from the empirical CDF F_n.
///
///  * lorenz: polygon through (i/n, S_i/S_n), i = 0..n, S_i the partial sums
///    of the sorted sample.
///  * gini: one minus twice the polygon area, 1 - (1/n) sum (L_{i-1} + L_i).
///  * generalized_gini: 1 - (1/xbar) int S_n(x)^nu dx with the right-continuous
///    empirical survival S_n, integrated exactly over its steps:
///    x_(1) + sum_{i=1}^{n-1} ((n-i)/n)^nu (x_(i+1) - x_(i)). Tied values give
///    zero-width steps, so ties aggregate automatically. At nu = 2 this equals
///    the polygon Gini.
///  * gmd: (2/n^2) sum_{i<j} |x_i - x_j| (equal to 2 int F_n S_n).
struct EmpiricalIndices {
  std::vector<LorenzPoint> lorenz;
  double gini = 0.0;
  double generalized_gini = 0.0;
  double gmd = 0.0;
};

/// Requires n >= 2, all values >= 0 and a positive mean.
EmpiricalIndices empirical_indices(const Sample& s, const GiniOrder& nu);

/// (2/n^2) sum_{i<j} |x_i - x_j|; any real values, n >= 2.
double empirical_gmd(const Sample& s);

/// "u,L" CSV with a header row, full precision.
std::string lorenz_csv(const std::vector<LorenzPoint>& points);

}  // namespace ginient
