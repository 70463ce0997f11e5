#pragma once

#include <cstddef>
#include <limits>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "ginient/inequality.hpp"
#include "ginient/model.hpp"
#include "ginient/optimize.hpp"
#include "ginient/sample.hpp"

namespace ginient {

/// One row of a model comparison. Every family here has one free parameter,
/// so aic = 2 - 2 loglik and bic = ln n - 2 loglik. A failed fit keeps its
/// family name and n, carries `error`, and leaves the numbers NaN.
struct FitReport {
  static constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();

  std::string family;
  double mle = kNaN;
  double loglik = kNaN;
  double ks = kNaN;
  double pvalue = kNaN;
  double aic = kNaN;
  double bic = kNaN;
  std::size_t n = 0;
  std::optional<std::string> warning;
  std::optional<std::string> error;

  bool ok() const { return !error.has_value(); }
};

/// Search bracket and tolerance of the numerical likelihood maximization.
struct MleSearch {
  double lower = 1e-6;
  double upper = 10.0;
  double tolerance = 1e-9;  // absolute, in theta
  std::size_t max_iterations = 500;
  double edge_margin = 1e-4;
};

/// Numerical MLE of a one-parameter family (not maxentlomax) by Brent's
/// method on -loglik. The bracket is widened once (lower / 1000 or
/// upper * 1000) when the optimum lands within `edge_margin` of an edge.
/// Throws FitError with the last iterates when the search does not converge.
struct NumericFit {
  double theta = 0.0;
  double loglik = 0.0;
  bool at_edge = false;
  MinimizeResult search;
};
NumericFit fit_mle_numeric(std::string_view family, const Sample& s, const MleSearch& search = {});

/// Maximum-likelihood fit with KS, p-value, AIC and BIC. Closed forms for
/// exponential (1 / mean), lindley and maxentlomax (which needs `nu`); the
/// other families go through fit_mle_numeric. Requires n >= 2.
FitReport fit_mle(std::string_view family, const Sample& s, std::optional<GiniOrder> nu = {});

/// Lindley closed form (-(m - 1) + sqrt((m - 1)^2 + 8m)) / (2m), m the mean.
double lindley_mle(const Sample& s);

/// D_n = sup |F_n - F|, evaluated at the distinct order statistics with the
/// empirical CDF stepping over each group of ties.
double ks_statistic(const UnivariateModel& m, const Sample& s);

enum class KsMethod { exact, asymptotic };

/// P(D_n >= d) from the finite-n Kolmogorov distribution (Marsaglia, Tsang
/// and Wang 2003 matrix power).
double ks_pvalue_exact(double d, std::size_t n);

/// P(K > sqrt(n) d) from the limiting Kolmogorov distribution.
double ks_pvalue_asymptotic(double d, std::size_t n);

double ks_pvalue(double d, std::size_t n, KsMethod method);

/// The convention of R's ks.test: exact when n < 100 and the sample has no
/// ties, asymptotic otherwise.
KsMethod default_ks_method(const Sample& s);

struct KsTest {
  double statistic = 0.0;
  double pvalue = 0.0;
  KsMethod method = KsMethod::exact;
};
KsTest ks_test(const UnivariateModel& m, const Sample& s);

struct InformationCriteria {
  double aic = 0.0;
  double bic = 0.0;
};
InformationCriteria information_criteria(double loglik, std::size_t k, std::size_t n);

/// Fits every registry family and sorts the rows by AIC (failed rows last).
/// Fit errors are recorded per row and never abort the remaining families.
std::vector<FitReport> compare_all(const Sample& s, const GiniOrder& nu);

}  // namespace ginient
