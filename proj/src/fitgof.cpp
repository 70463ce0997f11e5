#include "ginient/fitgof.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>

#include "ginient/errors.hpp"
#include "ginient/families.hpp"
#include "ginient/maxent.hpp"

namespace ginient {

namespace {

std::string fmt(double v) {
  std::ostringstream os;
  os.precision(10);
  os << v;
  return os.str();
}

bool has_ties(const Sample& s) {
  const std::vector<double> x = s.sorted();
  return std::adjacent_find(x.begin(), x.end()) != x.end();
}

}  // namespace

// ------------------------------------------------------------------- MLE

NumericFit fit_mle_numeric(std::string_view family, const Sample& s, const MleSearch& search) {
  if (family == "maxentlomax") throw DomainError("maxentlomax is fitted in closed form");
  if (!is_known_family(family)) throw DomainError("unknown family '" + std::string(family) + "'");
  if (!s.all_non_negative()) throw DomainError("family fits need non-negative observations");

  auto negative_loglik = [&](double theta) {
    try {
      return -loglik(*make_model(family, theta), s);
    } catch (const ZeroDensityError&) {
      return std::numeric_limits<double>::infinity();
    }
  };

  double lo = search.lower;
  double hi = search.upper;
  NumericFit fit;
  for (int attempt = 0; attempt < 2; ++attempt) {
    fit.search = brent_minimize(negative_loglik, lo, hi, search.tolerance, search.max_iterations);
    if (!fit.search.converged) {
      throw FitError("likelihood search for '" + std::string(family) + "' did not converge in " +
                         std::to_string(search.max_iterations) + " iterations",
                     fit.search.trace);
    }
    fit.theta = fit.search.x;
    fit.loglik = -fit.search.fx;
    const bool low_edge = fit.theta - lo < search.edge_margin;
    const bool high_edge = hi - fit.theta < search.edge_margin;
    fit.at_edge = low_edge || high_edge;
    if (!fit.at_edge) break;
    if (low_edge) lo /= 1000.0;
    if (high_edge) hi *= 1000.0;
  }
  return fit;
}

double lindley_mle(const Sample& s) {
  const double m = s.mean();
  if (!(m > 0.0)) throw DomainError("Lindley MLE needs a positive sample mean");
  return (-(m - 1.0) + std::sqrt((m - 1.0) * (m - 1.0) + 8.0 * m)) / (2.0 * m);
}

FitReport fit_mle(std::string_view family, const Sample& s, std::optional<GiniOrder> nu) {
  if (!is_known_family(family)) throw DomainError("unknown family '" + std::string(family) + "'");
  if (s.size() < 2) throw DomainError("fitting needs at least two observations");
  if (!s.all_non_negative()) throw DomainError("family fits need non-negative observations");
  if (family == "maxentlomax" && !nu) throw DomainError("family 'maxentlomax' needs a Gini order nu");
  if (family != "maxentlomax" && nu) throw DomainError("nu applies only to family 'maxentlomax'");

  FitReport report;
  report.family = std::string(family);
  report.n = s.size();

  ModelPtr model;
  if (family == "maxentlomax") {
    auto fitted = std::make_shared<MaxEntLomax>(mle_maxent_lomax(s, *nu));
    report.mle = fitted->alpha();
    model = fitted;
  } else if (family == "exponential") {
    const double m = s.mean();
    if (!(m > 0.0)) throw DomainError("exponential MLE needs a positive sample mean");
    report.mle = 1.0 / m;
    model = make_model(family, report.mle);
  } else if (family == "lindley") {
    report.mle = lindley_mle(s);
    model = make_model(family, report.mle);
  } else {
    const NumericFit fit = fit_mle_numeric(family, s);
    report.mle = fit.theta;
    if (fit.at_edge) {
      report.warning = "maximum at the search bracket edge (theta = " + fmt(fit.theta) + ")";
    }
    model = make_model(family, report.mle);
  }

  report.loglik = loglik(*model, s);
  const KsTest ks = ks_test(*model, s);
  report.ks = ks.statistic;
  report.pvalue = ks.pvalue;
  const InformationCriteria ic = information_criteria(report.loglik, 1, report.n);
  report.aic = ic.aic;
  report.bic = ic.bic;
  return report;
}

// -------------------------------------------------------------------- KS

double ks_statistic(const UnivariateModel& m, const Sample& s) {
  const std::vector<double> x = s.sorted();
  const double n = static_cast<double>(x.size());
  double d = 0.0;
  std::size_t i = 0;
  while (i < x.size()) {
    std::size_t j = i;
    while (j < x.size() && x[j] == x[i]) ++j;
    const double F = m.cdf(x[i]);
    const double before = static_cast<double>(i) / n;
    const double after = static_cast<double>(j) / n;
    d = std::max({d, after - F, F - before});
    i = j;
  }
  return std::clamp(d, 0.0, 1.0);
}

namespace {

// Matrix power with a decimal exponent kept beside the mantissa matrix.
void scaled_power(const std::vector<double>& a, int ea, std::vector<double>& v, int& ev, int m, std::size_t n) {
  if (n == 1) {
    v = a;
    ev = ea;
    return;
  }
  scaled_power(a, ea, v, ev, m, n / 2);
  auto multiply = [m](const std::vector<double>& x, const std::vector<double>& y) {
    std::vector<double> out(static_cast<std::size_t>(m) * m, 0.0);
    for (int i = 0; i < m; ++i) {
      for (int k = 0; k < m; ++k) {
        const double xik = x[i * m + k];
        if (xik == 0.0) continue;
        for (int j = 0; j < m; ++j) out[i * m + j] += xik * y[k * m + j];
      }
    }
    return out;
  };
  std::vector<double> b = multiply(v, v);
  int eb = 2 * ev;
  if (n % 2 == 0) {
    v = std::move(b);
    ev = eb;
  } else {
    v = multiply(a, b);
    ev = ea + eb;
  }
  if (v[(m / 2) * m + m / 2] > 1e140) {
    for (double& e : v) e *= 1e-140;
    ev += 140;
  }
}

// P(D_n < d).
double kolmogorov_cdf_exact(double d, std::size_t n) {
  const double nd = static_cast<double>(n) * d;
  const int k = static_cast<int>(nd) + 1;
  const int m = 2 * k - 1;
  const double h = k - nd;

  std::vector<double> H(static_cast<std::size_t>(m) * m);
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j) H[i * m + j] = (i - j + 1 < 0) ? 0.0 : 1.0;
  for (int i = 0; i < m; ++i) {
    H[i * m] -= std::pow(h, i + 1);
    H[(m - 1) * m + i] -= std::pow(h, m - i);
  }
  H[(m - 1) * m] += (2.0 * h - 1.0 > 0.0) ? std::pow(2.0 * h - 1.0, m) : 0.0;
  for (int i = 0; i < m; ++i) {
    for (int j = 0; j < m; ++j) {
      if (i - j + 1 > 0) {
        for (int g = 1; g <= i - j + 1; ++g) H[i * m + j] /= g;
      }
    }
  }

  std::vector<double> Q;
  int eQ = 0;
  scaled_power(H, 0, Q, eQ, m, n);
  double s = Q[(k - 1) * m + (k - 1)];
  for (std::size_t i = 1; i <= n; ++i) {
    s = s * static_cast<double>(i) / static_cast<double>(n);
    if (s < 1e-140) {
      s *= 1e140;
      eQ -= 140;
    }
  }
  return s * std::pow(10.0, eQ);
}

}  // namespace

double ks_pvalue_exact(double d, std::size_t n) {
  if (n == 0) throw DomainError("KS p-value needs n >= 1");
  if (!(d >= 0.0 && d <= 1.0)) throw DomainError("KS statistic must lie in [0, 1]");
  const double dn = static_cast<double>(n);
  if (d <= 0.5 / dn) return 1.0;
  if (d >= 1.0) return 0.0;
  return std::clamp(1.0 - kolmogorov_cdf_exact(d, n), 0.0, 1.0);
}

double ks_pvalue_asymptotic(double d, std::size_t n) {
  if (n == 0) throw DomainError("KS p-value needs n >= 1");
  if (!(d >= 0.0 && d <= 1.0)) throw DomainError("KS statistic must lie in [0, 1]");
  const double z = std::sqrt(static_cast<double>(n)) * d;
  if (z <= 0.0) return 1.0;
  if (z < 1.18) {
    // Jacobi theta form of P(K <= z); fast where the alternating series is slow.
    const double pi = std::numbers::pi;
    double cdf = 0.0;
    for (int k = 1; k <= 50; ++k) {
      const double odd = 2.0 * k - 1.0;
      cdf += std::exp(-odd * odd * pi * pi / (8.0 * z * z));
    }
    cdf *= std::sqrt(2.0 * pi) / z;
    return std::clamp(1.0 - cdf, 0.0, 1.0);
  }
  double p = 0.0;
  for (int k = 1; k <= 100; ++k) {
    const double term = std::exp(-2.0 * k * k * z * z);
    p += (k % 2 == 1) ? term : -term;
    if (term < 1e-300) break;
  }
  return std::clamp(2.0 * p, 0.0, 1.0);
}

double ks_pvalue(double d, std::size_t n, KsMethod method) {
  return method == KsMethod::exact ? ks_pvalue_exact(d, n) : ks_pvalue_asymptotic(d, n);
}

KsMethod default_ks_method(const Sample& s) {
  return (s.size() < 100 && !has_ties(s)) ? KsMethod::exact : KsMethod::asymptotic;
}

KsTest ks_test(const UnivariateModel& m, const Sample& s) {
  KsTest out;
  out.statistic = ks_statistic(m, s);
  out.method = default_ks_method(s);
  out.pvalue = ks_pvalue(out.statistic, s.size(), out.method);
  return out;
}

InformationCriteria information_criteria(double loglik, std::size_t k, std::size_t n) {
  if (n == 0 || k == 0) throw DomainError("information criteria need n >= 1 and k >= 1");
  const double dk = static_cast<double>(k);
  return {2.0 * dk - 2.0 * loglik, dk * std::log(static_cast<double>(n)) - 2.0 * loglik};
}

// --------------------------------------------------------------- compare

std::vector<FitReport> compare_all(const Sample& s, const GiniOrder& nu) {
  if (s.size() < 2) throw DomainError("comparison needs at least two observations");
  std::vector<FitReport> rows;
  for (const std::string& family : family_names()) {
    try {
      rows.push_back(family == "maxentlomax" ? fit_mle(family, s, nu) : fit_mle(family, s));
    } catch (const Error& e) {
      FitReport failed;
      failed.family = family;
      failed.n = s.size();
      failed.error = e.what();
      rows.push_back(std::move(failed));
    }
  }
  std::stable_sort(rows.begin(), rows.end(), [](const FitReport& a, const FitReport& b) {
    if (a.ok() != b.ok()) return a.ok();
    if (!a.ok()) return false;
    return a.aic < b.aic;
  });
  return rows;
}

}  // namespace ginient
