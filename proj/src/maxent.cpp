#include "ginient/maxent.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "ginient/errors.hpp"

namespace ginient {

namespace {

constexpr double kPathwayNormalizationTolerance = 1e-8;

std::string fmt(double v) {
  std::ostringstream os;
  os.precision(10);
  os << v;
  return os.str();
}

}  // namespace

// ---------------------------------------------------------------- pathway

PathwayModel::PathwayModel(double a, double delta, double gamma, double alpha, const QuadratureSettings& q)
    : a_(a), delta_(delta), gamma_(gamma), alpha_(alpha), gamma_limit_(false), q_(q) {
  if (!(a > 0.0) || !(delta > 0.0) || !(gamma > 0.0) || !std::isfinite(a) || !std::isfinite(delta) ||
      !std::isfinite(gamma)) {
    throw DomainError("pathway model needs a, delta, gamma > 0");
  }
  if (!std::isfinite(alpha) || alpha == 1.0) {
    throw DomainError("pathway alpha must be finite and != 1; use PathwayModel::gamma_limit");
  }
  if (alpha > 1.0 && !(delta / (alpha - 1.0) > gamma)) {
    throw DomainError("pathway type-2 tail is not integrable: need delta / (alpha - 1) > gamma (delta = " +
                      fmt(delta) + ", alpha = " + fmt(alpha) + ", gamma = " + fmt(gamma) + ")");
  }
  upper_ = alpha < 1.0 ? std::pow(a * (1.0 - alpha), -1.0 / delta) : std::numeric_limits<double>::infinity();
  normalize();
}

PathwayModel::PathwayModel(GammaLimitTag, double a, double delta, double gamma, const QuadratureSettings& q)
    : a_(a), delta_(delta), gamma_(gamma), alpha_(1.0), gamma_limit_(true), q_(q),
      upper_(std::numeric_limits<double>::infinity()) {
  if (!(a > 0.0) || !(delta > 0.0) || !(gamma > 0.0)) {
    throw DomainError("pathway model needs a, delta, gamma > 0");
  }
  normalize();
}

PathwayModel PathwayModel::gamma_limit(double a, double delta, double gamma, const QuadratureSettings& q) {
  return PathwayModel(GammaLimitTag{}, a, delta, gamma, q);
}

Support PathwayModel::support() const {
  return {0.0, upper_, false, false};
}

double PathwayModel::log_kernel(double x) const {
  const double log_power = (gamma_ - 1.0) * std::log(x);
  if (gamma_limit_) return log_power - a_ * std::pow(x, delta_);
  return log_power + std::log1p(-a_ * (1.0 - alpha_) * std::pow(x, delta_)) / (1.0 - alpha_);
}

void PathwayModel::normalize() {
  auto kernel = [&](double x) {
    if (!(x > 0.0) || !(x < upper_)) return 0.0;
    return std::exp(log_kernel(x));
  };
  double total = 0.0;
  double split_total = 0.0;
  try {
    if (std::isfinite(upper_)) {
      // Long supports (alpha just below 1) put all the mass in a narrow peak
      // near 0, which a plain rule on [0, upper] can step over entirely.
      total = integrate_log_scaled(kernel, 0.0, upper_, q_).value;
      const double mid = std::min(1.0, 0.5 * upper_);
      split_total = integrate(kernel, 0.0, mid, q_).value + integrate_log_scaled(kernel, mid, upper_, q_).value;
    } else {
      total = integrate_half_line(kernel, 0.0, q_).value;
      split_total = integrate(kernel, 0.0, 1.0, q_).value + integrate_half_line(kernel, 1.0, q_).value;
    }
  } catch (const DivergentIntegralError& e) {
    throw DomainError(std::string("pathway model is not normalizable: ") + e.what());
  }
  if (!(total > 0.0) || !std::isfinite(total)) throw DomainError("pathway model is not normalizable");
  c_norm_ = 1.0 / total;
  if (std::abs(c_norm_ * split_total - 1.0) > kPathwayNormalizationTolerance) {
    throw DomainError("pathway normalization failed verification (integral " + fmt(c_norm_ * split_total) + ")");
  }
}

double PathwayModel::log_pdf(double x) const {
  if (!(x > 0.0) || !(x < upper_)) return -std::numeric_limits<double>::infinity();
  return std::log(c_norm_) + log_kernel(x);
}

double PathwayModel::pdf(double x) const {
  if (!(x > 0.0) || !(x < upper_)) return 0.0;
  return c_norm_ * std::exp(log_kernel(x));
}

double PathwayModel::cdf(double x) const {
  if (!(x > 0.0)) return 0.0;
  if (x >= upper_) return 1.0;
  if (x > 1.0) return 1.0 - survival(x);
  const double mass = integrate([&](double t) { return pdf(t); }, 0.0, x, q_).value;
  return std::clamp(mass, 0.0, 1.0);
}

double PathwayModel::survival(double x) const {
  if (!(x > 0.0)) return 1.0;
  if (x >= upper_) return 0.0;
  if (x <= 1.0) return 1.0 - cdf(x);
  auto density = [&](double t) { return pdf(t); };
  const double mass = std::isfinite(upper_) ? integrate_log_scaled(density, x, upper_, q_).value
                                            : integrate_half_line(density, x, q_).value;
  return std::clamp(mass, 0.0, 1.0);
}

double pathway_density(const PathwayModel& m, double x) { return m.pdf(x); }

// ------------------------------------------------------------- maxent lomax

MaxEntLomax::MaxEntLomax(const EntropyOrder& alpha, const GiniOrder& nu)
    : alpha_(alpha.alpha()), nu_(nu.nu()), beta_(0.0) {
  if (alpha.is_shannon()) throw DomainError("maxent Lomax needs alpha != 1");
  if (!(nu_ + alpha_ > 2.0)) {
    throw DomainError("maxent Lomax needs nu + alpha > 2 (alpha = " + fmt(alpha_) + ", nu = " + fmt(nu_) + ")");
  }
  beta_ = (alpha_ - 2.0) / (2.0 - nu_ - alpha_);
  if (!(beta_ > 0.0) || !std::isfinite(beta_)) {
    throw DomainError("maxent Lomax shape is not positive (beta = " + fmt(beta_) + ")");
  }
}

MaxEntLomax MaxEntLomax::from_beta(double beta, const GiniOrder& nu) {
  if (!(beta > 0.0) || !std::isfinite(beta)) throw DomainError("Lomax shape beta must be positive");
  const double alpha = (2.0 + 2.0 * beta - beta * nu.nu()) / (1.0 + beta);
  if (alpha == 1.0) {
    throw DomainError("beta = " + fmt(beta) + " maps to alpha = 1 for nu = " + fmt(nu.nu()) +
                      ", outside the admissible region");
  }
  return MaxEntLomax(EntropyOrder(alpha), nu);
}

double MaxEntLomax::pdf(double x) const {
  if (x < 0.0) return 0.0;
  return beta_ * std::exp(-(beta_ + 1.0) * std::log1p(x));
}

double MaxEntLomax::log_pdf(double x) const {
  if (x < 0.0) return -std::numeric_limits<double>::infinity();
  return std::log(beta_) - (beta_ + 1.0) * std::log1p(x);
}

double MaxEntLomax::cdf(double x) const {
  if (x <= 0.0) return 0.0;
  return -std::expm1(-beta_ * std::log1p(x));
}

double MaxEntLomax::survival(double x) const {
  if (x <= 0.0) return 1.0;
  return std::exp(-beta_ * std::log1p(x));
}

double MaxEntLomax::pdf_from_orders(double x) const {
  if (x < 0.0) return 0.0;
  const double denom = 2.0 - nu_ - alpha_;
  return ((alpha_ - 2.0) / denom) * std::pow(1.0 + x, nu_ / denom);
}

double MaxEntLomax::certificate_multiplier() const { return std::pow(beta_, 2.0 - alpha_); }

double maxent_lomax_pdf(const MaxEntLomax& m, double x) { return m.pdf(x); }
double maxent_lomax_cdf(const MaxEntLomax& m, double x) { return m.cdf(x); }

// ---------------------------------------------------------- bounded maxent

BoundedMaxEnt::BoundedMaxEnt(const EntropyOrder& alpha, double c) : alpha_(alpha.alpha()), c_(c), lambda2_(0.0) {
  if (alpha.is_shannon() || !(alpha_ < 1.0)) {
    throw DomainError("bounded maxent law needs alpha < 1 (got " + fmt(alpha_) + ")");
  }
  if (!(c > 0.0) || !std::isfinite(c)) throw DomainError("bounded maxent endpoint c must be positive");
  lambda2_ = std::pow((2.0 - alpha_) / ((1.0 - alpha_) * c_), 2.0 - alpha_);
}

BoundedMaxEnt BoundedMaxEnt::from_multiplier(const EntropyOrder& alpha, double lambda2) {
  if (!(lambda2 > 0.0)) throw DomainError("bounded maxent multiplier lambda2 must be positive");
  const double a = alpha.alpha();
  if (alpha.is_shannon() || !(a < 1.0)) throw DomainError("bounded maxent law needs alpha < 1");
  const double c = (2.0 - a) / ((1.0 - a) * std::pow(lambda2, 1.0 / (2.0 - a)));
  return BoundedMaxEnt(alpha, c);
}

double bounded_maxent_survival(const BoundedMaxEnt& b, double x) {
  if (!(x >= 0.0 && x <= b.c())) {
    throw DomainError("bounded maxent survival is defined on [0, " + fmt(b.c()) + "] (x = " + fmt(x) + ")");
  }
  const double a = b.alpha();
  const double base = std::pow(b.lambda2(), 1.0 / (2.0 - a)) * (1.0 - a) * (b.c() - x) / (2.0 - a);
  return std::clamp(std::pow(base, (2.0 - a) / (1.0 - a)), 0.0, 1.0);
}

double BoundedMaxEnt::survival(double x) const {
  if (x <= 0.0) return 1.0;
  if (x >= c_) return 0.0;
  return bounded_maxent_survival(*this, x);
}

double BoundedMaxEnt::cdf(double x) const { return 1.0 - survival(x); }

double BoundedMaxEnt::pdf(double x) const {
  if (x < 0.0 || x > c_) return 0.0;
  // -dS/dx = (lambda2 S)^(1/(2-alpha)).
  return std::pow(lambda2_ * survival(x), 1.0 / (2.0 - alpha_));
}

// --------------------------------------------------------------- residual

double euler_ode_residual(const UnivariateModel& model, const EntropyOrder& alpha, const GiniOrder& nu,
                          double lambda2, double lambda3, double x) {
  if (alpha.is_shannon()) throw DomainError("Euler residual needs alpha != 1");
  const double f = model.pdf(x);
  const double s = model.survival(x);
  const double f_term = f > 0.0 ? std::pow(f, alpha.power()) : 0.0;
  const double s_nu = s > 0.0 ? std::pow(s, nu.nu()) : 0.0;
  return f_term - lambda2 * s - lambda3 * s_nu;
}

// -------------------------------------------------------------------- MLE

MaxEntLomax mle_maxent_lomax(const Sample& s, const GiniOrder& nu) {
  if (!s.all_non_negative()) throw DomainError("maxent Lomax fit needs non-negative observations");
  double log_sum = 0.0;
  for (double v : s.values()) log_sum += std::log1p(v);
  if (!(log_sum > 0.0)) throw DomainError("maxent Lomax fit is undefined for an all-zero sample");
  const double beta = static_cast<double>(s.size()) / log_sum;
  const double alpha = (2.0 + 2.0 * beta - beta * nu.nu()) / (1.0 + beta);
  if (alpha == 1.0 || !(alpha < 2.0) || !(nu.nu() + alpha > 2.0)) {
    throw DomainError("fitted beta = " + fmt(beta) + " gives alpha = " + fmt(alpha) + " for nu = " + fmt(nu.nu()) +
                      ", outside alpha < 2, alpha != 1, nu + alpha > 2");
  }
  return MaxEntLomax(EntropyOrder(alpha), nu);
}

ConstraintValues constraint_values(const MaxEntLomax& m, const QuadratureSettings& q) {
  ConstraintValues out;
  auto survival_power_integral = [&](double power) -> std::optional<double> {
    try {
      return integrate_half_line([&](double x) { return std::pow(m.survival(x), power); }, 0.0, q).value;
    } catch (const DivergentIntegralError&) {
      return std::nullopt;
    }
  };
  try {
    out.mean = mean_model(m, q);
  } catch (const InfiniteMeanError&) {
  }
  if (m.beta() * m.nu() > 1.0) out.eta = survival_power_integral(m.nu());
  if (2.0 * m.beta() > 1.0) out.phi = survival_power_integral(2.0);
  if (out.mean && out.eta) out.generalized_gini = 1.0 - *out.eta / *out.mean;
  return out;
}

}  // namespace ginient
