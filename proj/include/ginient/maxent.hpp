#pragma once

#include <optional>
#include <string>
#include <vector>

#include "ginient/entropy.hpp"
#include "ginient/inequality.hpp"
#include "ginient/model.hpp"
#include "ginient/quadrature.hpp"
#include "ginient/sample.hpp"

namespace ginient {

/// Mathai's pathway density c x^(gamma-1) [1 - a(1-alpha) x^delta]^(1/(1-alpha)).
///
/// alpha < 1 gives a generalized type-1 beta law on (0, (a(1-alpha))^(-1/delta)),
/// alpha > 1 a generalized type-2 beta law on (0, inf), and the gamma_limit()
/// constructor the alpha -> 1 form c x^(gamma-1) exp(-a x^delta). The
/// normalizing constant is found by adaptive quadrature and re-verified on a
/// split partition at construction; the CDF is integrated on demand.
class PathwayModel final : public UnivariateModel {
 public:
  /// Throws DomainError for a, delta, gamma <= 0, alpha == 1, or a type-2 tail
  /// that is not integrable (delta / (alpha - 1) <= gamma).
  PathwayModel(double a, double delta, double gamma, double alpha, const QuadratureSettings& q = {});
  static PathwayModel gamma_limit(double a, double delta, double gamma, const QuadratureSettings& q = {});

  std::string family() const override { return "pathway"; }
  std::vector<double> parameters() const override { return {a_, delta_, gamma_, alpha_}; }
  Support support() const override;

  double pdf(double x) const override;
  double log_pdf(double x) const override;
  double cdf(double x) const override;
  double survival(double x) const override;

  double a() const { return a_; }
  double delta() const { return delta_; }
  double gamma() const { return gamma_; }
  double alpha() const { return alpha_; }
  bool is_gamma_limit() const { return gamma_limit_; }
  double normalizing_constant() const { return c_norm_; }

 private:
  struct GammaLimitTag {};
  PathwayModel(GammaLimitTag, double a, double delta, double gamma, const QuadratureSettings& q);
  void normalize();
  double log_kernel(double x) const;

  double a_;
  double delta_;
  double gamma_;
  double alpha_;
  bool gamma_limit_;
  QuadratureSettings q_;
  double upper_;
  double c_norm_ = 0.0;
};

/// pathway_density: the model's pdf, 0 outside the support.
double pathway_density(const PathwayModel& m, double x);

/// Maximum-entropy law under a fixed generalized Gini index: a unit-scale
/// Lomax with shape beta = (alpha - 2) / (2 - nu - alpha).
///
/// Valid for alpha < 2, alpha != 1, nu > 1 and nu + alpha > 2; beta > 0 then
/// follows. With nu = 2 (the GMD constraint) beta = (2 - alpha) / alpha.
class MaxEntLomax final : public UnivariateModel {
 public:
  MaxEntLomax(const EntropyOrder& alpha, const GiniOrder& nu);
  /// Inverse map alpha = (2 + 2 beta - beta nu) / (1 + beta).
  static MaxEntLomax from_beta(double beta, const GiniOrder& nu);

  std::string family() const override { return "maxentlomax"; }
  /// The free parameter reported by fits is the entropy order alpha.
  std::vector<double> parameters() const override { return {alpha_}; }
  Support support() const override { return {0.0, std::numeric_limits<double>::infinity(), true, false}; }

  double pdf(double x) const override;
  double log_pdf(double x) const override;
  double cdf(double x) const override;
  double survival(double x) const override;

  /// ((alpha-2)/(2-nu-alpha)) (1+x)^(nu/(2-nu-alpha)): the density written in
  /// the orders instead of beta.
  double pdf_from_orders(double x) const;

  double alpha() const { return alpha_; }
  double nu() const { return nu_; }
  double beta() const { return beta_; }

  /// lambda_3 = beta^(2-alpha), the Gini-constraint multiplier that makes the
  /// Euler residual vanish (lambda_2 = 0).
  double certificate_multiplier() const;

 private:
  double alpha_;
  double nu_;
  double beta_;
};

double maxent_lomax_pdf(const MaxEntLomax& m, double x);
double maxent_lomax_cdf(const MaxEntLomax& m, double x);

/// Bounded-support maximum-entropy law (only the lambda_2 multiplier active):
/// S(x) = [lambda_2^(1/(2-alpha)) (1-alpha)(c-x)/(2-alpha)]^((2-alpha)/(1-alpha))
/// on [0, c]. S(0) = 1 ties lambda_2 to c; alpha < 1 and c > 0.
class BoundedMaxEnt final : public UnivariateModel {
 public:
  BoundedMaxEnt(const EntropyOrder& alpha, double c);
  static BoundedMaxEnt from_multiplier(const EntropyOrder& alpha, double lambda2);

  std::string family() const override { return "boundedmaxent"; }
  std::vector<double> parameters() const override { return {alpha_, c_}; }
  Support support() const override { return {0.0, c_, true, true}; }

  double pdf(double x) const override;
  double cdf(double x) const override;
  double survival(double x) const override;

  double alpha() const { return alpha_; }
  double c() const { return c_; }
  double lambda2() const { return lambda2_; }

 private:
  double alpha_;
  double c_;
  double lambda2_;
};

/// Closed-form survival on [0, c], clipped to [0, 1]. Throws DomainError for x
/// outside [0, c].
double bounded_maxent_survival(const BoundedMaxEnt& b, double x);

/// f(x)^(2-alpha) - lambda2 S(x) - lambda3 S(x)^nu: zero everywhere on the
/// support iff the model solves the Euler equation with these multipliers.
/// Also serves as a check for candidate solutions when both multipliers are
/// non-zero, which has no closed form.
double euler_ode_residual(const UnivariateModel& model, const EntropyOrder& alpha, const GiniOrder& nu,
                          double lambda2, double lambda3, double x);

/// beta = n / sum ln(1 + x_i), mapped back to alpha for the given nu. Throws
/// DomainError for negative values, an all-zero sample, or an alpha outside
/// the admissible region (beta = 1 / (nu - 1) gives alpha = 1).
MaxEntLomax mle_maxent_lomax(const Sample& s, const GiniOrder& nu);

/// Constraint values of a fitted maxent law where finite: the mean, the
/// generalized-Gini integral eta = int S^nu and phi = int S^2. Empty when the
/// integral diverges.
struct ConstraintValues {
  std::optional<double> mean;
  std::optional<double> eta;
  std::optional<double> phi;
  std::optional<double> generalized_gini;
};
ConstraintValues constraint_values(const MaxEntLomax& m, const QuadratureSettings& q = {});

}  // namespace ginient
