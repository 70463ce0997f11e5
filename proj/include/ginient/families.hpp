#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "ginient/model.hpp"
#include "ginient/sample.hpp"

namespace ginient {

/// One-parameter laws of the form f(x) = w(theta) * q_theta(x) * exp(-theta x)
/// on [0, inf), with q a low-degree polynomial. Subclasses supply the log
/// normalizer, the polynomial and the bracket B of the closed-form survival
/// S(x) = B(x) exp(-theta x). Densities are evaluated in log space so that
/// theta * x in the hundreds does not underflow the likelihood.
class PolyExponentialFamily : public UnivariateModel {
 public:
  explicit PolyExponentialFamily(double theta);

  double theta() const { return theta_; }
  std::vector<double> parameters() const override { return {theta_}; }
  Support support() const override { return {0.0, std::numeric_limits<double>::infinity(), true, false}; }

  double pdf(double x) const override;
  double log_pdf(double x) const override;
  double cdf(double x) const override;
  double survival(double x) const override;

 protected:
  virtual double log_weight() const = 0;
  virtual double polynomial(double x) const = 0;
  virtual double survival_bracket(double x) const = 0;

  double theta_;
};

/// theta e^{-theta x}
class Exponential final : public PolyExponentialFamily {
 public:
  using PolyExponentialFamily::PolyExponentialFamily;
  std::string family() const override { return "exponential"; }
  double cdf(double x) const override;

 protected:
  double log_weight() const override;
  double polynomial(double) const override { return 1.0; }
  double survival_bracket(double) const override { return 1.0; }
};

/// theta^2/(1+theta) (1+x) e^{-theta x}
class Lindley final : public PolyExponentialFamily {
 public:
  using PolyExponentialFamily::PolyExponentialFamily;
  std::string family() const override { return "lindley"; }

 protected:
  double log_weight() const override;
  double polynomial(double x) const override;
  double survival_bracket(double x) const override;
};

/// theta^3/(theta^2+2) (1+x^2) e^{-theta x}
class Akash final : public PolyExponentialFamily {
 public:
  using PolyExponentialFamily::PolyExponentialFamily;
  std::string family() const override { return "akash"; }

 protected:
  double log_weight() const override;
  double polynomial(double x) const override;
  double survival_bracket(double x) const override;
};

/// theta^4/(theta^4+6) (theta+x^3) e^{-theta x}
class Pranav final : public PolyExponentialFamily {
 public:
  using PolyExponentialFamily::PolyExponentialFamily;
  std::string family() const override { return "pranav"; }

 protected:
  double log_weight() const override;
  double polynomial(double x) const override;
  double survival_bracket(double x) const override;
};

/// theta^3/(theta^3+2) (theta+x^2) e^{-theta x}
class Ishitha final : public PolyExponentialFamily {
 public:
  using PolyExponentialFamily::PolyExponentialFamily;
  std::string family() const override { return "ishitha"; }

 protected:
  double log_weight() const override;
  double polynomial(double x) const override;
  double survival_bracket(double x) const override;
};

/// lambda^6/(lambda^6+120) (lambda+x^5) e^{-lambda x}; lambda is held in theta.
class RamAwadh final : public PolyExponentialFamily {
 public:
  using PolyExponentialFamily::PolyExponentialFamily;
  std::string family() const override { return "ramawadh"; }

 protected:
  double log_weight() const override;
  double polynomial(double x) const override;
  double survival_bracket(double x) const override;
};

/// theta^3/(theta^2+theta+2) (1+x+x^2) e^{-theta x}
class Sujatha final : public PolyExponentialFamily {
 public:
  using PolyExponentialFamily::PolyExponentialFamily;
  std::string family() const override { return "sujatha"; }

 protected:
  double log_weight() const override;
  double polynomial(double x) const override;
  double survival_bracket(double x) const override;
};

/// Uniform law on [lower, upper]. Not part of the fitting registry; used for
/// reference values and near-degenerate (point-mass-like) checks.
class Uniform final : public UnivariateModel {
 public:
  Uniform(double lower, double upper);
  std::string family() const override { return "uniform"; }
  std::vector<double> parameters() const override { return {lower_, upper_}; }
  Support support() const override { return {lower_, upper_, true, true}; }
  double pdf(double x) const override;
  double cdf(double x) const override;

 private:
  double lower_;
  double upper_;
};

/// Registry keys in table order.
const std::vector<std::string>& family_names();
bool is_known_family(std::string_view name);

/// Builds a registry model. For "maxentlomax", `theta` is the entropy order
/// alpha and `nu` (required) the Gini order. Throws DomainError on unknown
/// names or invalid parameters.
ModelPtr make_model(std::string_view name, double theta, std::optional<double> nu = {});

/// sum ln f(x_i). Throws ZeroDensityError naming the first observation with
/// zero density (including points outside the support).
double loglik(const UnivariateModel& m, const Sample& s);

}  // namespace ginient
