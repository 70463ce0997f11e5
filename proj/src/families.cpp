#include "ginient/families.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "ginient/errors.hpp"
#include "ginient/maxent.hpp"

namespace ginient {

PolyExponentialFamily::PolyExponentialFamily(double theta) : theta_(theta) {
  if (!std::isfinite(theta) || !(theta > 0.0)) {
    std::ostringstream os;
    os << "family parameter must be positive and finite (got " << theta << ")";
    throw DomainError(os.str());
  }
}

double PolyExponentialFamily::log_pdf(double x) const {
  if (x < 0.0) return -std::numeric_limits<double>::infinity();
  const double poly = polynomial(x);
  // A polynomial that overflows needs x > 1e61, where e^(-theta x) has long
  // since underflowed for any usable theta.
  if (!std::isfinite(poly)) return -std::numeric_limits<double>::infinity();
  return log_weight() + std::log(poly) - theta_ * x;
}

double PolyExponentialFamily::pdf(double x) const {
  if (x < 0.0) return 0.0;
  return std::exp(log_pdf(x));
}

double PolyExponentialFamily::survival(double x) const {
  if (x <= 0.0) return 1.0;
  const double decay = std::exp(-theta_ * x);
  if (decay == 0.0) return 0.0;
  const double bracket = survival_bracket(x);
  if (!std::isfinite(bracket)) return 0.0;
  return bracket * decay;
}

double PolyExponentialFamily::cdf(double x) const { return 1.0 - survival(x); }

double Exponential::log_weight() const { return std::log(theta_); }

double Exponential::cdf(double x) const {
  if (x <= 0.0) return 0.0;
  return -std::expm1(-theta_ * x);
}

double Lindley::log_weight() const { return 2.0 * std::log(theta_) - std::log1p(theta_); }
double Lindley::polynomial(double x) const { return 1.0 + x; }
double Lindley::survival_bracket(double x) const { return 1.0 + theta_ * x / (1.0 + theta_); }

double Akash::log_weight() const { return 3.0 * std::log(theta_) - std::log(theta_ * theta_ + 2.0); }
double Akash::polynomial(double x) const { return 1.0 + x * x; }
double Akash::survival_bracket(double x) const {
  const double t = theta_;
  return 1.0 + t * x * (t * x + 2.0) / (t * t + 2.0);
}

double Pranav::log_weight() const { return 4.0 * std::log(theta_) - std::log(std::pow(theta_, 4) + 6.0); }
double Pranav::polynomial(double x) const { return theta_ + x * x * x; }
double Pranav::survival_bracket(double x) const {
  const double t = theta_;
  const double tx = t * x;
  return 1.0 + tx * (tx * tx + 3.0 * tx + 6.0) / (std::pow(t, 4) + 6.0);
}

double Ishitha::log_weight() const { return 3.0 * std::log(theta_) - std::log(std::pow(theta_, 3) + 2.0); }
double Ishitha::polynomial(double x) const { return theta_ + x * x; }
double Ishitha::survival_bracket(double x) const {
  const double t = theta_;
  return 1.0 + t * x * (t * x + 2.0) / (std::pow(t, 3) + 2.0);
}

double RamAwadh::log_weight() const { return 6.0 * std::log(theta_) - std::log(std::pow(theta_, 6) + 120.0); }
double RamAwadh::polynomial(double x) const { return theta_ + std::pow(x, 5); }
double RamAwadh::survival_bracket(double x) const {
  const double lx = theta_ * x;
  const double inner = (((lx + 5.0) * lx + 20.0) * lx + 60.0) * lx + 120.0;
  return 1.0 + lx * inner / (std::pow(theta_, 6) + 120.0);
}

double Sujatha::log_weight() const {
  return 3.0 * std::log(theta_) - std::log(theta_ * theta_ + theta_ + 2.0);
}
double Sujatha::polynomial(double x) const { return 1.0 + x + x * x; }
double Sujatha::survival_bracket(double x) const {
  const double t = theta_;
  return 1.0 + t * x * (t * x + t + 2.0) / (t * t + t + 2.0);
}

Uniform::Uniform(double lower, double upper) : lower_(lower), upper_(upper) {
  if (!std::isfinite(lower) || !std::isfinite(upper) || !(upper > lower)) {
    throw DomainError("uniform law needs finite lower < upper");
  }
}

double Uniform::pdf(double x) const { return (x >= lower_ && x <= upper_) ? 1.0 / (upper_ - lower_) : 0.0; }

double Uniform::cdf(double x) const {
  if (x <= lower_) return 0.0;
  if (x >= upper_) return 1.0;
  return (x - lower_) / (upper_ - lower_);
}

const std::vector<std::string>& family_names() {
  static const std::vector<std::string> names = {"maxentlomax", "exponential", "lindley", "akash",
                                                 "pranav",      "ishitha",     "ramawadh", "sujatha"};
  return names;
}

bool is_known_family(std::string_view name) {
  const auto& names = family_names();
  return std::find(names.begin(), names.end(), name) != names.end();
}

ModelPtr make_model(std::string_view name, double theta, std::optional<double> nu) {
  if (name == "maxentlomax") {
    if (!nu) throw DomainError("family 'maxentlomax' needs a Gini order nu");
    return std::make_shared<MaxEntLomax>(EntropyOrder(theta), GiniOrder(*nu));
  }
  if (name == "exponential") return std::make_shared<Exponential>(theta);
  if (name == "lindley") return std::make_shared<Lindley>(theta);
  if (name == "akash") return std::make_shared<Akash>(theta);
  if (name == "pranav") return std::make_shared<Pranav>(theta);
  if (name == "ishitha") return std::make_shared<Ishitha>(theta);
  if (name == "ramawadh") return std::make_shared<RamAwadh>(theta);
  if (name == "sujatha") return std::make_shared<Sujatha>(theta);
  throw DomainError("unknown family '" + std::string(name) + "'");
}

double loglik(const UnivariateModel& m, const Sample& s) {
  double total = 0.0;
  const auto values = s.values();
  for (std::size_t i = 0; i < values.size(); ++i) {
    const double lp = m.log_pdf(values[i]);
    if (std::isnan(lp) || lp == -std::numeric_limits<double>::infinity()) {
      throw ZeroDensityError(i, values[i]);
    }
    total += lp;
  }
  return total;
}

}  // namespace ginient
