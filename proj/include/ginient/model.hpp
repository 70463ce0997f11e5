#pragma once

#include <cmath>
#include <limits>
#include <memory>
#include <string>
#include <vector>

namespace ginient {

/// Interval with open/closed endpoints. `upper` may be +infinity.
struct Support {
  double lower = 0.0;
  double upper = std::numeric_limits<double>::infinity();
  bool lower_closed = true;
  bool upper_closed = false;

  bool bounded_above() const { return std::isfinite(upper); }
  bool contains(double x) const {
    const bool above = lower_closed ? x >= lower : x > lower;
    const bool below = upper_closed ? x <= upper : x < upper;
    return above && below;
  }
};

/// Common contract of every continuous distribution in the library.
/// Implementations are immutable once constructed and safe to share across
/// threads.
class UnivariateModel {
 public:
  virtual ~UnivariateModel() = default;

  /// Canonical lowercase family name (the registry key).
  virtual std::string family() const = 0;
  virtual std::vector<double> parameters() const = 0;
  virtual Support support() const = 0;

  /// Density; 0 outside the support.
  virtual double pdf(double x) const = 0;
  virtual double cdf(double x) const = 0;

  virtual double log_pdf(double x) const { return std::log(pdf(x)); }
  virtual double survival(double x) const { return 1.0 - cdf(x); }
};

using ModelPtr = std::shared_ptr<const UnivariateModel>;

}  // namespace ginient
