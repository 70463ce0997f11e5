#pragma once

#include <cstddef>
#include <functional>
#include <vector>

namespace ginient {

struct MinimizeResult {
  double x = 0.0;
  double fx = 0.0;
  std::size_t iterations = 0;
  bool converged = false;
  std::vector<double> trace;  // abscissae of the last few iterations
};

/// Brent's method (golden section with parabolic steps) for a unimodal f on
/// [lo, hi]. Stops once the bracket around the minimum is within `tol`
/// (absolute, in x). Never throws; check `converged`.
MinimizeResult brent_minimize(const std::function<double(double)>& f, double lo, double hi,
                              double tol, std::size_t max_iterations = 500);

}  // namespace ginient
