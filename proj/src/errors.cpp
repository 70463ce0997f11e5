#include "ginient/errors.hpp"

#include <sstream>
#include <utility>

namespace ginient {

namespace {

std::string zero_density_message(std::size_t index, double value) {
  std::ostringstream os;
  os.precision(17);
  os << "zero density at observation " << index << " (x = " << value << ")";
  return os.str();
}

std::string fit_message(const std::string& what, const std::vector<double>& trace) {
  std::ostringstream os;
  os.precision(10);
  os << what;
  if (!trace.empty()) {
    os << "; last iterates:";
    for (double t : trace) os << ' ' << t;
  }
  return os.str();
}

}  // namespace

ZeroDensityError::ZeroDensityError(std::size_t index, double value)
    : NumericError(zero_density_message(index, value)), index_(index), value_(value) {}

FitError::FitError(const std::string& what, std::vector<double> trace)
    : NumericError(fit_message(what, trace)), trace_(std::move(trace)) {}

}  // namespace ginient
