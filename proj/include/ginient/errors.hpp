#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace ginient {

// Root of every error raised by the library. The CLI maps each subclass to an
// exit status (see cli.hpp).
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Invalid argument or parameter outside a documented domain.
class DomainError : public Error {
 public:
  using Error::Error;
};

// Malformed or unusable input data (files, parsed values, empty samples).
class DataError : public Error {
 public:
  using Error::Error;
};

// Base for failures of a numerical procedure.
class NumericError : public Error {
 public:
  using Error::Error;
};

// Adaptive integration exhausted its budget, or the integrand does not
// vanish in the tail.
class DivergentIntegralError : public NumericError {
 public:
  using NumericError::NumericError;
};

// A mean-normalized index was requested for a model whose mean is infinite.
class InfiniteMeanError : public NumericError {
 public:
  using NumericError::NumericError;
};

// An observation sits where the model density is zero, so ln f = -inf.
class ZeroDensityError : public NumericError {
 public:
  ZeroDensityError(std::size_t index, double value);
  std::size_t index() const noexcept { return index_; }
  double value() const noexcept { return value_; }

 private:
  std::size_t index_;
  double value_;
};

// Optimizer failed to converge; carries the last iterates for diagnosis.
class FitError : public NumericError {
 public:
  FitError(const std::string& what, std::vector<double> trace);
  const std::vector<double>& trace() const noexcept { return trace_; }

 private:
  std::vector<double> trace_;
};

}  // namespace ginient
