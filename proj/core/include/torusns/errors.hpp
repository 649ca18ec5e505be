#pragma once

#include <stdexcept>
#include <string>

namespace torusns {

// Bad argument to an operation (out-of-range index, negative order, ...).
class ParameterError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Quadrature or iteration failed to converge.
class NumericError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A time-stepping run produced NaN/Inf or exceeded the norm ceiling.
class BlowUpError : public std::runtime_error {
 public:
  BlowUpError(const std::string& what, double time) : std::runtime_error(what), time_(time) {}
  double time() const { return time_; }

 private:
  double time_ = 0.0;
};

// Configuration file failed schema validation; names the offending field.
class ValidationError : public std::runtime_error {
 public:
  ValidationError(const std::string& field, const std::string& reason)
      : std::runtime_error("config field '" + field + "': " + reason), field_(field) {}
  const std::string& field() const { return field_; }

 private:
  std::string field_;
};

}  // namespace torusns
