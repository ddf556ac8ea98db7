#pragma once

#include <cstdio>
#include <stdexcept>
#include <string>

namespace cpforce {

// A precondition on a physical input was violated (non-positive distance,
// frequency, degenerate transition, ...).
class DomainError : public std::domain_error {
public:
  using std::domain_error::domain_error;
};

// The operation is not defined for the requested material model.
class UnsupportedModel : public std::invalid_argument {
public:
  using std::invalid_argument::invalid_argument;
};

// An integral did not reach its requested tolerance.
class NumericError : public std::runtime_error {
public:
  NumericError(const std::string& what, double achieved, double requested)
      : std::runtime_error(what + " (achieved error " + fmt(achieved) + ", requested " +
                           fmt(requested) + ")"),
        achieved_(achieved), requested_(requested) {}

  double achieved_error() const noexcept { return achieved_; }
  double requested_tolerance() const noexcept { return requested_; }

private:
  static std::string fmt(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.3g", v);
    return buf;
  }
  double achieved_;
  double requested_;
};

// Bad or incomplete configuration / command-line input.
class ConfigError : public std::invalid_argument {
public:
  using std::invalid_argument::invalid_argument;
};

} // namespace cpforce
