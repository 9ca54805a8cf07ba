#pragma once

#include <stdexcept>
#include <string>

namespace ealpha {

/// Invalid or inconsistent run configuration (CLI exit status 1).
class ConfigError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Unstable or non-finite numerics (CLI exit status 2).
class NumericalError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Filesystem or stream failure (CLI exit status 3).
class IoError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A time step refused because the CFL number exceeded the configured limit.
class StepRejected : public NumericalError {
 public:
  StepRejected(double cfl, double limit, double time);

  double cfl() const noexcept { return cfl_; }
  double limit() const noexcept { return limit_; }
  double time() const noexcept { return time_; }

 private:
  double cfl_;
  double limit_;
  double time_;
};

}  // namespace ealpha
