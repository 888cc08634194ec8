#pragma once

#include <stdexcept>
#include <string>

namespace mirror {

/// Argument outside the mathematical domain of an operation.
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Requested mirror speed is at or above the speed of light.
class SuperluminalError : public DomainError {
 public:
  using DomainError::DomainError;
};

/// An integral failed to reach its tolerance. Carries the error estimate
/// that was achieved when the integrator gave up.
class QuadratureError : public std::runtime_error {
 public:
  QuadratureError(const std::string& what, double achieved_error)
      : std::runtime_error(what), achieved_error_(achieved_error) {}

  double achieved_error() const noexcept { return achieved_error_; }

 private:
  double achieved_error_;
};

/// Maximum-speed search failed to bracket an interior extremum.
class CalibrationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace mirror
