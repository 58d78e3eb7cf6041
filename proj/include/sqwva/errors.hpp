#pragma once

#include <stdexcept>
#include <string>

namespace sqwva {

// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Argument outside the mathematical domain of an operation.
class DomainError : public Error {
 public:
  using Error::Error;
};

// |k| w0 too large for the first-order tilt expansion.
class SmallAngleError : public DomainError {
 public:
  using DomainError::DomainError;
};

// Mode index or ladder result beyond the truncated basis.
class TruncationError : public Error {
 public:
  using Error::Error;
};

// Quadrature or estimator failed to reach its tolerance.
class NumericalError : public Error {
 public:
  NumericalError(const std::string& what, double residual)
      : Error(what + " (residual " + std::to_string(residual) + ")"), residual_(residual) {}
  explicit NumericalError(const std::string& what) : Error(what) {}

  double residual() const noexcept { return residual_; }

 private:
  double residual_ = 0.0;
};

// Invalid configuration: malformed document, unknown key, violated invariant.
class ConfigError : public Error {
 public:
  using Error::Error;
};

}  // namespace sqwva
