#pragma once

#include <stdexcept>
#include <string>

namespace rotameniscus {

/// Input lies outside the domain of an operation (e.g. lambda <= lambda_min
/// for the inflection radius, or H < 2 for the tensiometer inversion).
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// lambda >= lambda_c: no steady interface exists.
class SupercriticalError : public DomainError {
 public:
  SupercriticalError(double lambda, double lambda_c);
  double lambda() const noexcept { return lambda_; }
  double lambda_c() const noexcept { return lambda_c_; }

 private:
  double lambda_;
  double lambda_c_;
};

/// The slope h' is infinite at an interior point (only at lambda = lambda_c).
class SingularPointError : public DomainError {
 public:
  using DomainError::DomainError;
};

/// Numerical procedure did not meet its tolerance.
class NumericalError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class QuadratureError : public NumericalError {
 public:
  using NumericalError::NumericalError;
};

class ExtrapolationError : public NumericalError {
 public:
  using NumericalError::NumericalError;
};

class ConvergenceError : public NumericalError {
 public:
  using NumericalError::NumericalError;
};

}  // namespace rotameniscus
