#pragma once

#include <optional>
#include <stdexcept>
#include <string>

namespace swanson {

// Input violated a documented precondition (wrong structure tag, bad size,
// parameter out of range).
class ContractViolation : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Argument outside the domain where the quantity is defined.
class DomainError : public ContractViolation {
 public:
  using ContractViolation::ContractViolation;
};

// Base for failures of a numerical procedure on valid input.
class NumericalError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class ConvergenceError : public NumericalError {
 public:
  ConvergenceError(const std::string& what, int iterations, std::optional<int> index = std::nullopt)
      : NumericalError(what), iterations_(iterations), index_(index) {}

  int iterations() const noexcept { return iterations_; }
  std::optional<int> index() const noexcept { return index_; }

 private:
  int iterations_;
  std::optional<int> index_;
};

class NotPositiveDefinite : public NumericalError {
 public:
  NotPositiveDefinite(const std::string& what, double eigenvalue)
      : NumericalError(what), eigenvalue_(eigenvalue) {}

  double eigenvalue() const noexcept { return eigenvalue_; }

 private:
  double eigenvalue_;
};

// A Gaussian integrand that does not decay.
class DivergentIntegral : public NumericalError {
 public:
  DivergentIntegral(const std::string& what, double exponent)
      : NumericalError(what), exponent_(exponent) {}

  double exponent() const noexcept { return exponent_; }

 private:
  double exponent_;
};

// Truncated ladder vector whose tail is too heavy to trust.
class TailContamination : public NumericalError {
 public:
  TailContamination(const std::string& what, double tail_fraction)
      : NumericalError(what), tail_fraction_(tail_fraction) {}

  double tail_fraction() const noexcept { return tail_fraction_; }

 private:
  double tail_fraction_;
};

// A state with zero (physical) norm where a normalized quantity is requested.
class DegenerateState : public NumericalError {
 public:
  using NumericalError::NumericalError;
};

}  // namespace swanson
