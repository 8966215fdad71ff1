#pragma once

#include <stdexcept>
#include <string>

namespace rxd {

/// Base of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A caller broke a documented precondition (grid mismatch, dt above the
/// positivity bound, masses inconsistent with the equilibrium, ...).
class ContractError : public Error {
 public:
  using Error::Error;
};

/// A physical or numerical parameter is outside its admissible range.
class ParameterError : public Error {
 public:
  using Error::Error;
};

/// The masses admit no strictly positive equilibrium (m24 <= 0).
class NoEquilibriumError : public Error {
 public:
  using Error::Error;
};

/// NaN/Inf, lost positivity, mass drift or a linear solver that did not
/// converge. Carries the simulation time at which it was detected.
class NumericalFailure : public Error {
 public:
  NumericalFailure(const std::string& what, double time = 0.0)
      : Error(what), time_(time) {}
  double time() const noexcept { return time_; }

 private:
  double time_;
};

/// A Monte-Carlo sweep produced no usable sample.
class EstimationFailure : public Error {
 public:
  using Error::Error;
};

}  // namespace rxd
