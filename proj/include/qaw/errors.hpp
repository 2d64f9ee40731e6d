#pragma once

#include <complex>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace qaw {

/// Base of every error raised by the library. Each subclass maps onto one
/// CLI exit class (domain violation vs. numerical failure).
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A precondition on the inputs does not hold (parameter outside its
/// admissible region, malformed specification).
class DomainError : public Error {
 public:
  using Error::Error;
};

/// q-gamma evaluated at one of its poles {0, -1, -2, ...}.
class PoleError : public DomainError {
 public:
  using DomainError::DomainError;
};

/// A denominator factor vanished inside the range actually used.
class DivisionByZero : public DomainError {
 public:
  using DomainError::DomainError;
};

/// Base for failures of the numerics themselves (as opposed to bad input).
class NumericalError : public Error {
 public:
  using Error::Error;
};

/// A series, product or refinement loop hit its cap before the stopping
/// rule was satisfied. Carries the last partial sum and term magnitude.
class NonConvergence : public NumericalError {
 public:
  NonConvergence(const std::string& what, std::complex<double> partial, double last_term, int steps)
      : NumericalError(what), partial_(partial), last_term_(last_term), steps_(steps) {}

  std::complex<double> partial() const noexcept { return partial_; }
  double last_term() const noexcept { return last_term_; }
  int steps() const noexcept { return steps_; }

 private:
  std::complex<double> partial_;
  double last_term_;
  int steps_;
};

/// A linear-domain result is not representable; use the log-domain variant.
class Overflow : public NumericalError {
 public:
  using NumericalError::NumericalError;
};

/// The integrand of a line integral did not decay inside the admissible
/// window. Holds the probe points and log-magnitudes that were seen.
class WindowFailure : public NumericalError {
 public:
  WindowFailure(const std::string& what, std::vector<std::pair<double, double>> probes)
      : NumericalError(what), probes_(std::move(probes)) {}

  const std::vector<std::pair<double, double>>& probes() const noexcept { return probes_; }

 private:
  std::vector<std::pair<double, double>> probes_;
};

/// The outer k-series of a fractional identity kept growing.
class KSumDivergence : public NumericalError {
 public:
  KSumDivergence(const std::string& what, int k, double term)
      : NumericalError(what), k_(k), term_(term) {}

  int k() const noexcept { return k_; }
  double term() const noexcept { return term_; }

 private:
  int k_;
  double term_;
};

/// Malformed request: unknown identity, missing argument, bad suite file.
class UsageError : public Error {
 public:
  using Error::Error;
};

}  // namespace qaw
