#pragma once

#include <stdexcept>
#include <string>

namespace ddwave {

/// Base of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A parameter set outside the admissible regime (a > b >= 0, p > 1, c^2 < 1, ...).
class InvalidParams : public Error {
 public:
  using Error::Error;
};

/// The periodic box is too short for the sampled profile to have decayed at its ends.
class TailTooFat : public Error {
 public:
  TailTooFat(const std::string& what, double suggested_length)
      : Error(what), suggested_length_(suggested_length) {}
  double suggested_length() const noexcept { return suggested_length_; }

 private:
  double suggested_length_;
};

/// The multiplier formulas have c^2 in a denominator; c = 0 is rejected.
class DegenerateVelocity : public Error {
 public:
  using Error::Error;
};

/// Polished roots and the sign scan of G disagree, or the count is impossible.
class InconsistentRootCount : public Error {
 public:
  using Error::Error;
};

class NotApplicable : public Error {
 public:
  using Error::Error;
};

/// A transform or nonlinearity produced NaN/Inf.
class NonFinite : public Error {
 public:
  using Error::Error;
};

class StepRejected : public Error {
 public:
  StepRejected(const std::string& what, double dt, double bound)
      : Error(what), dt_(dt), bound_(bound) {}
  double dt() const noexcept { return dt_; }
  double bound() const noexcept { return bound_; }

 private:
  double dt_;
  double bound_;
};

}  // namespace ddwave
