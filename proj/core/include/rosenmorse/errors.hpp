#pragma once

#include <stdexcept>
#include <string>

namespace rosenmorse {

// Base for every error the library raises. Callers that only need to report
// and bail out (the CLI maps these to exit status 2) can catch this alone.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Argument outside the mathematical domain (Gamma poles, alpha <= 0, ...).
class DomainError : public Error {
 public:
  using Error::Error;
};

// Requested state index is not a bound state of the potential.
class UnboundStateError : public Error {
 public:
  using Error::Error;
};

// State sits at (or numerically too close to) the normalizability threshold.
class NormalizabilityError : public Error {
 public:
  using Error::Error;
};

class MissingScaleError : public Error {
 public:
  using Error::Error;
};

// Three-term recurrence hits a zero denominator for the given parameters.
class DegenerateParametersError : public Error {
 public:
  using Error::Error;
};

class ParameterMismatchError : public Error {
 public:
  using Error::Error;
};

class SymmetricOnlyError : public Error {
 public:
  using Error::Error;
};

// Adaptive quadrature could not reach the requested tolerance.
class ToleranceNotMetError : public Error {
 public:
  using Error::Error;
};

}  // namespace rosenmorse
