#pragma once

#include <stdexcept>
#include <string>

namespace ampoly {

/// Base of every numerical failure raised by the library. Argument errors
/// that are plain misuse (negative degree, bad grid size) are reported with
/// std::invalid_argument instead.
class NumericalError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A series hit SeriesControl::max_terms before meeting its tolerance.
class NonConvergence : public NumericalError {
 public:
  using NumericalError::NumericalError;
};

/// A lower hypergeometric parameter is a non-positive integer.
class PoleParameter : public NumericalError {
 public:
  using NumericalError::NumericalError;
};

/// Argument outside the region where the routine is defined.
class DomainViolation : public NumericalError {
 public:
  using NumericalError::NumericalError;
};

class Overflow : public NumericalError {
 public:
  using NumericalError::NumericalError;
};

/// A closed form that must be real for real input kept an imaginary part.
class ResidualImaginary : public NumericalError {
 public:
  using NumericalError::NumericalError;
};

/// Input sits on a pole of an identity being checked.
class PoleInput : public NumericalError {
 public:
  using NumericalError::NumericalError;
};

class ConvergenceFailure : public NumericalError {
 public:
  using NumericalError::NumericalError;
};

}  // namespace ampoly
