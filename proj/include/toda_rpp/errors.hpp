#pragma once

#include <stdexcept>
#include <string>

namespace toda_rpp {

/// Base of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class DivisionByZero : public Error {
  using Error::Error;
};
class ShapeError : public Error {
  using Error::Error;
};
/// A substitution sends a denominator to zero.
class PoleError : public Error {
  using Error::Error;
};
/// Series expansion of an expression whose denominator is not a unit.
class NotAUnit : public Error {
  using Error::Error;
};
class ParseError : public Error {
  using Error::Error;
};

/// A point, row or column outside the object it is asked of.
class DomainError : public Error {
  using Error::Error;
};
/// A query needs data beyond the finite window an object was built on.
class WindowError : public Error {
  using Error::Error;
};
class PreconditionError : public Error {
  using Error::Error;
};

/// A solution of the Toda molecule cannot be evaluated at some site because a
/// tau minor or a consumed field value vanishes. Random trials resample on it.
class DegenerateSolution : public Error {
  using Error::Error;
};
class SingularMinor : public DegenerateSolution {
  using DegenerateSolution::DegenerateSolution;
};
class NonvanishingViolation : public DegenerateSolution {
  using DegenerateSolution::DegenerateSolution;
};
class GaugeError : public Error {
  using Error::Error;
};

class UndefinedAlpha : public Error {
  using Error::Error;
};
class RangeError : public Error {
  using Error::Error;
};
class WeightError : public Error {
  using Error::Error;
};
class BijectionError : public Error {
  using Error::Error;
};

/// Raised when a random trial keeps hitting degenerate samples.
class ResampleExhausted : public Error {
  using Error::Error;
};

}  // namespace toda_rpp
