#pragma once

#include <stdexcept>
#include <string>

namespace coinduel {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed or out-of-range user input (probabilities, counts, flags).
class InvalidInput : public Error {
 public:
  using Error::Error;
};

/// An operation that divides by 1 - p - q was asked for a point with p + q = 1.
class DiagonalDomain : public Error {
 public:
  using Error::Error;
};

/// The precision ceiling was reached while the enclosure still straddles zero.
class UncertifiedSign : public Error {
 public:
  using Error::Error;
};

class PrecisionExhausted : public Error {
 public:
  using Error::Error;
};

class QuadratureFailure : public Error {
 public:
  using Error::Error;
};

class NoRealRoot : public Error {
 public:
  using Error::Error;
};

class SingularDenominator : public Error {
 public:
  using Error::Error;
};

class StepFailure : public Error {
 public:
  using Error::Error;
};

class NoIntersection : public Error {
 public:
  using Error::Error;
};

class DegenerateDiagonal : public Error {
 public:
  using Error::Error;
};

/// A proved bound was contradicted by a certified computation. Always a bug.
class BoundViolation : public Error {
 public:
  using Error::Error;
};

}  // namespace coinduel
