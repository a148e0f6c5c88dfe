#pragma once

#include <stdexcept>

namespace avstab {

/// Base type for all library errors.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Measure construction.
class PositionOutOfRange : public Error {
 public:
  using Error::Error;
};
class DuplicatePosition : public Error {
 public:
  using Error::Error;
};
class NonpositiveWeight : public Error {
 public:
  using Error::Error;
};
class WeightsNotNormalized : public Error {
 public:
  using Error::Error;
};

// Function model construction.
class InvalidTerm : public Error {
 public:
  using Error::Error;
};
class InvalidAnchor : public Error {
 public:
  using Error::Error;
};
class CoverageGap : public Error {
 public:
  using Error::Error;
};
class ContinuityViolation : public Error {
 public:
  using Error::Error;
};
class NotStrictlyMonotonePiece : public Error {
 public:
  using Error::Error;
};
class NonAlternatingExtrema : public Error {
 public:
  using Error::Error;
};

// Derivative limits.
class IndeterminateSideLimit : public Error {
 public:
  using Error::Error;
};

// Averaging.
class NonpositiveAlpha : public Error {
 public:
  using Error::Error;
};
class ShiftNotOnGrid : public Error {
 public:
  using Error::Error;
};

// Stability analysis.
class InfiniteSideLimit : public Error {
 public:
  using Error::Error;
};
class SingleAtom : public Error {
 public:
  using Error::Error;
};
class NotABreakpoint : public Error {
 public:
  using Error::Error;
};
class NoPrediction : public Error {
 public:
  using Error::Error;
};

}  // namespace avstab
