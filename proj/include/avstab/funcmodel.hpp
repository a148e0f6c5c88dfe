#pragma once

#include <cstddef>
#include <limits>
#include <vector>

#include "avstab/errors.hpp"
#include "avstab/extended_real.hpp"

namespace avstab {

enum class Side { left, right };
enum class Direction { to_minus_infinity, to_plus_infinity };

/// One power term anchored at a reference point. With u = x - anchor:
///
///     coeff * |u|^exponent              (signed_power == false)
///     coeff * sgn(u) * |u|^exponent     (signed_power == true)
///
/// Exponents are arbitrary positive reals, so cusps such as |u|^(1/2) and
/// ordinary polynomials (signed terms with integer exponents) share one
/// form, and one-sided derivative limits at the anchor have closed forms
/// even when they are infinite.
struct Term {
  double coeff = 0.0;
  double exponent = 1.0;
  bool signed_power = false;

  double value(double u) const;

  /// Pointwise derivative in x; requires u != 0.
  double derivative(double u) const;

  /// Limit of the derivative as u -> 0 from the given side.
  ExtendedReal derivative_limit_at_anchor(Side side) const;
};

/// A maximal interval on which the function is strictly monotone.
/// `anchor` is the breakpoint all terms are measured from; it must be a
/// finite endpoint of the interval (0 for the breakpoint-free whole-line
/// piece). Infinite interval ends are encoded as +-inf doubles.
struct Piece {
  double left = -std::numeric_limits<double>::infinity();
  double right = std::numeric_limits<double>::infinity();
  double anchor = 0.0;
  double constant = 0.0;
  std::vector<Term> terms;

  double value_at(double x) const;
  ExtendedReal derivative_limit(double x0, Side side) const;
};

/// Continuous piecewise function on the whole line: n >= 0 breakpoints and
/// n+1 consecutive pieces, each strictly monotone, with directions
/// alternating so that the breakpoints are exactly the strict local
/// extrema. Values are immutable after construction.
class FunctionModel {
 public:
  /// Validates coverage, anchors, continuity at breakpoints (1e-12),
  /// strict monotonicity of every piece (probed at 256 interior points,
  /// or geometric offsets 2^i from the finite endpoint on unbounded
  /// intervals, with a derivative sign check at each probe) and direction
  /// alternation.
  static FunctionModel make(std::vector<double> breakpoints, std::vector<Piece> pieces);

  double evaluate(double x) const;

  /// One-sided derivative limit at x0, possibly infinite.
  ExtendedReal side_derivative(double x0, Side side) const;

  /// Limit at -inf or +inf. Outer pieces of a valid model are unbounded
  /// power sums, so the result is always an infinity determined by the
  /// outer piece's monotone direction.
  ExtendedReal tail_limit(Direction direction) const;

  /// Model of -f; minima become maxima and vice versa.
  FunctionModel negate() const;

  const std::vector<double>& breakpoints() const { return breakpoints_; }
  const std::vector<Piece>& pieces() const { return pieces_; }

  /// +1 for an increasing piece, -1 for a decreasing one.
  int piece_direction(std::size_t piece_index) const { return directions_[piece_index]; }

  /// True when breakpoint i is a strict local minimum.
  bool is_minimum(std::size_t breakpoint_index) const {
    return directions_[breakpoint_index] < 0;
  }

 private:
  FunctionModel() = default;

  std::vector<double> breakpoints_;
  std::vector<Piece> pieces_;
  std::vector<int> directions_;
};

inline constexpr double kContinuityTolerance = 1e-12;

}  // namespace avstab
