#include "avstab/funcmodel.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

namespace avstab {

namespace {

double power_abs(double u, double e) {
  const double m = std::abs(u);
  if (e == 1.0) return m;
  if (e == 2.0) return m * m;
  return std::pow(m, e);
}

int sign_of(double v) { return (v > 0.0) - (v < 0.0); }

void validate_term(const Term& t) {
  if (!std::isfinite(t.coeff) || t.coeff == 0.0)
    throw InvalidTerm("term coefficient must be finite and nonzero");
  if (!std::isfinite(t.exponent) || !(t.exponent > 0.0))
    throw InvalidTerm("term exponent must be finite and > 0");
}

// Probe positions for the monotonicity check. Bounded pieces get equally
// spaced interior points; unbounded sides get geometric offsets 2^i from
// the finite endpoint (anchor for the whole-line piece), i = -8..8.
std::vector<double> monotonicity_probes(const Piece& p) {
  std::vector<double> xs;
  const bool left_inf = std::isinf(p.left);
  const bool right_inf = std::isinf(p.right);
  if (!left_inf && !right_inf) {
    const int n = 256;
    xs.reserve(n);
    for (int i = 1; i <= n; ++i) xs.push_back(p.left + (p.right - p.left) * i / (n + 1.0));
  } else if (left_inf && right_inf) {
    for (int i = 8; i >= -8; --i) xs.push_back(p.anchor - std::ldexp(1.0, i));
    for (int i = -8; i <= 8; ++i) xs.push_back(p.anchor + std::ldexp(1.0, i));
  } else if (left_inf) {
    for (int i = 8; i >= -8; --i) xs.push_back(p.right - std::ldexp(1.0, i));
  } else {
    for (int i = -8; i <= 8; ++i) xs.push_back(p.left + std::ldexp(1.0, i));
  }
  return xs;
}

double pointwise_derivative(const Piece& p, double x) {
  double acc = 0.0;
  for (const Term& t : p.terms) acc += t.derivative(x - p.anchor);
  return acc;
}

// Strict monotonicity gate: probe values must be strictly ordered and no
// probe derivative may oppose the inferred direction (isolated zeros are
// fine, e.g. a cubic's flat point). Returns +1 or -1.
int checked_direction(const Piece& p, std::size_t index) {
  const std::vector<double> xs = monotonicity_probes(p);
  int dir = 0;
  double prev = p.value_at(xs.front());
  for (std::size_t j = 1; j < xs.size(); ++j) {
    const double cur = p.value_at(xs[j]);
    const int d = sign_of(cur - prev);
    if (d == 0)
      throw NotStrictlyMonotonePiece("piece " + std::to_string(index) +
                                     ": equal values at consecutive probes");
    if (dir == 0) dir = d;
    if (d != dir)
      throw NotStrictlyMonotonePiece("piece " + std::to_string(index) +
                                     ": probe values are not monotone");
    prev = cur;
  }
  for (double x : xs) {
    if (sign_of(pointwise_derivative(p, x)) == -dir)
      throw NotStrictlyMonotonePiece("piece " + std::to_string(index) +
                                     ": derivative sign opposes the value trend");
  }
  return dir;
}

}  // namespace

double Term::value(double u) const {
  const double v = coeff * power_abs(u, exponent);
  return (signed_power && u < 0.0) ? -v : v;
}

double Term::derivative(double u) const {
  const double m = std::abs(u);
  const double q = (exponent == 1.0) ? 1.0 : (exponent == 2.0 ? m : std::pow(m, exponent - 1.0));
  const double d = coeff * exponent * q;
  return (!signed_power && u < 0.0) ? -d : d;
}

ExtendedReal Term::derivative_limit_at_anchor(Side side) const {
  // Leading behavior of the derivative as u -> 0 from one side:
  // exponent > 1 vanishes, exponent == 1 tends to a constant slope,
  // exponent < 1 diverges. Unsigned terms flip sign on the left.
  const double side_sign = (side == Side::left) ? -1.0 : 1.0;
  const double lead = signed_power ? coeff : coeff * side_sign;
  if (exponent > 1.0) return ExtendedReal::finite(0.0);
  if (exponent == 1.0) return ExtendedReal::finite(lead);
  return lead > 0.0 ? ExtendedReal::plus_infinity() : ExtendedReal::minus_infinity();
}

double Piece::value_at(double x) const {
  double acc = constant;
  for (const Term& t : terms) acc += t.value(x - anchor);
  return acc;
}

ExtendedReal Piece::derivative_limit(double x0, Side side) const {
  const double u0 = x0 - anchor;
  if (u0 == 0.0) {
    ExtendedSum sum;
    for (const Term& t : terms) sum.add(t.derivative_limit_at_anchor(side));
    return sum.result();
  }
  double acc = 0.0;
  for (const Term& t : terms) acc += t.derivative(u0);
  return ExtendedReal::finite(acc);
}

FunctionModel FunctionModel::make(std::vector<double> breakpoints, std::vector<Piece> pieces) {
  const double inf = std::numeric_limits<double>::infinity();

  for (double b : breakpoints) {
    if (!std::isfinite(b)) throw CoverageGap("breakpoints must be finite");
  }
  for (std::size_t i = 1; i < breakpoints.size(); ++i) {
    if (!(breakpoints[i] > breakpoints[i - 1]))
      throw CoverageGap("breakpoints must be strictly increasing");
  }
  if (pieces.size() != breakpoints.size() + 1)
    throw CoverageGap("expected " + std::to_string(breakpoints.size() + 1) + " pieces for " +
                      std::to_string(breakpoints.size()) + " breakpoints, got " +
                      std::to_string(pieces.size()));

  for (const Piece& p : pieces) {
    if (std::isnan(p.left) || std::isnan(p.right) || !(p.left < p.right))
      throw CoverageGap("piece interval is empty or invalid");
    if (!std::isfinite(p.constant)) throw InvalidTerm("piece constant must be finite");
    for (const Term& t : p.terms) validate_term(t);
  }

  if (pieces.front().left != -inf) throw CoverageGap("first piece must start at -inf");
  if (pieces.back().right != inf) throw CoverageGap("last piece must end at +inf");
  for (std::size_t i = 0; i < breakpoints.size(); ++i) {
    if (pieces[i].right != breakpoints[i] || pieces[i + 1].left != breakpoints[i])
      throw CoverageGap("pieces do not meet exactly at breakpoint " + std::to_string(breakpoints[i]));
  }

  for (const Piece& p : pieces) {
    const bool left_finite = std::isfinite(p.left);
    const bool right_finite = std::isfinite(p.right);
    if (!std::isfinite(p.anchor)) throw InvalidAnchor("anchor must be finite");
    if (!left_finite && !right_finite) {
      if (p.anchor != 0.0) throw InvalidAnchor("whole-line piece must be anchored at 0");
    } else if (p.anchor != (left_finite ? p.left : p.right) &&
               p.anchor != (right_finite ? p.right : p.left)) {
      throw InvalidAnchor("anchor must be a finite endpoint of the piece interval");
    }
  }

  for (std::size_t i = 0; i < breakpoints.size(); ++i) {
    const double a = pieces[i].value_at(breakpoints[i]);
    const double b = pieces[i + 1].value_at(breakpoints[i]);
    if (!(std::abs(a - b) <= kContinuityTolerance))
      throw ContinuityViolation("pieces disagree at breakpoint " + std::to_string(breakpoints[i]) +
                                ": " + std::to_string(a) + " vs " + std::to_string(b));
  }

  std::vector<int> directions;
  directions.reserve(pieces.size());
  for (std::size_t i = 0; i < pieces.size(); ++i) directions.push_back(checked_direction(pieces[i], i));
  for (std::size_t i = 1; i < directions.size(); ++i) {
    if (directions[i] == directions[i - 1])
      throw NonAlternatingExtrema("pieces " + std::to_string(i - 1) + " and " + std::to_string(i) +
                                  " run in the same direction");
  }

  FunctionModel m;
  m.breakpoints_ = std::move(breakpoints);
  m.pieces_ = std::move(pieces);
  m.directions_ = std::move(directions);
  return m;
}

double FunctionModel::evaluate(double x) const {
  if (!std::isfinite(x)) throw std::invalid_argument("evaluate: x must be finite");
  const std::size_t i =
      std::upper_bound(breakpoints_.begin(), breakpoints_.end(), x) - breakpoints_.begin();
  return pieces_[i].value_at(x);
}

ExtendedReal FunctionModel::side_derivative(double x0, Side side) const {
  if (!std::isfinite(x0)) throw std::invalid_argument("side_derivative: x0 must be finite");
  const std::size_t i =
      std::lower_bound(breakpoints_.begin(), breakpoints_.end(), x0) - breakpoints_.begin();
  std::size_t piece_index = i;
  if (i < breakpoints_.size() && breakpoints_[i] == x0 && side == Side::right) piece_index = i + 1;
  return pieces_[piece_index].derivative_limit(x0, side);
}

ExtendedReal FunctionModel::tail_limit(Direction direction) const {
  if (direction == Direction::to_minus_infinity) {
    return directions_.front() < 0 ? ExtendedReal::plus_infinity() : ExtendedReal::minus_infinity();
  }
  return directions_.back() > 0 ? ExtendedReal::plus_infinity() : ExtendedReal::minus_infinity();
}

FunctionModel FunctionModel::negate() const {
  FunctionModel out;
  out.breakpoints_ = breakpoints_;
  out.pieces_ = pieces_;
  for (Piece& p : out.pieces_) {
    p.constant = -p.constant;
    for (Term& t : p.terms) t.coeff = -t.coeff;
  }
  out.directions_.reserve(directions_.size());
  for (int d : directions_) out.directions_.push_back(-d);
  return out;
}

}  // namespace avstab
