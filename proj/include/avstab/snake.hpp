#pragma once

#include <optional>
#include <vector>

#include "avstab/averaging.hpp"

namespace avstab {

/// Ordered sequence {A_0, ..., A_{n+1}} of tail limits and extremum values.
/// Sequences extracted from models or mixtures have finite interior values
/// that strictly alternate; hand-built sequences are accepted as-is so that
/// arbitrary sequences can be compared.
struct Snake {
  std::vector<ExtendedReal> values;
};

/// Order-isomorphism: equal lengths and every pairwise comparison agrees.
bool snakes_equivalent(const Snake& a, const Snake& b);

/// True when every interior value is a strict local min or max of the
/// sequence (postcondition of the extractors).
bool snake_interior_alternates(const Snake& s);

struct ExtremumPoint {
  double x = 0.0;
  double value = 0.0;
  bool is_minimum = false;
};

/// Extraction outcome: either a snake plus the located interior extrema, or
/// a detected plateau, which puts the function outside the classification.
struct SnakeResult {
  std::optional<Snake> snake;
  std::vector<ExtremumPoint> extrema;
  double plateau_lo = 0.0;
  double plateau_hi = 0.0;

  bool plateau() const { return !snake.has_value(); }
};

/// Exact snake of a model: tail limit, breakpoint values, tail limit.
Snake extract_snake(const FunctionModel& model);

/// Snake of a mixture. Scans the derivative sign on `resolution` points per
/// interval between consecutive shifted breakpoints, refines each sign
/// change by bisection to width 1e-12, detects breakpoint extrema from the
/// one-sided limits, and reads tails from the components. Two or more
/// consecutive scan points with |derivative| <= 1e-12 report a plateau.
SnakeResult extract_snake(const MixtureModel& mixture, int resolution);

/// Snake of a sampled signal: interior extrema from strict sign changes of
/// consecutive differences; a run of two or more differences with
/// |diff| <= flat_tol reports a plateau. Tail entries are the finite
/// window-edge values.
SnakeResult extract_snake_sampled(const SampledSignal& signal, double flat_tol);

enum class EquivalenceReason {
  same_snake_class,
  different_extreme_count,
  snake_order_mismatch,
  plateau_detected,
};
const char* to_string(EquivalenceReason reason);

struct EquivalenceVerdict {
  bool equivalent = false;
  EquivalenceReason reason = EquivalenceReason::snake_order_mismatch;
};

namespace detail {
SnakeResult snake_result_of(const FunctionModel& m, int resolution);
SnakeResult snake_result_of(const MixtureModel& m, int resolution);
EquivalenceVerdict verdict_from(const SnakeResult& a, const SnakeResult& b);
}  // namespace detail

/// Decides topological equivalence through the snake criterion. A plateau
/// on either side is reported as not equivalent with its own reason: such
/// a function has left the class the criterion covers.
template <class FuncA, class FuncB>
EquivalenceVerdict topologically_equivalent(const FuncA& f, const FuncB& g, int resolution = 256) {
  return detail::verdict_from(detail::snake_result_of(f, resolution),
                              detail::snake_result_of(g, resolution));
}

inline constexpr double kPlateauDerivativeTolerance = 1e-12;
inline constexpr double kExtremumBisectionWidth = 1e-12;
inline constexpr int kMinScanResolution = 64;

}  // namespace avstab
