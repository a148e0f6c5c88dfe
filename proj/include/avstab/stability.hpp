#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "avstab/snake.hpp"

namespace avstab {

enum class ExtremumKind { minimum, maximum };
enum class GermCondition { case_a, case_b, convexity, k1_shift, indeterminate };
const char* to_string(ExtremumKind kind);
const char* to_string(GermCondition condition);

/// Local verdict at one extremum of the model. Maxima are analyzed on the
/// negated model, so the reported side limits always follow the minimum
/// convention (left <= 0 <= right); predictions translate back unchanged
/// because negation commutes with averaging.
struct GermReport {
  double extremum = 0.0;
  ExtremumKind kind = ExtremumKind::minimum;
  ExtendedReal left_limit;
  ExtendedReal right_limit;

  /// X_1..X_{k-1} in descending-position atom order; empty when either
  /// side limit is infinite or the measure has a single atom.
  std::vector<double> stability;

  GermCondition condition = GermCondition::indeterminate;

  /// m: 1-based index into the descending-position atoms of the atom whose
  /// shifted copy carries the averaged function's unique local extremum.
  std::optional<int> min_atom_index;

  /// Position t_m of that atom.
  std::optional<double> predicted_min_atom;
};

/// X_j = left*(p_1+...+p_j) + right*(p_{j+1}+...+p_k) over atoms in
/// descending position order, j = 1..k-1. Between consecutive shifted
/// kinks the averaged function's derivative has the sign of the matching
/// X_j, and the values always satisfy
/// left <= X_{k-1} <= ... <= X_1 <= right (strict inside when left < right).
std::vector<double> stability_numbers(ExtendedReal left, ExtendedReal right,
                                      const DiscreteMeasure& mu);

GermReport analyze_germ(const FunctionModel& model, double x0, const DiscreteMeasure& mu);

/// Predicted position of the averaged function's local extremum near the
/// germ: extremum + t_m * alpha.
double predicted_min(const GermReport& report, double alpha);

struct GlobalReport {
  std::vector<GermReport> germs;
  bool critical_values_distinct = true;
  bool stable = false;
  std::vector<std::string> failing_reasons;
};

/// Stability verdict for the whole model: stable when the interior
/// critical values are pairwise distinct, differ from both tails, and
/// every germ resolved to a decided condition. The criterion is
/// sufficient only, so everything else is reported as indeterminate.
GlobalReport analyze_global(const FunctionModel& model, const DiscreteMeasure& mu);

struct PredictionRecord {
  double predicted = 0.0;
  double observed = 0.0;
  double gap = 0.0;
};

struct SweepRecord {
  double alpha = 0.0;
  bool plateau = false;
  bool snake_equivalent = false;
  std::size_t extremum_count = 0;
  std::vector<PredictionRecord> predictions;
};

struct SweepReport {
  std::vector<SweepRecord> records;
  bool all_equivalent() const;
};

/// Empirical verification over a strictly descending list of positive
/// averaging radii: per alpha, snake equivalence against the base model,
/// extremum count, and predicted-vs-observed extremum positions from a
/// 1e5-point grid scan over [x_i - 2*alpha, x_i + 2*alpha] (leftmost
/// minimal grid point on ties). A detected plateau becomes a per-alpha
/// record, not a failure of the sweep.
SweepReport sweep_verify(const FunctionModel& model, const DiscreteMeasure& mu,
                         const std::vector<double>& alphas, int resolution = 256);

inline constexpr std::size_t kOracleGridPoints = 100000;

}  // namespace avstab
