#include "avstab/snake.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace avstab {

namespace {

int sign_of(ExtendedReal v) {
  if (v.is_plus_infinity()) return 1;
  if (v.is_minus_infinity()) return -1;
  const double f = v.value();
  return (f > 0.0) - (f < 0.0);
}

bool near_zero(ExtendedReal v, double tol) { return v.is_finite() && std::abs(v.value()) <= tol; }

// Bisects a sign change of the right-derivative inside (lo, hi); the signs
// at the bracket ends are known from the caller's probes. A mid point with
// exactly zero derivative is accepted as the crossing.
double bisect_sign_change(const MixtureModel& mix, double lo, double hi, int lo_sign) {
  for (int iter = 0; iter < 200 && hi - lo > kExtremumBisectionWidth; ++iter) {
    const double mid = 0.5 * (lo + hi);
    if (!(mid > lo) || !(mid < hi)) break;
    const int s = sign_of(mix.side_derivative(mid, Side::right));
    if (s == 0) return mid;
    if (s == lo_sign)
      lo = mid;
    else
      hi = mid;
  }
  return 0.5 * (lo + hi);
}

Snake assemble_snake(ExtendedReal left_tail, const std::vector<ExtremumPoint>& extrema,
                     ExtendedReal right_tail) {
  Snake s;
  s.values.reserve(extrema.size() + 2);
  s.values.push_back(left_tail);
  for (const ExtremumPoint& e : extrema) s.values.push_back(ExtendedReal::finite(e.value));
  s.values.push_back(right_tail);
  if (!snake_interior_alternates(s))
    throw Error("extracted snake has non-alternating interior values");
  return s;
}

}  // namespace

bool snake_interior_alternates(const Snake& s) {
  for (std::size_t i = 1; i + 1 < s.values.size(); ++i) {
    const ExtendedReal& v = s.values[i];
    const bool local_min = v < s.values[i - 1] && v < s.values[i + 1];
    const bool local_max = v > s.values[i - 1] && v > s.values[i + 1];
    if (!local_min && !local_max) return false;
  }
  return true;
}

bool snakes_equivalent(const Snake& a, const Snake& b) {
  const std::size_t n = a.values.size();
  if (n != b.values.size()) return false;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (compare(a.values[i], a.values[j]) != compare(b.values[i], b.values[j])) return false;
    }
  }
  return true;
}

Snake extract_snake(const FunctionModel& model) {
  std::vector<ExtremumPoint> extrema;
  extrema.reserve(model.breakpoints().size());
  for (std::size_t i = 0; i < model.breakpoints().size(); ++i) {
    const double b = model.breakpoints()[i];
    extrema.push_back({b, model.evaluate(b), model.is_minimum(i)});
  }
  return assemble_snake(model.tail_limit(Direction::to_minus_infinity), extrema,
                        model.tail_limit(Direction::to_plus_infinity));
}

SnakeResult extract_snake(const MixtureModel& mixture, int resolution) {
  if (resolution < kMinScanResolution)
    throw std::invalid_argument("extract_snake: resolution must be >= " +
                                std::to_string(kMinScanResolution));

  const std::vector<double>& bps = mixture.internal_breakpoints();
  SnakeResult result;

  // Sign walk over the probe sequence. Two probes at the same position are
  // the two one-sided limits at a breakpoint; an opposite pair marks an
  // extremum exactly there. Zero-sign probes are skipped, so a bracket may
  // straddle a breakpoint whose limits vanish; bisection still converges
  // because the derivative is continuous between sign changes.
  double last_x = 0.0;
  int last_sign = 0;
  auto feed = [&](double x, ExtendedReal d) {
    const int s = sign_of(d);
    if (s == 0) return;
    if (last_sign != 0 && s != last_sign) {
      const double ex = (x == last_x) ? x : bisect_sign_change(mixture, last_x, x, last_sign);
      result.extrema.push_back({ex, mixture.evaluate(ex), last_sign < 0});
    }
    last_sign = s;
    last_x = x;
  };

  if (!bps.empty()) {
    feed(bps.front(), mixture.side_derivative(bps.front(), Side::left));
    feed(bps.front(), mixture.side_derivative(bps.front(), Side::right));
    for (std::size_t i = 0; i + 1 < bps.size(); ++i) {
      const double a = bps[i];
      const double b = bps[i + 1];
      int zero_run = 0;
      double zero_start = a;
      for (int j = 1; j <= resolution; ++j) {
        const double x = a + (b - a) * j / (resolution + 1.0);
        const ExtendedReal d = mixture.side_derivative(x, Side::right);
        if (near_zero(d, kPlateauDerivativeTolerance)) {
          if (zero_run == 0) zero_start = x;
          if (++zero_run >= 2) {
            // Flat stretch: extend over the remaining zero probes and report.
            double zero_end = x;
            for (int j2 = j + 1; j2 <= resolution; ++j2) {
              const double x2 = a + (b - a) * j2 / (resolution + 1.0);
              if (!near_zero(mixture.side_derivative(x2, Side::right), kPlateauDerivativeTolerance))
                break;
              zero_end = x2;
            }
            result.snake.reset();
            result.extrema.clear();
            result.plateau_lo = zero_start;
            result.plateau_hi = zero_end;
            return result;
          }
        } else {
          zero_run = 0;
        }
        feed(x, d);
      }
      feed(b, mixture.side_derivative(b, Side::left));
      feed(b, mixture.side_derivative(b, Side::right));
    }
  }

  result.snake = assemble_snake(mixture.tail_limit(Direction::to_minus_infinity), result.extrema,
                                mixture.tail_limit(Direction::to_plus_infinity));
  return result;
}

SnakeResult extract_snake_sampled(const SampledSignal& signal, double flat_tol) {
  if (!(flat_tol >= 0.0)) throw std::invalid_argument("extract_snake_sampled: flat_tol must be >= 0");

  const std::vector<double>& ys = signal.ys;
  const std::size_t n = ys.size();
  SnakeResult result;

  int zero_run = 0;
  std::size_t zero_start = 0;
  std::size_t prev_index = 0;
  int prev_sign = 0;
  for (std::size_t i = 0; i + 1 < n; ++i) {
    const double d = ys[i + 1] - ys[i];
    if (std::abs(d) <= flat_tol) {
      if (zero_run == 0) zero_start = i;
      if (++zero_run >= 2) {
        std::size_t zero_end = i + 1;
        while (zero_end + 1 < n && std::abs(ys[zero_end + 1] - ys[zero_end]) <= flat_tol) ++zero_end;
        result.snake.reset();
        result.extrema.clear();
        result.plateau_lo = signal.xs[zero_start];
        result.plateau_hi = signal.xs[zero_end];
        return result;
      }
      continue;
    }
    zero_run = 0;
    const int s = (d > 0.0) ? 1 : -1;
    if (prev_sign != 0 && s != prev_sign) {
      const std::size_t at = prev_index + 1;  // first sample after the previous monotone run
      result.extrema.push_back({signal.xs[at], ys[at], prev_sign < 0});
    }
    prev_sign = s;
    prev_index = i;
  }

  result.snake = assemble_snake(ExtendedReal::finite(ys.front()), result.extrema,
                                ExtendedReal::finite(ys.back()));
  return result;
}

const char* to_string(EquivalenceReason reason) {
  switch (reason) {
    case EquivalenceReason::same_snake_class: return "same-snake-class";
    case EquivalenceReason::different_extreme_count: return "different-extreme-count";
    case EquivalenceReason::snake_order_mismatch: return "snake-order-mismatch";
    case EquivalenceReason::plateau_detected: return "plateau-detected";
  }
  return "unknown";
}

namespace detail {

SnakeResult snake_result_of(const FunctionModel& m, int /*resolution*/) {
  SnakeResult r;
  r.snake = extract_snake(m);
  for (std::size_t i = 0; i < m.breakpoints().size(); ++i) {
    const double b = m.breakpoints()[i];
    r.extrema.push_back({b, m.evaluate(b), m.is_minimum(i)});
  }
  return r;
}

SnakeResult snake_result_of(const MixtureModel& m, int resolution) {
  return extract_snake(m, resolution);
}

EquivalenceVerdict verdict_from(const SnakeResult& a, const SnakeResult& b) {
  if (a.plateau() || b.plateau()) return {false, EquivalenceReason::plateau_detected};
  if (a.snake->values.size() != b.snake->values.size())
    return {false, EquivalenceReason::different_extreme_count};
  if (snakes_equivalent(*a.snake, *b.snake)) return {true, EquivalenceReason::same_snake_class};
  return {false, EquivalenceReason::snake_order_mismatch};
}

}  // namespace detail

}  // namespace avstab
