#pragma once

#include <cstddef>
#include <memory>
#include <optional>
#include <utility>
#include <vector>

#include "avstab/funcmodel.hpp"
#include "avstab/measure.hpp"

namespace avstab {

struct MixtureComponent {
  double weight = 0.0;  // > 0
  double shift = 0.0;
  std::shared_ptr<const FunctionModel> base;
};

/// Weighted sum of shifted base models: x -> sum_i w_i * base_i(x - shift_i).
/// Averaging a model by a discrete measure yields one component per atom
/// (weight = atom weight, shift = atom position * alpha, shared base); the
/// mixture is kept in this formal shape and evaluated or differentiated
/// exactly, never re-expanded into a single piecewise model.
class MixtureModel {
 public:
  MixtureModel(std::vector<MixtureComponent> components, double alpha);

  double evaluate(double x) const;

  /// Weighted extended-real sum of the component side derivatives.
  ExtendedReal side_derivative(double x0, Side side) const;

  /// Weighted extended-real sum of the component tail limits.
  ExtendedReal tail_limit(Direction direction) const;

  double alpha() const { return alpha_; }
  const std::vector<MixtureComponent>& components() const { return components_; }

  /// Sorted union of the shifted base breakpoints. Outside the hull of
  /// this set every component sits on its outer piece, so the mixture is
  /// strictly monotone there and extrema can only occur inside.
  const std::vector<double>& internal_breakpoints() const { return internal_breakpoints_; }

  const std::optional<DiscreteMeasure>& source_measure() const { return source_measure_; }

 private:
  friend MixtureModel average(const FunctionModel&, const DiscreteMeasure&, double);

  std::vector<MixtureComponent> components_;
  double alpha_ = 0.0;
  std::optional<DiscreteMeasure> source_measure_;
  std::vector<double> internal_breakpoints_;
};

/// The averaged function f_alpha(x) = sum_i f(x - t_i * alpha) * p_i.
MixtureModel average(const FunctionModel& model, const DiscreteMeasure& mu, double alpha);

/// Uniformly sampled values of a function over a window.
struct SampledSignal {
  std::vector<double> xs;
  std::vector<double> ys;
  double step = 0.0;

  /// Validates: matching lengths >= 2, strictly increasing xs, uniform
  /// spacing within 1e-12.
  static SampledSignal from_points(std::vector<double> xs, std::vector<double> ys);
};

SampledSignal sample(const FunctionModel& model, double lo, double hi, std::size_t n_points);
SampledSignal sample(const MixtureModel& mixture, double lo, double hi, std::size_t n_points);

/// Exact inf and sup of the model over [x - alpha, x + alpha], from the
/// monotone piece structure (candidates are the window ends and the
/// breakpoints inside). Every averaged value lies between the two.
std::pair<double, double> envelope_bounds(const FunctionModel& model, double x, double alpha);

/// Discrete averaging expressed purely on samples. Every shift
/// position*alpha must land on the grid (an integer multiple of the step,
/// within 1e-9), and the window shrinks by the extreme shifts at each end.
SampledSignal average_sampled(const SampledSignal& signal, const DiscreteMeasure& mu, double alpha);

inline constexpr double kUniformGridTolerance = 1e-12;

}  // namespace avstab
