#include "avstab/averaging.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

namespace avstab {

namespace {

std::vector<double> shifted_breakpoint_union(const std::vector<MixtureComponent>& components) {
  std::vector<double> out;
  for (const MixtureComponent& c : components) {
    for (double b : c.base->breakpoints()) out.push_back(b + c.shift);
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

}  // namespace

MixtureModel::MixtureModel(std::vector<MixtureComponent> components, double alpha) {
  if (components.empty()) throw std::invalid_argument("MixtureModel: no components");
  if (!(alpha > 0.0)) throw NonpositiveAlpha("MixtureModel: alpha must be > 0");
  for (const MixtureComponent& c : components) {
    if (!c.base) throw std::invalid_argument("MixtureModel: null base model");
    if (!std::isfinite(c.weight) || !(c.weight > 0.0))
      throw std::invalid_argument("MixtureModel: component weight must be > 0");
    if (!std::isfinite(c.shift)) throw std::invalid_argument("MixtureModel: shift must be finite");
  }
  components_ = std::move(components);
  alpha_ = alpha;
  internal_breakpoints_ = shifted_breakpoint_union(components_);
}

double MixtureModel::evaluate(double x) const {
  double acc = 0.0;
  for (const MixtureComponent& c : components_) acc += c.weight * c.base->evaluate(x - c.shift);
  return acc;
}

ExtendedReal MixtureModel::side_derivative(double x0, Side side) const {
  ExtendedSum sum;
  for (const MixtureComponent& c : components_)
    sum.add(scale(c.weight, c.base->side_derivative(x0 - c.shift, side)));
  return sum.result();
}

ExtendedReal MixtureModel::tail_limit(Direction direction) const {
  ExtendedSum sum;
  for (const MixtureComponent& c : components_) sum.add(scale(c.weight, c.base->tail_limit(direction)));
  return sum.result();
}

MixtureModel average(const FunctionModel& model, const DiscreteMeasure& mu, double alpha) {
  if (!(alpha > 0.0)) throw NonpositiveAlpha("average: alpha must be > 0");
  auto base = std::make_shared<const FunctionModel>(model);
  std::vector<MixtureComponent> components;
  components.reserve(mu.size());
  for (const Atom& a : mu.atoms()) components.push_back({a.weight, a.position * alpha, base});
  MixtureModel mix(std::move(components), alpha);
  mix.source_measure_ = mu;
  return mix;
}

SampledSignal SampledSignal::from_points(std::vector<double> xs, std::vector<double> ys) {
  if (xs.size() != ys.size()) throw std::invalid_argument("SampledSignal: xs/ys length mismatch");
  if (xs.size() < 2) throw std::invalid_argument("SampledSignal: need at least 2 points");
  for (double v : xs)
    if (!std::isfinite(v)) throw std::invalid_argument("SampledSignal: xs must be finite");
  for (double v : ys)
    if (!std::isfinite(v)) throw std::invalid_argument("SampledSignal: ys must be finite");
  const double step = (xs.back() - xs.front()) / static_cast<double>(xs.size() - 1);
  if (!(step > 0.0)) throw std::invalid_argument("SampledSignal: xs must be increasing");
  for (std::size_t i = 1; i < xs.size(); ++i) {
    const double d = xs[i] - xs[i - 1];
    if (!(d > 0.0) || std::abs(d - step) > kUniformGridTolerance)
      throw std::invalid_argument("SampledSignal: grid is not uniform");
  }
  SampledSignal s;
  s.xs = std::move(xs);
  s.ys = std::move(ys);
  s.step = step;
  return s;
}

namespace {

template <class F>
SampledSignal sample_impl(double lo, double hi, std::size_t n_points, const F& f) {
  if (!(lo < hi)) throw std::invalid_argument("sample: lo must be < hi");
  if (n_points < 2) throw std::invalid_argument("sample: need at least 2 points");
  const double step = (hi - lo) / static_cast<double>(n_points - 1);
  std::vector<double> xs(n_points), ys(n_points);
  for (std::size_t i = 0; i < n_points; ++i) {
    xs[i] = lo + static_cast<double>(i) * step;
    ys[i] = f(xs[i]);
  }
  return SampledSignal::from_points(std::move(xs), std::move(ys));
}

}  // namespace

SampledSignal sample(const FunctionModel& model, double lo, double hi, std::size_t n_points) {
  return sample_impl(lo, hi, n_points, [&](double x) { return model.evaluate(x); });
}

SampledSignal sample(const MixtureModel& mixture, double lo, double hi, std::size_t n_points) {
  return sample_impl(lo, hi, n_points, [&](double x) { return mixture.evaluate(x); });
}

std::pair<double, double> envelope_bounds(const FunctionModel& model, double x, double alpha) {
  if (!(alpha > 0.0)) throw NonpositiveAlpha("envelope_bounds: alpha must be > 0");
  const double lo = x - alpha;
  const double hi = x + alpha;
  double min_v = std::min(model.evaluate(lo), model.evaluate(hi));
  double max_v = std::max(model.evaluate(lo), model.evaluate(hi));
  for (double b : model.breakpoints()) {
    if (b > lo && b < hi) {
      const double v = model.evaluate(b);
      min_v = std::min(min_v, v);
      max_v = std::max(max_v, v);
    }
  }
  return {min_v, max_v};
}

SampledSignal average_sampled(const SampledSignal& signal, const DiscreteMeasure& mu, double alpha) {
  if (!(alpha > 0.0)) throw NonpositiveAlpha("average_sampled: alpha must be > 0");
  const double step = signal.step;
  const long n = static_cast<long>(signal.xs.size());

  std::vector<long> offsets;
  offsets.reserve(mu.size());
  long max_off = 0;
  long min_off = 0;
  for (const Atom& a : mu.atoms()) {
    const double shift = a.position * alpha;
    const long k = std::lround(shift / step);
    if (std::abs(shift - static_cast<double>(k) * step) > 1e-9)
      throw ShiftNotOnGrid("shift " + std::to_string(shift) + " is not a multiple of the grid step");
    offsets.push_back(k);
    max_off = std::max(max_off, k);
    min_off = std::min(min_off, k);
  }

  const long j_lo = std::max(0L, max_off);
  const long j_hi = std::min(n - 1, n - 1 + min_off);
  if (j_hi - j_lo < 1)
    throw Error("average_sampled: window too small for the requested shifts");

  std::vector<double> xs(signal.xs.begin() + j_lo, signal.xs.begin() + j_hi + 1);
  std::vector<double> ys;
  ys.reserve(xs.size());
  for (long j = j_lo; j <= j_hi; ++j) {
    double acc = 0.0;
    for (std::size_t i = 0; i < offsets.size(); ++i)
      acc += mu.atoms()[i].weight * signal.ys[static_cast<std::size_t>(j - offsets[i])];
    ys.push_back(acc);
  }
  return SampledSignal::from_points(std::move(xs), std::move(ys));
}

}  // namespace avstab
