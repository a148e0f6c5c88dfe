#pragma once

#include <cmath>
#include <limits>
#include <stdexcept>

#include "avstab/errors.hpp"

namespace avstab {

/// Real line extended with -inf and +inf, totally ordered.
/// Backed by an IEEE double that is never NaN; the infinities use the
/// native encodings, so comparisons are plain double comparisons and
/// equality on finite values is exact.
class ExtendedReal {
 public:
  ExtendedReal() = default;

  static ExtendedReal finite(double v) {
    if (!std::isfinite(v)) throw std::invalid_argument("ExtendedReal::finite: value is not finite");
    return ExtendedReal(v);
  }
  static ExtendedReal plus_infinity() { return ExtendedReal(std::numeric_limits<double>::infinity()); }
  static ExtendedReal minus_infinity() { return ExtendedReal(-std::numeric_limits<double>::infinity()); }

  /// Wraps a raw double; +-inf map to the infinite values.
  static ExtendedReal from_double(double v) {
    if (std::isnan(v)) throw std::invalid_argument("ExtendedReal::from_double: NaN");
    return ExtendedReal(v);
  }

  bool is_finite() const { return std::isfinite(v_); }
  bool is_plus_infinity() const { return std::isinf(v_) && v_ > 0.0; }
  bool is_minus_infinity() const { return std::isinf(v_) && v_ < 0.0; }

  double value() const {
    if (!is_finite()) throw std::logic_error("ExtendedReal::value: value is infinite");
    return v_;
  }
  double as_double() const { return v_; }

  ExtendedReal operator-() const { return ExtendedReal(-v_); }

  friend bool operator==(ExtendedReal a, ExtendedReal b) { return a.v_ == b.v_; }
  friend bool operator!=(ExtendedReal a, ExtendedReal b) { return a.v_ != b.v_; }
  friend bool operator<(ExtendedReal a, ExtendedReal b) { return a.v_ < b.v_; }
  friend bool operator<=(ExtendedReal a, ExtendedReal b) { return a.v_ <= b.v_; }
  friend bool operator>(ExtendedReal a, ExtendedReal b) { return a.v_ > b.v_; }
  friend bool operator>=(ExtendedReal a, ExtendedReal b) { return a.v_ >= b.v_; }

 private:
  explicit ExtendedReal(double raw) : v_(raw) {}
  double v_ = 0.0;
};

/// Three-way comparison: -1, 0 or +1.
inline int compare(ExtendedReal a, ExtendedReal b) {
  if (a < b) return -1;
  if (b < a) return 1;
  return 0;
}

/// Multiplication by a strictly positive weight; infinities keep their sign.
inline ExtendedReal scale(double weight, ExtendedReal x) {
  if (!(weight > 0.0)) throw std::invalid_argument("scale: weight must be positive");
  return ExtendedReal::from_double(weight * x.as_double());
}

/// Accumulates extended reals. Finite parts add exactly; an infinite
/// contribution dominates; mixing +inf and -inf is an error because the
/// stability analysis covers at most one infinite side.
class ExtendedSum {
 public:
  void add(ExtendedReal x) {
    if (x.is_finite()) {
      finite_ += x.value();
      return;
    }
    const int s = x.is_plus_infinity() ? 1 : -1;
    if (infinity_ == 0) {
      infinity_ = s;
    } else if (infinity_ != s) {
      throw IndeterminateSideLimit("sum mixes opposite infinite contributions");
    }
  }

  ExtendedReal result() const {
    if (infinity_ > 0) return ExtendedReal::plus_infinity();
    if (infinity_ < 0) return ExtendedReal::minus_infinity();
    return ExtendedReal::finite(finite_);
  }

 private:
  double finite_ = 0.0;
  int infinity_ = 0;
};

}  // namespace avstab
