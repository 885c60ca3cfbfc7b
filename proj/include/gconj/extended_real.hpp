#pragma once

#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>

namespace gconj {

/// A value on the extended real line [-inf, +inf] plus an absorbing
/// Undefined element. Encoded in a double: NaN plays the role of Undefined,
/// IEEE infinities are the two infinite points. All arithmetic on these
/// values goes through apply_op (ops.hpp), which spells out the edge cases
/// instead of inheriting IEEE semantics.
class ExtendedReal {
public:
  /// Default-constructed value is Undefined.
  constexpr ExtendedReal() : v_(std::numeric_limits<double>::quiet_NaN()) {}

  static ExtendedReal undefined() { return ExtendedReal(); }
  static ExtendedReal pos_inf() {
    return ExtendedReal(std::numeric_limits<double>::infinity());
  }
  static ExtendedReal neg_inf() {
    return ExtendedReal(-std::numeric_limits<double>::infinity());
  }

  /// Wraps a finite double; throws on inf/NaN input.
  static ExtendedReal finite(double v) {
    if (!std::isfinite(v)) throw std::invalid_argument("finite() needs a finite value");
    return ExtendedReal(v);
  }

  /// Wraps any double, mapping NaN to Undefined and keeping infinities.
  static ExtendedReal of(double raw) { return ExtendedReal(raw); }

  bool is_undefined() const { return std::isnan(v_); }
  bool is_defined() const { return !std::isnan(v_); }
  bool is_finite() const { return std::isfinite(v_); }
  bool is_pos_inf() const { return std::isinf(v_) && v_ > 0; }
  bool is_neg_inf() const { return std::isinf(v_) && v_ < 0; }

  /// The finite value; throws unless is_finite().
  double value() const {
    if (!std::isfinite(v_)) throw std::logic_error("value() on non-finite ExtendedReal");
    return v_;
  }

  /// Raw double payload (NaN for Undefined). Useful for numeric kernels.
  double raw() const { return v_; }

  /// Identity comparison: Undefined matches Undefined, otherwise numeric
  /// equality (infinities included).
  bool same(const ExtendedReal& o) const {
    if (is_undefined() || o.is_undefined()) return is_undefined() && o.is_undefined();
    return v_ == o.v_;
  }

  std::string str() const;

private:
  explicit constexpr ExtendedReal(double v) : v_(v) {}
  double v_;
};

/// Order predicates over *defined* values (-inf < finite < +inf).
/// Callers must rule out Undefined first; these throw if they see one.
bool defined_lt(const ExtendedReal& a, const ExtendedReal& b);
bool defined_le(const ExtendedReal& a, const ExtendedReal& b);

/// Approximate equality with relative slack: |a-b| <= tol * max(1,|a|,|b|).
/// Defined values only; equal infinities compare equal.
bool defined_close(const ExtendedReal& a, const ExtendedReal& b, double tol);

}  // namespace gconj
