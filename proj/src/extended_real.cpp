#include "gconj/extended_real.hpp"

#include <algorithm>
#include <cstdio>

namespace gconj {

std::string ExtendedReal::str() const {
  if (is_undefined()) return "undef";
  if (is_pos_inf()) return "inf";
  if (is_neg_inf()) return "-inf";
  double v = v_;
  if (v == static_cast<long long>(v) && std::abs(v) < 1e15)
    return std::to_string(static_cast<long long>(v));
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.12g", v);
  return buf;
}

static double checked_raw(const ExtendedReal& x) {
  if (x.is_undefined()) throw std::logic_error("ordering undefined values");
  return x.raw();
}

bool defined_lt(const ExtendedReal& a, const ExtendedReal& b) {
  return checked_raw(a) < checked_raw(b);
}

bool defined_le(const ExtendedReal& a, const ExtendedReal& b) {
  return checked_raw(a) <= checked_raw(b);
}

bool defined_close(const ExtendedReal& a, const ExtendedReal& b, double tol) {
  double x = checked_raw(a), y = checked_raw(b);
  if (std::isinf(x) || std::isinf(y)) return x == y;
  return std::abs(x - y) <= tol * std::max({1.0, std::abs(x), std::abs(y)});
}

}  // namespace gconj
