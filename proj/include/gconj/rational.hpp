#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

namespace gconj {

/// Exact rational constant, normalized (gcd 1, positive denominator).
/// Used for constant leaves in expressions so constants round-trip through
/// text exactly.
struct Rational {
  long long num = 0;
  long long den = 1;

  Rational() = default;
  Rational(long long n) : num(n), den(1) {}        // NOLINT: implicit by design
  Rational(long long n, long long d);              // throws if d == 0

  double to_double() const { return static_cast<double>(num) / static_cast<double>(den); }
  bool is_integer() const { return den == 1; }

  /// "3", "-2", "1/2", ...
  std::string str() const;

  /// Accepts integers ("3"), fractions ("1/2"), and decimals ("2.5").
  static std::optional<Rational> parse(std::string_view text);

  friend bool operator==(const Rational& a, const Rational& b) {
    return a.num == b.num && a.den == b.den;
  }
  friend bool operator<(const Rational& a, const Rational& b) {
    return static_cast<__int128>(a.num) * b.den < static_cast<__int128>(b.num) * a.den;
  }
};

}  // namespace gconj
