#include "gconj/rational.hpp"

#include <cctype>
#include <cstdlib>
#include <numeric>
#include <stdexcept>

namespace gconj {

Rational::Rational(long long n, long long d) : num(n), den(d) {
  if (den == 0) throw std::invalid_argument("rational with zero denominator");
  if (den < 0) { num = -num; den = -den; }
  long long g = std::gcd(num < 0 ? -num : num, den);
  if (g > 1) { num /= g; den /= g; }
}

std::string Rational::str() const {
  if (den == 1) return std::to_string(num);
  return std::to_string(num) + "/" + std::to_string(den);
}

static bool parse_ll(std::string_view s, long long& out) {
  if (s.empty()) return false;
  size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
  if (i == s.size()) return false;
  for (size_t k = i; k < s.size(); ++k)
    if (!std::isdigit(static_cast<unsigned char>(s[k]))) return false;
  if (s.size() - i > 18) return false;  // keep well inside long long
  out = std::strtoll(std::string(s).c_str(), nullptr, 10);
  return true;
}

std::optional<Rational> Rational::parse(std::string_view text) {
  auto slash = text.find('/');
  if (slash != std::string_view::npos) {
    long long n, d;
    if (!parse_ll(text.substr(0, slash), n) || !parse_ll(text.substr(slash + 1), d) || d == 0)
      return std::nullopt;
    return Rational(n, d);
  }
  auto dot = text.find('.');
  if (dot != std::string_view::npos) {
    std::string_view whole = text.substr(0, dot), frac = text.substr(dot + 1);
    if (frac.empty() || frac.size() > 15) return std::nullopt;
    long long w = 0;
    if (!whole.empty() && whole != "-" && whole != "+" && !parse_ll(whole, w)) return std::nullopt;
    long long f;
    if (!parse_ll(frac, f) || f < 0) return std::nullopt;
    long long scale = 1;
    for (size_t k = 0; k < frac.size(); ++k) scale *= 10;
    bool neg = !whole.empty() && whole[0] == '-';
    long long n = (neg ? -1 : 1) * ((w < 0 ? -w : w) * scale + f);
    return Rational(n, scale);
  }
  long long n;
  if (!parse_ll(text, n)) return std::nullopt;
  return Rational(n);
}

}  // namespace gconj
