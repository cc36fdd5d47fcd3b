#include "wronsk/rational.hpp"

#include <numeric>
#include <stdexcept>

namespace wronsk {

std::string to_string(const Rational& x) {
  return numerator(x).str() + "/" + denominator(x).str();
}

Rational parse_rational(std::string_view text) {
  const auto bad = [&] {
    return std::invalid_argument("malformed rational: '" + std::string(text) + "'");
  };
  const auto is_integer = [](std::string_view s) {
    if (!s.empty() && (s.front() == '-' || s.front() == '+')) s.remove_prefix(1);
    if (s.empty()) return false;
    for (char c : s) {
      if (c < '0' || c > '9') return false;
    }
    return true;
  };
  const auto to_integer = [](std::string_view s) {
    if (s.front() == '+') s.remove_prefix(1);
    return Integer{std::string(s)};
  };
  const auto slash = text.find('/');
  const std::string_view num = text.substr(0, slash);
  if (!is_integer(num)) throw bad();
  if (slash == std::string_view::npos) return Rational(to_integer(num));
  const std::string_view den = text.substr(slash + 1);
  if (!is_integer(den)) throw bad();
  const Integer d = to_integer(den);
  if (d == 0) throw bad();
  return Rational(to_integer(num), d);
}

Integer floor(const Rational& x) {
  const Integer& n = numerator(x);
  const Integer& d = denominator(x);
  Integer q = n / d;  // truncates toward zero
  if (n < 0 && q * d != n) q -= 1;
  return q;
}

long gcd(long a, long b) { return std::gcd(a, b); }

}  // namespace wronsk
