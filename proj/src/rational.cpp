#include "matchpd/rational.hpp"

#include <cmath>
#include <cstdlib>

namespace matchpd {

namespace {

long long parse_ll(const std::string& s) {
  if (s.empty()) throw std::invalid_argument("empty integer in rational literal");
  size_t pos = 0;
  long long v = 0;
  try {
    v = std::stoll(s, &pos);
  } catch (const std::exception&) {
    throw std::invalid_argument("bad rational literal: '" + s + "'");
  }
  if (pos != s.size()) throw std::invalid_argument("bad rational literal: '" + s + "'");
  return v;
}

}  // namespace

Rational Rational::parse(const std::string& s) {
  if (s.empty()) throw std::invalid_argument("empty rational literal");
  auto slash = s.find('/');
  if (slash != std::string::npos) {
    long long n = parse_ll(s.substr(0, slash));
    long long d = parse_ll(s.substr(slash + 1));
    return Rational(n, d);
  }
  auto dot = s.find('.');
  if (dot == std::string::npos) return Rational(parse_ll(s));
  // decimal: sign, integer part, fraction digits
  std::string head = s.substr(0, dot);
  std::string frac = s.substr(dot + 1);
  if (frac.empty()) throw std::invalid_argument("bad rational literal: '" + s + "'");
  bool neg = !head.empty() && head[0] == '-';
  if (!head.empty() && (head[0] == '-' || head[0] == '+')) head = head.substr(1);
  if (head.empty()) head = "0";
  Rational value(parse_ll(head));
  Rational scale(1);
  for (char c : frac) {
    if (c < '0' || c > '9') throw std::invalid_argument("bad rational literal: '" + s + "'");
    scale *= Rational(1, 10);
    value += Rational(c - '0') * scale;
  }
  return neg ? -value : value;
}

Rational Rational::from_double(double x) {
  if (!std::isfinite(x)) throw std::invalid_argument("non-finite double");
  if (x == 0.0) return Rational(0);
  int exp = 0;
  double m = std::frexp(x, &exp);  // x = m * 2^exp, |m| in [0.5, 1)
  // 53 shifts make the mantissa integral
  long long mant = (long long)std::ldexp(m, 53);
  exp -= 53;
  Rational r(mant);
  while (exp > 0) {
    r *= Rational(2);
    --exp;
  }
  while (exp < 0) {
    r *= Rational(1, 2);
    ++exp;
  }
  return r;
}

Rational rational_gcd(const Rational& a, const Rational& b) {
  if (a.is_zero()) return b.abs();
  if (b.is_zero()) return a.abs();
  __int128 x = (__int128)a.num() * b.den();
  __int128 y = (__int128)b.num() * a.den();
  if (x < 0) x = -x;
  if (y < 0) y = -y;
  while (y != 0) {
    __int128 t = x % y;
    x = y;
    y = t;
  }
  __int128 d = (__int128)a.den() * b.den();
  if (x > INT64_MAX || d > INT64_MAX) {
    // reduce before narrowing
    __int128 g = x;
    __int128 e = d;
    while (e != 0) {
      __int128 t = g % e;
      g = e;
      e = t;
    }
    x /= g;
    d /= g;
    if (x > INT64_MAX || d > INT64_MAX) throw std::overflow_error("rational overflow");
  }
  return Rational((long long)x, (long long)d);
}

}  // namespace matchpd
