#pragma once

#include <cstdint>
#include <functional>
#include <numeric>
#include <stdexcept>
#include <string>

namespace matchpd {

// Exact rational over int64 with __int128 intermediates. All certificate and
// solver arithmetic in the offline layer runs on this type; tightness and
// complementary-slackness tests are equality tests, so no epsilon anywhere.
// Narrowing back to int64 is overflow-checked and throws std::overflow_error.
class Rational {
 public:
  Rational() = default;
  Rational(long long n) : num_(n), den_(1) {}  // NOLINT: implicit by design
  Rational(long long n, long long d) : num_(n), den_(d) { normalize_(); }

  long long num() const { return num_; }
  long long den() const { return den_; }

  bool is_zero() const { return num_ == 0; }
  bool is_integer() const { return den_ == 1; }
  int sign() const { return num_ > 0 ? 1 : (num_ < 0 ? -1 : 0); }

  Rational operator-() const {
    Rational r;
    r.num_ = -num_;
    r.den_ = den_;
    return r;
  }

  friend Rational operator+(const Rational& a, const Rational& b) {
    __int128 n = (__int128)a.num_ * b.den_ + (__int128)b.num_ * a.den_;
    __int128 d = (__int128)a.den_ * b.den_;
    return from_wide_(n, d);
  }
  friend Rational operator-(const Rational& a, const Rational& b) {
    __int128 n = (__int128)a.num_ * b.den_ - (__int128)b.num_ * a.den_;
    __int128 d = (__int128)a.den_ * b.den_;
    return from_wide_(n, d);
  }
  friend Rational operator*(const Rational& a, const Rational& b) {
    // cross-reduce first so the wide product stays small
    long long g1 = std::gcd(a.num_, b.den_);
    long long g2 = std::gcd(b.num_, a.den_);
    __int128 n = (__int128)(a.num_ / g1) * (b.num_ / g2);
    __int128 d = (__int128)(a.den_ / g2) * (b.den_ / g1);
    return from_wide_(n, d);
  }
  friend Rational operator/(const Rational& a, const Rational& b) {
    if (b.num_ == 0) throw std::domain_error("rational division by zero");
    long long g1 = std::gcd(a.num_, b.num_);
    long long g2 = std::gcd(b.den_, a.den_);
    __int128 n = (__int128)(a.num_ / g1) * (b.den_ / g2);
    __int128 d = (__int128)(a.den_ / g2) * (b.num_ / g1);
    return from_wide_(n, d);
  }

  Rational& operator+=(const Rational& o) { return *this = *this + o; }
  Rational& operator-=(const Rational& o) { return *this = *this - o; }
  Rational& operator*=(const Rational& o) { return *this = *this * o; }
  Rational& operator/=(const Rational& o) { return *this = *this / o; }

  friend bool operator==(const Rational& a, const Rational& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }
  friend bool operator!=(const Rational& a, const Rational& b) { return !(a == b); }
  friend bool operator<(const Rational& a, const Rational& b) {
    return (__int128)a.num_ * b.den_ < (__int128)b.num_ * a.den_;
  }
  friend bool operator>(const Rational& a, const Rational& b) { return b < a; }
  friend bool operator<=(const Rational& a, const Rational& b) { return !(b < a); }
  friend bool operator>=(const Rational& a, const Rational& b) { return !(a < b); }

  Rational abs() const { return num_ < 0 ? -*this : *this; }

  double to_double() const { return (double)num_ / (double)den_; }

  // "7", "-3/4"; integers print without the denominator
  std::string to_string() const {
    if (den_ == 1) return std::to_string(num_);
    return std::to_string(num_) + "/" + std::to_string(den_);
  }

  // Accepts "7", "-3/4", "2.5", "+0.125". Throws std::invalid_argument.
  static Rational parse(const std::string& s);

  // Exact conversion; every finite double is a dyadic rational.
  static Rational from_double(double x);

 private:
  static Rational from_wide_(__int128 n, __int128 d) {
    if (d == 0) throw std::domain_error("rational with zero denominator");
    if (d < 0) {
      n = -n;
      d = -d;
    }
    __int128 g = wide_gcd_(n < 0 ? -n : n, d);
    if (g > 1) {
      n /= g;
      d /= g;
    }
    Rational r;
    r.num_ = narrow_(n);
    r.den_ = narrow_(d);
    return r;
  }

  static long long narrow_(__int128 v) {
    if (v > INT64_MAX || v < INT64_MIN) throw std::overflow_error("rational overflow");
    return (long long)v;
  }

  static __int128 wide_gcd_(__int128 a, __int128 b) {
    while (b != 0) {
      __int128 t = a % b;
      a = b;
      b = t;
    }
    return a == 0 ? 1 : a;
  }

  void normalize_() {
    if (den_ == 0) throw std::domain_error("rational with zero denominator");
    if (den_ < 0) {
      num_ = -num_;
      den_ = -den_;
    }
    long long g = std::gcd(num_, den_);
    if (g > 1) {
      num_ /= g;
      den_ /= g;
    }
    if (num_ == 0) den_ = 1;
  }

  long long num_ = 0;
  long long den_ = 1;
};

// gcd(p/q, r/s) = gcd(p·s, r·q) / (q·s): the largest rational dividing both.
// gcd(x, 0) = |x|.
Rational rational_gcd(const Rational& a, const Rational& b);

}  // namespace matchpd

namespace std {
template <>
struct hash<matchpd::Rational> {
  size_t operator()(const matchpd::Rational& r) const {
    return hash<long long>()(r.num()) * 1000003u ^ hash<long long>()(r.den());
  }
};
}  // namespace std
