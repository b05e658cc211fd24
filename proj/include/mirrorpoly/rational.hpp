#pragma once

#include <compare>
#include <cstdint>
#include <cstdlib>
#include <numeric>
#include <ostream>
#include <string>
#include <string_view>

#include "mirrorpoly/error.hpp"

namespace mirrorpoly {

using Int = std::int64_t;

namespace checked {

inline Int add(Int a, Int b) {
  Int r;
  if (__builtin_add_overflow(a, b, &r)) throw OverflowError("integer overflow in addition");
  return r;
}

inline Int sub(Int a, Int b) {
  Int r;
  if (__builtin_sub_overflow(a, b, &r)) throw OverflowError("integer overflow in subtraction");
  return r;
}

inline Int mul(Int a, Int b) {
  Int r;
  if (__builtin_mul_overflow(a, b, &r)) throw OverflowError("integer overflow in multiplication");
  return r;
}

inline Int neg(Int a) { return sub(0, a); }

}  // namespace checked

inline Int gcd(Int a, Int b) { return std::gcd(a, b); }

inline Int lcm(Int a, Int b) {
  if (a == 0 || b == 0) return 0;
  return checked::mul(std::abs(a) / gcd(a, b), std::abs(b));
}

/// Floor division rounding toward negative infinity; `b` must be positive.
inline Int floor_div(Int a, Int b) {
  Int q = a / b;
  if ((a % b != 0) && (a < 0)) --q;
  return q;
}

/// Non-negative remainder for a positive modulus.
inline Int mod_floor(Int a, Int m) {
  Int r = a % m;
  return r < 0 ? r + m : r;
}

/// Exact rational number over 64-bit integers. Always stored in lowest terms
/// with a positive denominator; every operation throws OverflowError rather
/// than wrapping.
class Rational {
 public:
  constexpr Rational() = default;
  Rational(Int n) : num_(n), den_(1) {}  // NOLINT(google-explicit-constructor)
  Rational(Int n, Int d) : num_(n), den_(d) {
    if (d == 0) throw DomainError("rational with zero denominator");
    normalize();
  }

  Int num() const { return num_; }
  Int den() const { return den_; }

  bool is_integer() const { return den_ == 1; }
  bool is_zero() const { return num_ == 0; }
  int sign() const { return (num_ > 0) - (num_ < 0); }

  Int floor() const { return floor_div(num_, den_); }
  Int ceil() const { return -floor_div(-num_, den_); }

  /// Representative in [0, 1).
  Rational frac() const { return Rational(mod_floor(num_, den_), den_); }

  Rational operator-() const { return Rational(checked::neg(num_), den_); }

  Rational& operator+=(const Rational& o) {
    Int g = gcd(den_, o.den_);
    Int n = checked::add(checked::mul(num_, o.den_ / g), checked::mul(o.num_, den_ / g));
    Int d = checked::mul(den_ / g, o.den_);
    num_ = n;
    den_ = d;
    normalize();
    return *this;
  }
  Rational& operator-=(const Rational& o) { return *this += -o; }
  Rational& operator*=(const Rational& o) {
    Int g1 = gcd(num_, o.den_);
    Int g2 = gcd(o.num_, den_);
    if (g1 == 0) g1 = 1;
    if (g2 == 0) g2 = 1;
    num_ = checked::mul(num_ / g1, o.num_ / g2);
    den_ = checked::mul(den_ / g2, o.den_ / g1);
    normalize();
    return *this;
  }
  Rational& operator/=(const Rational& o) {
    if (o.num_ == 0) throw DomainError("rational division by zero");
    return *this *= Rational(o.den_, o.num_);
  }

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

  friend bool operator==(const Rational& a, const Rational& b) = default;
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    __int128 l = static_cast<__int128>(a.num_) * b.den_;
    __int128 r = static_cast<__int128>(b.num_) * a.den_;
    if (l < r) return std::strong_ordering::less;
    if (l > r) return std::strong_ordering::greater;
    return std::strong_ordering::equal;
  }

  /// "a" for integers, "a/b" otherwise.
  std::string str() const {
    if (den_ == 1) return std::to_string(num_);
    return std::to_string(num_) + "/" + std::to_string(den_);
  }

  /// Accepts "a", "-a", "a/b" with b != 0; the result is reduced.
  static Rational parse(std::string_view text) {
    auto to_int = [&](std::string_view s) -> Int {
      if (s.empty()) throw ParseError("empty integer in rational '" + std::string(text) + "'");
      std::size_t i = 0;
      bool negative = false;
      if (s[0] == '-' || s[0] == '+') {
        negative = s[0] == '-';
        i = 1;
      }
      if (i == s.size()) throw ParseError("malformed rational '" + std::string(text) + "'");
      Int v = 0;
      for (; i < s.size(); ++i) {
        if (s[i] < '0' || s[i] > '9')
          throw ParseError("malformed rational '" + std::string(text) + "'");
        v = checked::add(checked::mul(v, 10), s[i] - '0');
      }
      return negative ? -v : v;
    };
    auto slash = text.find('/');
    if (slash == std::string_view::npos) return Rational(to_int(text));
    Int d = to_int(text.substr(slash + 1));
    if (d == 0) throw ParseError("zero denominator in '" + std::string(text) + "'");
    return Rational(to_int(text.substr(0, slash)), d);
  }

  friend std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

 private:
  void normalize() {
    if (den_ < 0) {
      num_ = checked::neg(num_);
      den_ = checked::neg(den_);
    }
    Int g = gcd(num_, den_);
    if (g > 1) {
      num_ /= g;
      den_ /= g;
    }
    if (num_ == 0) den_ = 1;
  }

  Int num_ = 0;
  Int den_ = 1;
};

inline Rational abs(const Rational& r) { return r.sign() < 0 ? -r : r; }

}  // namespace mirrorpoly
