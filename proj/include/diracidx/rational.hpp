#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace diracidx {

// Exact rational arithmetic on 128-bit integers, reduced after every
// operation. Overflow throws rather than wrapping; the series module stays
// far below the 128-bit range at its truncation cap.
class Rational {
 public:
  using Int = __int128;

  Rational() = default;
  Rational(long long n) : num_(n), den_(1) {}
  Rational(long long n, long long d) { assign(n, d); }

  static Rational of(Int n, Int d) {
    Rational r;
    r.assign(n, d);
    return r;
  }

  bool is_zero() const { return num_ == 0; }
  bool is_one() const { return num_ == 1 && den_ == 1; }

  friend Rational operator+(const Rational& a, const Rational& b) {
    Int g = gcd128(a.den_, b.den_);
    Int lhs = checked_mul(a.num_, b.den_ / g);
    Int rhs = checked_mul(b.num_, a.den_ / g);
    return of(checked_add(lhs, rhs), checked_mul(a.den_, b.den_ / g));
  }

  friend Rational operator-(const Rational& a, const Rational& b) {
    return a + (-b);
  }

  Rational operator-() const {
    Rational r;
    r.num_ = -num_;
    r.den_ = den_;
    return r;
  }

  friend Rational operator*(const Rational& a, const Rational& b) {
    Int g1 = gcd128(abs128(a.num_), b.den_);
    Int g2 = gcd128(abs128(b.num_), a.den_);
    Rational r;
    r.num_ = checked_mul(a.num_ / g1, b.num_ / g2);
    r.den_ = checked_mul(a.den_ / g2, b.den_ / g1);
    return r;
  }

  friend Rational operator/(const Rational& a, const Rational& b) {
    if (b.num_ == 0) throw std::domain_error("Rational: division by zero");
    Rational inv;
    if (b.num_ < 0) {
      inv.num_ = -b.den_;
      inv.den_ = -b.num_;
    } else {
      inv.num_ = b.den_;
      inv.den_ = b.num_;
    }
    return a * inv;
  }

  Rational& operator+=(const Rational& o) { return *this = *this + o; }
  Rational& operator-=(const Rational& o) { return *this = *this - o; }
  Rational& operator*=(const Rational& o) { return *this = *this * o; }
  Rational& operator/=(const Rational& o) { return *this = *this / o; }

  friend bool operator==(const Rational& a, const Rational& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }
  friend bool operator!=(const Rational& a, const Rational& b) {
    return !(a == b);
  }
  friend bool operator<(const Rational& a, const Rational& b) {
    return checked_mul(a.num_, b.den_) < checked_mul(b.num_, a.den_);
  }

  double to_double() const {
    return static_cast<double>(num_) / static_cast<double>(den_);
  }

  std::string str() const {
    std::string s = int128_str(num_);
    if (den_ != 1) s += "/" + int128_str(den_);
    return s;
  }

  Int num() const { return num_; }
  Int den() const { return den_; }

 private:
  void assign(Int n, Int d) {
    if (d == 0) throw std::domain_error("Rational: zero denominator");
    if (d < 0) {
      n = -n;
      d = -d;
    }
    Int g = gcd128(abs128(n), d);
    if (g == 0) g = 1;
    num_ = n / g;
    den_ = d / g;
  }

  static Int abs128(Int v) { return v < 0 ? -v : v; }

  static Int gcd128(Int a, Int b) {
    a = abs128(a);
    b = abs128(b);
    while (b != 0) {
      Int t = a % b;
      a = b;
      b = t;
    }
    return a == 0 ? 1 : a;
  }

  static Int checked_add(Int a, Int b) {
    Int r;
    if (__builtin_add_overflow(a, b, &r))
      throw std::overflow_error("Rational: 128-bit overflow in addition");
    return r;
  }

  static Int checked_mul(Int a, Int b) {
    Int r;
    if (__builtin_mul_overflow(a, b, &r))
      throw std::overflow_error("Rational: 128-bit overflow in multiplication");
    return r;
  }

  static std::string int128_str(Int v) {
    if (v == 0) return "0";
    bool neg = v < 0;
    unsigned __int128 u = neg ? (unsigned __int128)(-v) : (unsigned __int128)v;
    std::string digits;
    while (u != 0) {
      digits += char('0' + int(u % 10));
      u /= 10;
    }
    if (neg) digits += '-';
    return std::string(digits.rbegin(), digits.rend());
  }

  Int num_ = 0;
  Int den_ = 1;
};

}  // namespace diracidx
