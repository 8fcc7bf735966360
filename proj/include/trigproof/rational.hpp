#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>

#include "trigproof/errors.hpp"

namespace trigproof {

using BigInt = boost::multiprecision::cpp_int;

// Arbitrary-precision rational, always kept in canonical form:
//   denominator > 0, gcd(|num|, den) == 1, zero is 0/1.
class Rational {
 public:
  Rational() : num_(0), den_(1) {}
  Rational(long long n) : num_(n), den_(1) {}  // NOLINT: implicit by design
  Rational(BigInt n) : num_(std::move(n)), den_(1) {}

  Rational(BigInt n, BigInt d) : num_(std::move(n)), den_(std::move(d)) {
    normalize();
  }

  static Rational make(long long n, long long d) {
    return Rational(BigInt(n), BigInt(d));
  }

  const BigInt& numerator() const { return num_; }
  const BigInt& denominator() const { return den_; }

  bool is_zero() const { return num_ == 0; }
  bool is_one() const { return num_ == 1 && den_ == 1; }
  bool is_integer() const { return den_ == 1; }
  int sign() const { return num_ == 0 ? 0 : (num_ > 0 ? 1 : -1); }

  Rational operator-() const { return Rational(Raw{}, -num_, den_); }

  Rational& operator+=(const Rational& o) {
    num_ = num_ * o.den_ + o.num_ * den_;
    den_ *= o.den_;
    normalize();
    return *this;
  }
  Rational& operator-=(const Rational& o) { return *this += -o; }
  Rational& operator*=(const Rational& o) {
    num_ *= o.num_;
    den_ *= o.den_;
    normalize();
    return *this;
  }
  Rational& operator/=(const Rational& o) {
    if (o.num_ == 0) throw DivisionByZero("rational division by zero");
    num_ *= o.den_;
    den_ *= o.num_;
    normalize();
    return *this;
  }

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

  friend bool operator==(const Rational& a, const Rational& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }
  friend bool operator!=(const Rational& a, const Rational& b) {
    return !(a == b);
  }
  friend bool operator<(const Rational& a, const Rational& b) {
    return a.num_ * b.den_ < b.num_ * a.den_;
  }
  friend bool operator<=(const Rational& a, const Rational& b) {
    return !(b < a);
  }
  friend bool operator>(const Rational& a, const Rational& b) { return b < a; }
  friend bool operator>=(const Rational& a, const Rational& b) {
    return !(a < b);
  }

  Rational abs() const { return num_ < 0 ? -*this : *this; }

  Rational inverse() const {
    if (num_ == 0) throw DivisionByZero("inverse of zero");
    return Rational(Raw{}, num_ > 0 ? den_ : -den_,
                    num_ > 0 ? num_ : -num_);
  }

  Rational pow(unsigned e) const {
    Rational r(1);
    Rational base = *this;
    for (; e; e >>= 1) {
      if (e & 1) r *= base;
      base *= base;
    }
    return r;
  }

  double to_double() const {
    return static_cast<double>(num_) / static_cast<double>(den_);
  }

  std::string str() const {
    if (den_ == 1) return num_.str();
    return num_.str() + "/" + den_.str();
  }

 private:
  struct Raw {};  // tag: components already canonical
  Rational(Raw, BigInt n, BigInt d) : num_(std::move(n)), den_(std::move(d)) {}

  void normalize() {
    if (den_ == 0) throw DivisionByZero("zero denominator");
    if (num_ == 0) {
      den_ = 1;
      return;
    }
    if (den_ < 0) {
      num_ = -num_;
      den_ = -den_;
    }
    BigInt g = boost::multiprecision::gcd(num_ < 0 ? BigInt(-num_) : num_, den_);
    if (g > 1) {
      num_ /= g;
      den_ /= g;
    }
  }

  BigInt num_;
  BigInt den_;
};

// Spec-surface constructor: canonical reduced rational, errors on d == 0.
inline Rational rat_make(long long n, long long d) { return Rational::make(n, d); }

inline BigInt gcd_big(const BigInt& a, const BigInt& b) {
  return boost::multiprecision::gcd(a, b);
}
inline BigInt lcm_big(const BigInt& a, const BigInt& b) {
  return boost::multiprecision::lcm(a, b);
}

}  // namespace trigproof
