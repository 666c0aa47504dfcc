#pragma once

#include <stdexcept>
#include <string>
#include <utility>

#include <exactcomb/integer.hpp>

namespace exactcomb {

/**
 * Exact rational number.
 *
 * Invariants: the denominator is positive and gcd(|numerator|, denominator)
 * is 1, so every value has exactly one representation and equality is plain
 * structural comparison. Division is not provided; the reciprocals the
 * library needs all enter through construction.
 */
class Rational {
public:
  Rational() = default;  // 0/1
  Rational(const BigInt& n) : num_(n) {}
  Rational(long long n) : num_(n) {}

  // Reduces to lowest terms; rejects a zero denominator.
  Rational(BigInt num, BigInt den) : num_(std::move(num)), den_(std::move(den)) {
    if (den_ == 0) throw std::invalid_argument("Rational: zero denominator");
    if (den_ < 0) {
      num_ = -num_;
      den_ = -den_;
    }
    BigInt g = boost::multiprecision::gcd(boost::multiprecision::abs(num_), den_);
    if (g > 1) {
      num_ /= g;
      den_ /= g;
    }
  }

  const BigInt& numerator() const { return num_; }
  const BigInt& denominator() const { return den_; }

  bool is_zero() const { return num_ == 0; }
  bool is_integer() const { return den_ == 1; }
  bool is_negative() const { return num_ < 0; }

  Rational operator-() const {
    Rational r = *this;
    r.num_ = -r.num_;
    return r;
  }

  Rational abs() const { return num_ < 0 ? -*this : *this; }

  friend Rational operator+(const Rational& a, const Rational& b) {
    return Rational(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
  }
  friend Rational operator-(const Rational& a, const Rational& b) {
    return Rational(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
  }
  friend Rational operator*(const Rational& a, const Rational& b) {
    return Rational(a.num_ * b.num_, a.den_ * b.den_);
  }

  bool operator==(const Rational&) const = default;

  // Denominators are positive, so cross-multiplication preserves order.
  friend bool operator<(const Rational& a, const Rational& b) {
    return a.num_ * b.den_ < b.num_ * a.den_;
  }
  friend bool operator>(const Rational& a, const Rational& b) { return b < a; }
  friend bool operator<=(const Rational& a, const Rational& b) { return !(b < a); }
  friend bool operator>=(const Rational& a, const Rational& b) { return !(a < b); }

  // "5/6", "-1/3"; integers render without the denominator.
  std::string to_string() const {
    std::string s = num_.str();
    if (den_ != 1) s += "/" + den_.str();
    return s;
  }

private:
  BigInt num_{0};
  BigInt den_{1};
};

}  // namespace exactcomb
