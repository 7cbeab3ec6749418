#pragma once

#include <compare>
#include <iosfwd>
#include <string>

#include "detideal/integer.hpp"

namespace detideal {

/// Exact rational number, always reduced with a positive denominator.
class Rational {
 public:
  Rational() = default;
  Rational(int v) : num_(v) {}
  Rational(long v) : num_(v) {}
  Rational(long long v) : num_(v) {}
  Rational(Integer v) : num_(std::move(v)) {}
  Rational(Integer num, Integer den);

  const Integer& num() const noexcept { return num_; }
  const Integer& den() const noexcept { return den_; }
  bool is_zero() const noexcept { return num_.is_zero(); }
  bool is_one() const noexcept { return num_.is_one() && den_.is_one(); }
  bool is_integer() const noexcept { return den_.is_one(); }
  int sign() const noexcept { return num_.sign(); }

  Rational operator-() const;
  Rational inverse() const;

  Rational& operator+=(const Rational& rhs);
  Rational& operator-=(const Rational& rhs);
  Rational& operator*=(const Rational& rhs);
  Rational& operator/=(const Rational& rhs);

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

  friend bool operator==(const Rational& a, const Rational& b) noexcept {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b);

  std::string to_string() const;
  friend std::ostream& operator<<(std::ostream& os, const Rational& v);

 private:
  void reduce();

  Integer num_{0};
  Integer den_{1};
};

}  // namespace detideal
