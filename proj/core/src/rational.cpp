#include "detideal/rational.hpp"

#include <ostream>
#include <stdexcept>

namespace detideal {

Rational::Rational(Integer num, Integer den) : num_(std::move(num)), den_(std::move(den)) {
  if (den_.is_zero()) throw std::domain_error("rational with zero denominator");
  reduce();
}

void Rational::reduce() {
  if (den_.sign() < 0) {
    num_ = -num_;
    den_ = -den_;
  }
  if (num_.is_zero()) {
    den_ = Integer(1);
    return;
  }
  Integer g = gcd(num_, den_);
  if (!g.is_one()) {
    num_ = Integer::div_exact(num_, g);
    den_ = Integer::div_exact(den_, g);
  }
}

Rational Rational::operator-() const {
  Rational r = *this;
  r.num_ = -r.num_;
  return r;
}

Rational Rational::inverse() const {
  if (num_.is_zero()) throw std::domain_error("inverse of zero");
  return Rational(den_, num_);
}

Rational& Rational::operator+=(const Rational& rhs) {
  if (den_.is_one() && rhs.den_.is_one()) {
    num_ += rhs.num_;
    return *this;
  }
  num_ = num_ * rhs.den_ + rhs.num_ * den_;
  den_ *= rhs.den_;
  reduce();
  return *this;
}

Rational& Rational::operator-=(const Rational& rhs) {
  if (den_.is_one() && rhs.den_.is_one()) {
    num_ -= rhs.num_;
    return *this;
  }
  num_ = num_ * rhs.den_ - rhs.num_ * den_;
  den_ *= rhs.den_;
  reduce();
  return *this;
}

Rational& Rational::operator*=(const Rational& rhs) {
  num_ *= rhs.num_;
  if (!(den_.is_one() && rhs.den_.is_one())) {
    den_ *= rhs.den_;
    reduce();
  }
  return *this;
}

Rational& Rational::operator/=(const Rational& rhs) {
  if (rhs.num_.is_zero()) throw std::domain_error("division by zero");
  num_ *= rhs.den_;
  den_ *= rhs.num_;
  reduce();
  return *this;
}

std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
  return (a.num_ * b.den_) <=> (b.num_ * a.den_);
}

std::string Rational::to_string() const {
  if (den_.is_one()) return num_.to_string();
  return num_.to_string() + "/" + den_.to_string();
}

std::ostream& operator<<(std::ostream& os, const Rational& v) { return os << v.to_string(); }

}  // namespace detideal
