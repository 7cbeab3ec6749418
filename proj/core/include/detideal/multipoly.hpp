#pragma once

#include <array>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "detideal/integer.hpp"
#include "detideal/unipoly.hpp"

namespace detideal {

inline constexpr int kMaxVariables = 16;

enum class MonomialOrder { Lex, DegRevLex };

/// Exponent vector over at most kMaxVariables variables. Unused trailing slots
/// stay zero, so comparisons never need the arity.
struct Monomial {
  std::array<uint8_t, kMaxVariables> exp{};
  uint16_t degree = 0;

  static Monomial one() { return {}; }
  static Monomial variable(int index, int power = 1);

  bool is_one() const noexcept { return degree == 0; }
  bool divides(const Monomial& other) const noexcept {
    for (int i = 0; i < kMaxVariables; ++i) {
      if (exp[static_cast<std::size_t>(i)] > other.exp[static_cast<std::size_t>(i)]) return false;
    }
    return true;
  }
  bool coprime(const Monomial& other) const noexcept {
    for (int i = 0; i < kMaxVariables; ++i) {
      if (exp[static_cast<std::size_t>(i)] && other.exp[static_cast<std::size_t>(i)]) return false;
    }
    return true;
  }
  friend bool operator==(const Monomial& a, const Monomial& b) noexcept { return a.exp == b.exp; }
};

Monomial operator*(const Monomial& a, const Monomial& b);
/// Precondition: b divides a.
Monomial operator/(const Monomial& a, const Monomial& b);
Monomial lcm(const Monomial& a, const Monomial& b);

/// Three-way comparison under the given order: negative, zero or positive.
int compare(const Monomial& a, const Monomial& b, MonomialOrder order) noexcept;

struct Term {
  Monomial mono;
  Integer coeff;
};

/// Sparse polynomial over Z in a fixed number of variables. Terms are kept in
/// strictly descending monomial order with no zero coefficients.
class MultiPoly {
 public:
  MultiPoly() = default;
  MultiPoly(int nvars, MonomialOrder order);
  /// Builds from arbitrary terms: sorts and combines like monomials.
  MultiPoly(int nvars, MonomialOrder order, std::vector<Term> terms);

  static MultiPoly constant(int nvars, MonomialOrder order, Integer value);
  static MultiPoly variable(int nvars, MonomialOrder order, int index);
  /// Embeds a univariate polynomial as an arity-1 polynomial.
  static MultiPoly from_univariate(const ZPoly& p);

  int nvars() const noexcept { return nvars_; }
  MonomialOrder order() const noexcept { return order_; }
  bool is_zero() const noexcept { return terms_.empty(); }
  bool is_constant() const noexcept { return terms_.empty() || (terms_.size() == 1 && terms_[0].mono.is_one()); }
  std::size_t size() const noexcept { return terms_.size(); }
  const std::vector<Term>& terms() const noexcept { return terms_; }
  const Term& leading_term() const { return terms_.front(); }
  const Monomial& lm() const { return terms_.front().mono; }
  const Integer& lc() const { return terms_.front().coeff; }
  int total_degree() const noexcept;

  /// Requires arity 1.
  ZPoly to_univariate() const;
  /// Same polynomial re-sorted under another order.
  MultiPoly with_order(MonomialOrder order) const;

  MultiPoly operator-() const;
  MultiPoly& operator+=(const MultiPoly& rhs);
  MultiPoly& operator-=(const MultiPoly& rhs);
  MultiPoly& operator*=(const Integer& s);
  friend MultiPoly operator+(MultiPoly a, const MultiPoly& b) { return a += b; }
  friend MultiPoly operator-(MultiPoly a, const MultiPoly& b) { return a -= b; }
  friend MultiPoly operator*(MultiPoly a, const Integer& s) { return a *= s; }
  friend MultiPoly operator*(const Integer& s, MultiPoly a) { return a *= s; }
  friend MultiPoly operator*(const MultiPoly& a, const MultiPoly& b);
  MultiPoly& operator*=(const MultiPoly& rhs) { return *this = *this * rhs; }

  /// c * m * this.
  MultiPoly times_term(const Integer& c, const Monomial& m) const;
  /// this - c * m * h, the elementary reduction step.
  void subtract_multiple(const Integer& c, const Monomial& m, const MultiPoly& h);

  friend bool operator==(const MultiPoly& a, const MultiPoly& b) {
    if (a.terms_.size() != b.terms_.size()) return false;
    for (std::size_t i = 0; i < a.terms_.size(); ++i) {
      if (!(a.terms_[i].mono == b.terms_[i].mono) || a.terms_[i].coeff != b.terms_[i].coeff) return false;
    }
    return true;
  }

  /// Throws std::invalid_argument if point.size() != nvars().
  Integer eval(std::span<const Integer> point) const;

  /// Highest term first. Variable names default to x0..x{n-1} (or x if unary).
  std::string to_string(std::span<const std::string> names = {}) const;

  /// Total order on polynomials (term-by-term, monomials then coefficients),
  /// used for deterministic sorting of generator lists.
  friend int compare(const MultiPoly& a, const MultiPoly& b);

 private:
  void normalize_terms();

  int nvars_ = 1;
  MonomialOrder order_ = MonomialOrder::DegRevLex;
  std::vector<Term> terms_;
};

std::vector<std::string> default_variable_names(int nvars);

Integer eval_poly(const MultiPoly& p, std::span<const Integer> point);

/// Parses integer-coefficient polynomial text such as "(x-3)^3*(x+9)",
/// "2n^2 - n - 1" or "x0*x1 - x2". Juxtaposition of a number and a factor is
/// multiplication. Throws std::invalid_argument on syntax errors or unknown names.
MultiPoly parse_polynomial(std::string_view text, std::span<const std::string> names,
                           MonomialOrder order = MonomialOrder::DegRevLex);

/// Univariate convenience: parses in the single variable `var`.
ZPoly parse_univariate(std::string_view text, std::string_view var = "x");

}  // namespace detideal
