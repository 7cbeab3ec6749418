#pragma once

#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "detideal/integer.hpp"
#include "detideal/rational.hpp"

namespace detideal {

/// Dense univariate polynomial, coefficients stored lowest degree first.
/// The coefficient list never has a trailing zero, so the zero polynomial is
/// the empty list and degree() == -1.
template <class C>
class UniPoly {
 public:
  using Coeff = C;

  UniPoly() = default;
  explicit UniPoly(std::vector<C> coeffs) : c_(std::move(coeffs)) { trim(); }
  UniPoly(std::initializer_list<C> coeffs) : c_(coeffs) { trim(); }

  static UniPoly constant(C value) { return UniPoly(std::vector<C>{std::move(value)}); }
  static UniPoly monomial(C value, int degree) {
    std::vector<C> c(static_cast<std::size_t>(degree) + 1, C(0));
    c.back() = std::move(value);
    return UniPoly(std::move(c));
  }
  static UniPoly variable() { return monomial(C(1), 1); }

  int degree() const noexcept { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const noexcept { return c_.empty(); }
  bool is_constant() const noexcept { return c_.size() <= 1; }
  const C& lc() const {
    if (c_.empty()) throw std::domain_error("leading coefficient of zero polynomial");
    return c_.back();
  }
  C coeff(int i) const {
    return (i >= 0 && i < static_cast<int>(c_.size())) ? c_[static_cast<std::size_t>(i)] : C(0);
  }
  const std::vector<C>& coeffs() const noexcept { return c_; }

  UniPoly operator-() const {
    UniPoly r = *this;
    for (auto& v : r.c_) v = -v;
    return r;
  }

  UniPoly& operator+=(const UniPoly& rhs) {
    if (rhs.c_.size() > c_.size()) c_.resize(rhs.c_.size(), C(0));
    for (std::size_t i = 0; i < rhs.c_.size(); ++i) c_[i] += rhs.c_[i];
    trim();
    return *this;
  }
  UniPoly& operator-=(const UniPoly& rhs) {
    if (rhs.c_.size() > c_.size()) c_.resize(rhs.c_.size(), C(0));
    for (std::size_t i = 0; i < rhs.c_.size(); ++i) c_[i] -= rhs.c_[i];
    trim();
    return *this;
  }
  UniPoly& operator*=(const C& s) {
    if (s.is_zero()) {
      c_.clear();
      return *this;
    }
    for (auto& v : c_) v *= s;
    return *this;
  }

  friend UniPoly operator+(UniPoly a, const UniPoly& b) { return a += b; }
  friend UniPoly operator-(UniPoly a, const UniPoly& b) { return a -= b; }
  friend UniPoly operator*(UniPoly a, const C& s) { return a *= s; }
  friend UniPoly operator*(const C& s, UniPoly a) { return a *= s; }
  friend UniPoly operator*(const UniPoly& a, const UniPoly& b) {
    if (a.is_zero() || b.is_zero()) return UniPoly();
    std::vector<C> r(a.c_.size() + b.c_.size() - 1, C(0));
    for (std::size_t i = 0; i < a.c_.size(); ++i) {
      if (a.c_[i].is_zero()) continue;
      for (std::size_t j = 0; j < b.c_.size(); ++j) r[i + j] += a.c_[i] * b.c_[j];
    }
    return UniPoly(std::move(r));
  }
  UniPoly& operator*=(const UniPoly& rhs) { return *this = *this * rhs; }

  friend bool operator==(const UniPoly& a, const UniPoly& b) { return a.c_ == b.c_; }

  /// Horner evaluation.
  C eval(const C& at) const {
    C acc(0);
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) {
      acc *= at;
      acc += *it;
    }
    return acc;
  }

  UniPoly derivative() const {
    if (c_.size() <= 1) return UniPoly();
    std::vector<C> d(c_.size() - 1, C(0));
    for (std::size_t i = 1; i < c_.size(); ++i) d[i - 1] = c_[i] * C(static_cast<long>(i));
    return UniPoly(std::move(d));
  }

  /// Renders highest degree first, e.g. "x^5 - 5*x^3 - 2*x^2 + 2*x".
  std::string to_string(std::string_view var = "x") const;

 private:
  void trim() {
    while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
  }

  std::vector<C> c_;
};

using ZPoly = UniPoly<Integer>;
using QPoly = UniPoly<Rational>;

/// Renders `coeff * var^exp` terms in the shared text format. Exposed for the
/// multivariate renderer, which produces identical term syntax.
std::string render_term(const std::string& coeff_abs, bool coeff_is_one, const std::string& monomial,
                        bool first, bool negative);

template <class C>
std::string UniPoly<C>::to_string(std::string_view var) const {
  if (c_.empty()) return "0";
  std::string out;
  bool first = true;
  for (int i = degree(); i >= 0; --i) {
    const C& v = c_[static_cast<std::size_t>(i)];
    if (v.is_zero()) continue;
    std::string mono;
    if (i >= 1) mono = std::string(var);
    if (i >= 2) mono += "^" + std::to_string(i);
    C mag = v.sign() < 0 ? -v : v;
    out += render_term(mag.to_string(), mag.is_one(), mono, first, v.sign() < 0);
    first = false;
  }
  return out;
}

QPoly to_rational(const ZPoly& p);

/// Clears denominators: the unique primitive integer polynomial with positive
/// leading coefficient that is a rational multiple of p. Zero maps to zero.
ZPoly primitive_integer_multiple(const QPoly& p);

/// Euclidean division over Q: a = q*b + r with deg r < deg b.
std::pair<QPoly, QPoly> divmod(const QPoly& a, const QPoly& b);

QPoly monic(const QPoly& p);

/// Monic gcd over Q[x]. Throws std::invalid_argument when both are zero.
QPoly gcd_poly_q(const QPoly& a, const QPoly& b);

/// p / gcd(p, p'), made monic. Throws std::invalid_argument on zero input.
QPoly squarefree_part(const QPoly& p);

/// Returns (c, q) with p = c*q, c > 0, q primitive and lc(q) of the sign of lc(p).
/// Throws std::invalid_argument on zero input.
std::pair<Integer, ZPoly> content_primitive(const ZPoly& p);

/// All distinct rational roots in ascending order, by the rational-root
/// theorem after stripping powers of x. Throws std::invalid_argument on zero.
std::vector<Rational> rational_roots(const ZPoly& p);

/// Exact quotient a / b in Z[x]; throws std::domain_error if b does not divide a.
ZPoly exact_quotient(const ZPoly& a, const ZPoly& b);

/// Evaluation with an explicit point vector; the point must have exactly one entry.
Integer eval_poly(const ZPoly& p, std::span<const Integer> point);

}  // namespace detideal
