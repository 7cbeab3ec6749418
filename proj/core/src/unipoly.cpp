#include "detideal/unipoly.hpp"

#include <algorithm>
#include <set>

namespace detideal {

std::string render_term(const std::string& coeff_abs, bool coeff_is_one, const std::string& monomial,
                        bool first, bool negative) {
  std::string out;
  if (first) {
    if (negative) out += "-";
  } else {
    out += negative ? " - " : " + ";
  }
  if (monomial.empty()) {
    out += coeff_abs;
  } else if (coeff_is_one) {
    out += monomial;
  } else {
    out += coeff_abs + "*" + monomial;
  }
  return out;
}

QPoly to_rational(const ZPoly& p) {
  std::vector<Rational> c;
  c.reserve(p.coeffs().size());
  for (const auto& v : p.coeffs()) c.emplace_back(v);
  return QPoly(std::move(c));
}

ZPoly primitive_integer_multiple(const QPoly& p) {
  if (p.is_zero()) return ZPoly();
  Integer den(1);
  for (const auto& v : p.coeffs()) den = lcm(den, v.den());
  std::vector<Integer> c;
  c.reserve(p.coeffs().size());
  for (const auto& v : p.coeffs()) c.push_back(v.num() * Integer::div_exact(den, v.den()));
  ZPoly z(std::move(c));
  auto [content, prim] = content_primitive(z);
  if (prim.lc().sign() < 0) prim = -prim;
  return prim;
}

std::pair<QPoly, QPoly> divmod(const QPoly& a, const QPoly& b) {
  if (b.is_zero()) throw std::domain_error("polynomial division by zero");
  if (a.degree() < b.degree()) return {QPoly(), a};
  std::vector<Rational> rem = a.coeffs();
  std::vector<Rational> quo(static_cast<std::size_t>(a.degree() - b.degree()) + 1, Rational(0));
  const Rational inv_lc = b.lc().inverse();
  const int db = b.degree();
  for (int i = a.degree(); i >= db; --i) {
    Rational coef = rem[static_cast<std::size_t>(i)] * inv_lc;
    if (coef.is_zero()) continue;
    quo[static_cast<std::size_t>(i - db)] = coef;
    for (int j = 0; j <= db; ++j) {
      rem[static_cast<std::size_t>(i - db + j)] -= coef * b.coeffs()[static_cast<std::size_t>(j)];
    }
  }
  rem.resize(static_cast<std::size_t>(db));
  return {QPoly(std::move(quo)), QPoly(std::move(rem))};
}

QPoly monic(const QPoly& p) {
  if (p.is_zero()) return p;
  if (p.lc().is_one()) return p;
  return p * p.lc().inverse();
}

QPoly gcd_poly_q(const QPoly& a, const QPoly& b) {
  if (a.is_zero() && b.is_zero()) throw std::invalid_argument("gcd of two zero polynomials");
  QPoly x = monic(a), y = monic(b);
  while (!y.is_zero()) {
    QPoly r = monic(divmod(x, y).second);
    x = std::move(y);
    y = std::move(r);
  }
  return monic(x);
}

QPoly squarefree_part(const QPoly& p) {
  if (p.is_zero()) throw std::invalid_argument("squarefree part of zero");
  if (p.degree() == 0) return QPoly::constant(Rational(1));
  QPoly g = gcd_poly_q(p, p.derivative());
  return monic(divmod(p, g).first);
}

std::pair<Integer, ZPoly> content_primitive(const ZPoly& p) {
  if (p.is_zero()) throw std::invalid_argument("content of zero polynomial");
  Integer c(0);
  for (const auto& v : p.coeffs()) {
    c = gcd(c, v);
    if (c.is_one()) break;
  }
  if (c.is_one()) return {c, p};
  std::vector<Integer> q;
  q.reserve(p.coeffs().size());
  for (const auto& v : p.coeffs()) q.push_back(Integer::div_exact(v, c));
  return {c, ZPoly(std::move(q))};
}

namespace {

// Positive divisors d of |n| with d <= bound, ascending.
std::vector<Integer> bounded_divisors(const Integer& n, const Integer& bound) {
  constexpr long kSearchCap = 50'000'000;
  Integer m = n.abs();
  std::set<Integer> out;
  // Below sqrt(m) every divisor <= bound is either d itself or a cofactor of
  // some d <= bound, so scanning d <= min(bound, sqrt(m)) is complete.
  for (long d = 1;; ++d) {
    Integer di(d);
    if (di > bound || di * di > m) break;
    if (d > kSearchCap) throw std::runtime_error("rational root search exceeds desk-scale limits");
    if (Integer::divides(di, m)) {
      if (di <= bound) out.insert(di);
      Integer co = Integer::div_exact(m, di);
      if (co <= bound) out.insert(co);
    }
  }
  return {out.begin(), out.end()};
}

}  // namespace

std::vector<Rational> rational_roots(const ZPoly& p) {
  if (p.is_zero()) throw std::invalid_argument("rational roots of zero polynomial");
  std::vector<Rational> roots;
  std::size_t shift = 0;
  while (p.coeffs()[shift].is_zero()) ++shift;
  if (shift > 0) roots.emplace_back(0);
  ZPoly q(std::vector<Integer>(p.coeffs().begin() + static_cast<long>(shift), p.coeffs().end()));
  if (q.degree() >= 1) {
    q = content_primitive(q).second;
    // Cauchy bound: every root satisfies |r| < 1 + max|q_i| / |lc|.
    Integer maxc(0);
    for (int i = 0; i < q.degree(); ++i) maxc = std::max(maxc, q.coeff(i).abs());
    const Integer lc_abs = q.lc().abs();
    const Integer root_bound = Integer::div_floor(maxc, lc_abs) + Integer(1);
    const Integer c0 = q.coeff(0);
    for (const Integer& b : bounded_divisors(lc_abs, lc_abs)) {
      for (const Integer& a : bounded_divisors(c0, root_bound * b)) {
        if (!gcd(a, b).is_one()) continue;
        for (int s : {-1, 1}) {
          Rational r(a * Integer(s), b);
          if (to_rational(q).eval(r).is_zero()) roots.push_back(r);
        }
      }
    }
  }
  std::sort(roots.begin(), roots.end());
  roots.erase(std::unique(roots.begin(), roots.end()), roots.end());
  return roots;
}

ZPoly exact_quotient(const ZPoly& a, const ZPoly& b) {
  if (b.is_zero()) throw std::domain_error("polynomial division by zero");
  if (a.is_zero()) return ZPoly();
  if (a.degree() < b.degree()) throw std::domain_error("polynomial does not divide");
  std::vector<Integer> rem = a.coeffs();
  std::vector<Integer> quo(static_cast<std::size_t>(a.degree() - b.degree()) + 1, Integer(0));
  const int db = b.degree();
  for (int i = a.degree(); i >= db; --i) {
    const Integer& top = rem[static_cast<std::size_t>(i)];
    if (top.is_zero()) continue;
    if (!Integer::divides(b.lc(), top)) throw std::domain_error("polynomial does not divide");
    Integer coef = Integer::div_exact(top, b.lc());
    for (int j = 0; j <= db; ++j) {
      rem[static_cast<std::size_t>(i - db + j)] -= coef * b.coeffs()[static_cast<std::size_t>(j)];
    }
    quo[static_cast<std::size_t>(i - db)] = std::move(coef);
  }
  for (const auto& v : rem) {
    if (!v.is_zero()) throw std::domain_error("polynomial does not divide");
  }
  return ZPoly(std::move(quo));
}

Integer eval_poly(const ZPoly& p, std::span<const Integer> point) {
  if (point.size() != 1) throw std::invalid_argument("univariate evaluation needs exactly one coordinate");
  return p.eval(point[0]);
}

}  // namespace detideal
