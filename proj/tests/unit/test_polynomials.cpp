#include <gtest/gtest.h>

#include <random>
#include <vector>

#include "detideal/multipoly.hpp"
#include "detideal/unipoly.hpp"

using namespace detideal;

namespace {

ZPoly zp(const char* s) { return parse_univariate(s); }
QPoly qp(const char* s) { return to_rational(parse_univariate(s)); }

MultiPoly mp(const char* s, int nvars) {
  auto names = default_variable_names(nvars);
  return parse_polynomial(s, names);
}

}  // namespace

TEST(UniPoly, RendersHighestDegreeFirst) {
  ZPoly p = parse_univariate("t^5-5t^3-2t^2+2t", "t");
  EXPECT_EQ(p.to_string(), "x^5 - 5*x^3 - 2*x^2 + 2*x");
  EXPECT_EQ(p.to_string("t"), "t^5 - 5*t^3 - 2*t^2 + 2*t");
  EXPECT_EQ(zp("-x+1").to_string(), "-x + 1");
  EXPECT_EQ(ZPoly().to_string(), "0");
  EXPECT_EQ(ZPoly().degree(), -1);
}

TEST(UniPoly, ParsesProductsAndPowers) {
  ZPoly p = zp("(x-3)^3*(x+9)");
  EXPECT_EQ(p, zp("x^4 - 54*x^2 + 216*x - 243"));
  EXPECT_EQ(p.degree(), 4);
  EXPECT_THROW(zp("x +"), std::invalid_argument);
  EXPECT_THROW(zp("y"), std::invalid_argument);
}

TEST(UniPoly, GcdOverRationals) {
  EXPECT_EQ(gcd_poly_q(qp("(x-3)^3*(x+9)"), qp("3*(x-3)^3")), qp("(x-3)^3"));
  EXPECT_EQ(gcd_poly_q(qp("x^2-1"), qp("x-1")), qp("x-1"));
  EXPECT_EQ(gcd_poly_q(qp("2*(x+1)"), qp("(x+1)*(x^2+1)")), qp("x+1"));
  EXPECT_EQ(gcd_poly_q(QPoly(), qp("2x+4")), qp("x+2"));
  EXPECT_THROW(gcd_poly_q(QPoly(), QPoly()), std::invalid_argument);
}

TEST(UniPoly, SquarefreePart) {
  EXPECT_EQ(squarefree_part(qp("x*(x-3)^4*(x-6)")), qp("x*(x-3)*(x-6)"));
  EXPECT_EQ(squarefree_part(qp("x-1")), qp("x-1"));
  EXPECT_EQ(squarefree_part(qp("(x+1)^2")), qp("x+1"));
  EXPECT_THROW(squarefree_part(QPoly()), std::invalid_argument);
}

TEST(UniPoly, ContentAndPrimitivePart) {
  auto [c1, q1] = content_primitive(zp("3*(x-3)^3"));
  EXPECT_EQ(c1, Integer(3));
  EXPECT_EQ(q1, zp("(x-3)^3"));
  auto [c2, q2] = content_primitive(zp("2x+4"));
  EXPECT_EQ(c2, Integer(2));
  EXPECT_EQ(q2, zp("x+2"));
  // 1106 = 2*7*79 divides every coefficient: 22120 = 20*1106, 108388 = 98*1106.
  auto [c3, q3] = content_primitive(zp("1106x^2-22120x+108388"));
  EXPECT_EQ(c3, Integer(1106));
  EXPECT_EQ(q3, zp("x^2-20x+98"));
  auto [c4, q4] = content_primitive(zp("-4x-6"));
  EXPECT_EQ(c4, Integer(2));
  EXPECT_EQ(q4, zp("-2x-3"));
  EXPECT_THROW(content_primitive(ZPoly()), std::invalid_argument);
}

TEST(UniPoly, RationalRoots) {
  auto r = rational_roots(zp("x*(x-3)^4*(x-6)"));
  ASSERT_EQ(r.size(), 3u);
  EXPECT_EQ(r[0], Rational(0));
  EXPECT_EQ(r[1], Rational(3));
  EXPECT_EQ(r[2], Rational(6));
  // x^5 - 5x^3 - 2x^2 + 2x = x(x+1)(x^3 - x^2 - 4x + 2); the cubic has no
  // rational roots (candidates +-1, +-2 all fail).
  EXPECT_EQ(zp("x*(x+1)*(x^3-x^2-4x+2)"), zp("x^5-5x^3-2x^2+2x"));
  auto t = rational_roots(zp("x^5-5x^3-2x^2+2x"));
  ASSERT_EQ(t.size(), 2u);
  EXPECT_EQ(t[0], Rational(-1));
  EXPECT_EQ(t[1], Rational(0));
  EXPECT_TRUE(rational_roots(zp("x^2+1")).empty());
  auto h = rational_roots(zp("(2x-1)*(3x+2)"));
  ASSERT_EQ(h.size(), 2u);
  EXPECT_EQ(h[0], Rational(-2, 3));
  EXPECT_EQ(h[1], Rational(1, 2));
  EXPECT_THROW(rational_roots(ZPoly()), std::invalid_argument);
}

TEST(UniPoly, ExactQuotient) {
  EXPECT_EQ(exact_quotient(zp("x^2-1"), zp("x-1")), zp("x+1"));
  EXPECT_THROW(exact_quotient(zp("x^2+1"), zp("x-1")), std::domain_error);
  EXPECT_THROW(exact_quotient(zp("x"), zp("2")), std::domain_error);
}

TEST(EvalPoly, Examples) {
  std::vector<Integer> zero{Integer(0)};
  EXPECT_EQ(eval_poly(zp("(x-3)^3*(x+9)"), zero), Integer(-243));
  std::vector<Integer> twos(4, Integer(2));
  EXPECT_EQ(eval_poly(mp("x0*x1*x2*x3 - x0*x1 - x0*x3 - x1*x2 - x2*x3", 4), twos), Integer(0));
  std::vector<Integer> five{Integer(5)};
  EXPECT_EQ(eval_poly(zp("x"), five), Integer(5));
  EXPECT_THROW(eval_poly(zp("x"), twos), std::invalid_argument);
  EXPECT_THROW(eval_poly(mp("x0", 4), five), std::invalid_argument);
}

TEST(MultiPoly, DegRevLexOrder) {
  // x0^2 > x0*x1 > x1^2 > x0*x2 > x1*x2 > x2^2 for degree 2 in three variables.
  MultiPoly p = mp("x2^2 + x1*x2 + x0*x2 + x1^2 + x0*x1 + x0^2", 3);
  EXPECT_EQ(p.to_string(), "x0^2 + x0*x1 + x1^2 + x0*x2 + x1*x2 + x2^2");
  MultiPoly q = p.with_order(MonomialOrder::Lex);
  EXPECT_EQ(q.to_string(), "x0^2 + x0*x1 + x0*x2 + x1^2 + x1*x2 + x2^2");
}

TEST(MultiPoly, LexWithNamedVariables) {
  std::vector<std::string> names{"n", "m"};
  MultiPoly p = parse_polynomial("m^2 + 2n - m*n + 3", names, MonomialOrder::Lex);
  EXPECT_EQ(p.to_string(names), "-n*m + 2*n + m^2 + 3");
}

TEST(MultiPoly, SubtractMultipleMatchesArithmetic) {
  MultiPoly f = mp("3*x0^2*x1 - x1 + 4", 2);
  MultiPoly h = mp("x0 - 2*x1", 2);
  Monomial m = Monomial::variable(0) * Monomial::variable(1);
  MultiPoly expect = f - MultiPoly(2, MonomialOrder::DegRevLex, {{m, Integer(3)}}) * h;
  f.subtract_multiple(Integer(3), m, h);
  EXPECT_EQ(f, expect);
  EXPECT_EQ(f.to_string(), "6*x0*x1^2 - x1 + 4");
}

namespace {

MultiPoly random_poly(std::mt19937& rng, int nvars) {
  std::uniform_int_distribution<int> nterms(0, 5), e(0, 3), c(-9, 9);
  std::vector<Term> terms;
  int k = nterms(rng);
  for (int i = 0; i < k; ++i) {
    Monomial m;
    for (int v = 0; v < nvars; ++v) m = m * Monomial::variable(v, e(rng));
    terms.push_back({m, Integer(c(rng))});
  }
  return MultiPoly(nvars, MonomialOrder::DegRevLex, std::move(terms));
}

}  // namespace

TEST(MultiPolyProperties, RingAxiomsAndEvaluationHomomorphism) {
  std::mt19937 rng(99);
  std::uniform_int_distribution<int> pt(-4, 4);
  for (int iter = 0; iter < 500; ++iter) {
    int nvars = 1 + iter % 4;
    MultiPoly p = random_poly(rng, nvars), q = random_poly(rng, nvars), r = random_poly(rng, nvars);
    EXPECT_EQ((p + q) * r, p * r + q * r);
    EXPECT_EQ(p * q, q * p);
    EXPECT_TRUE((p - p).is_zero());
    std::vector<Integer> a;
    for (int v = 0; v < nvars; ++v) a.emplace_back(pt(rng));
    EXPECT_EQ((p * q).eval(a), p.eval(a) * q.eval(a));
    EXPECT_EQ((p + q).eval(a), p.eval(a) + q.eval(a));
    // Rendering round-trips through the parser.
    auto names = default_variable_names(nvars);
    EXPECT_EQ(parse_polynomial(p.to_string(), names), p);
  }
}

TEST(UniPolyProperties, GcdContentSquarefree) {
  std::mt19937 rng(2024);
  std::uniform_int_distribution<int> deg(0, 4), c(-6, 6);
  auto rnd = [&] {
    std::vector<Integer> v;
    int d = deg(rng);
    for (int i = 0; i <= d; ++i) v.emplace_back(c(rng));
    return ZPoly(std::move(v));
  };
  for (int iter = 0; iter < 400; ++iter) {
    ZPoly a = rnd(), b = rnd(), s = rnd();
    a *= s;
    b *= s;
    if (a.is_zero() && b.is_zero()) continue;
    QPoly g = gcd_poly_q(to_rational(a), to_rational(b));
    EXPECT_TRUE(g.lc().is_one());
    EXPECT_TRUE(divmod(to_rational(a), g).second.is_zero());
    EXPECT_TRUE(divmod(to_rational(b), g).second.is_zero());
    if (!s.is_zero()) EXPECT_TRUE(divmod(g, monic(to_rational(s))).second.is_zero());
    if (a.is_zero()) continue;
    auto [cont, prim] = content_primitive(a);
    EXPECT_EQ(prim * cont, a);
    EXPECT_GT(cont.sign(), 0);
    EXPECT_EQ(prim.lc().sign(), a.lc().sign());
    QPoly sf = squarefree_part(to_rational(a));
    EXPECT_TRUE(divmod(to_rational(a), sf).second.is_zero());
    EXPECT_EQ(rational_roots(primitive_integer_multiple(sf)), rational_roots(a));
    // Independent oracle for integer roots: brute-force scan of the Cauchy range.
    Integer bound(1);
    for (int i = 0; i < a.degree(); ++i) bound = std::max(bound, a.coeff(i).abs() + Integer(1));
    auto roots = rational_roots(a);
    for (long x = -40; x <= 40; ++x) {
      bool is_root = a.eval(Integer(x)).is_zero();
      bool listed = std::find(roots.begin(), roots.end(), Rational(x)) != roots.end();
      EXPECT_EQ(is_root, listed) << a.to_string() << " at " << x;
    }
  }
}
