#include <gtest/gtest.h>

#include <random>

#include "detideal/groebner.hpp"
#include "detideal/ideal.hpp"

using namespace detideal;

namespace {

MultiPoly ux(const std::string& s) { return MultiPoly::from_univariate(parse_univariate(s)); }

Ideal zx(std::initializer_list<const char*> gens) {
  std::vector<ZPoly> g;
  for (const char* s : gens) g.push_back(parse_univariate(s));
  return Ideal::zx(g);
}

Ideal qx(std::initializer_list<const char*> gens) {
  std::vector<QPoly> g;
  for (const char* s : gens) g.push_back(to_rational(parse_univariate(s)));
  return Ideal::qx(g);
}

std::vector<std::string> nm{"n", "m"};

Ideal znm(std::initializer_list<const char*> gens) {
  std::vector<MultiPoly> g;
  for (const char* s : gens) g.push_back(parse_polynomial(s, nm, MonomialOrder::Lex));
  return Ideal(Ring::ZX, 2, MonomialOrder::Lex, std::move(g));
}

std::vector<std::string> strings(const Ideal& I) { return I.basis_strings(); }

}  // namespace

TEST(SymmetricQuotient, ResidueRange) {
  for (int b : {-7, -6, -2, 1, 2, 5, 6}) {
    for (int c = -30; c <= 30; ++c) {
      Integer q = symmetric_quotient(Integer(c), Integer(b));
      Integer r = Integer(c) - q * Integer(b);
      int a = std::abs(b);
      EXPECT_TRUE(2 * r.to_int64() > -a && 2 * r.to_int64() <= a) << c << " " << b;
    }
  }
}

TEST(CanonicalBasis, SmallUnivariateExamples) {
  EXPECT_EQ(strings(zx({"x-1", "x+1"})), (std::vector<std::string>{"2", "x + 1"}));
  EXPECT_EQ(strings(zx({"2", "x-1"})), (std::vector<std::string>{"2", "x + 1"}));
  EXPECT_EQ(strings(zx({"6", "x+5"})), (std::vector<std::string>{"6", "x - 1"}));
  EXPECT_EQ(strings(zx({"-3x+3"})), (std::vector<std::string>{"3*x - 3"}));
  EXPECT_TRUE(zx({}).canonical_basis().empty());
  EXPECT_FALSE(zx({}).is_trivial());
  EXPECT_TRUE(zx({"0"}).is_zero());
}

TEST(CanonicalBasis, StrongBasisNeedsGPolynomials) {
  // <2x, 3y> contains xy = 2x*(-y) + 3y*x ... the G-polynomial of the leading terms.
  std::vector<std::string> v{"x", "y"};
  Ideal I(Ring::ZX, 2, MonomialOrder::DegRevLex,
          {parse_polynomial("2x", v), parse_polynomial("3y", v)});
  EXPECT_TRUE(ideal_member(parse_polynomial("x*y", v), I));
  EXPECT_FALSE(ideal_member(parse_polynomial("x", v), I));
  EXPECT_EQ(I.basis_strings(v), (std::vector<std::string>{"3*y", "2*x", "x*y"}));
}

TEST(CanonicalBasis, AppendixRegressionIdealsAreEqual) {
  Ideal I = zx({"x^3 + 1086*x^2 - 22022*x + 108388", "1106*x^2 - 22120*x + 108388"});
  Ideal J = zx({"x^3 - 20*x^2 + 98*x", "1106*x^2 - 22120*x + 108388"});
  EXPECT_TRUE(ideal_equal(I, J));
  EXPECT_TRUE(mutually_contained(I, J));
  EXPECT_EQ(I.canonical_basis(), J.canonical_basis());
  // Both ideals are (x^2 - 20x + 98) * <x, 1106>.
  EXPECT_EQ(strings(I), (std::vector<std::string>{"1106*x^2 - 22120*x + 108388", "x^3 - 20*x^2 + 98*x"}));
}

TEST(CanonicalBasis, TwoVariableLexExample) {
  Ideal I = znm({"n+2m", "3"});
  EXPECT_FALSE(ideal_member(parse_polynomial("m+n-1", nm, MonomialOrder::Lex), I));
  EXPECT_FALSE(ideal_member(parse_polynomial("2(n+m)+1", nm, MonomialOrder::Lex), I));
  EXPECT_TRUE(ideal_member(parse_polynomial("n-m", nm, MonomialOrder::Lex), I));
  EXPECT_EQ(I.basis_strings(nm), (std::vector<std::string>{"3", "n - m"}));
}

TEST(IdealMember, Examples) {
  EXPECT_TRUE(ideal_member(ux("x^2-1"), zx({"x-1"})));
  EXPECT_FALSE(ideal_member(ux("x"), zx({"2x", "x^2"})));
  EXPECT_THROW(ideal_member(parse_polynomial("n", nm, MonomialOrder::Lex), zx({"x"})), std::invalid_argument);
}

TEST(IdealEqual, Examples) {
  EXPECT_TRUE(ideal_equal(zx({"2", "x+1"}), zx({"2", "x-1"})));
  EXPECT_FALSE(ideal_equal(zx({"x+1"}), zx({"2", "x+1"})));
  EXPECT_THROW(ideal_equal(zx({"x"}), qx({"x"})), std::invalid_argument);
}

TEST(IsTrivial, Examples) {
  EXPECT_TRUE(zx({"2", "x", "3"}).is_trivial());
  EXPECT_FALSE(zx({"2", "x"}).is_trivial());
  EXPECT_TRUE(qx({"2", "x"}).is_trivial());
}

TEST(QxIdeal, MonicGenerator) {
  Ideal I = qx({"(x-3)^3*(x+9)", "3*(x-3)^3"});
  EXPECT_EQ(I.monic_generator(), to_rational(parse_univariate("(x-3)^3")));
  EXPECT_EQ(I.basis_strings(), (std::vector<std::string>{"x^3 - 9*x^2 + 27*x - 27"}));
  std::vector<QPoly> half{QPoly{Rational(-1), Rational(2)}};
  EXPECT_EQ(Ideal::qx(half).basis_strings(), (std::vector<std::string>{"x - 1/2"}));
}

namespace {

MultiPoly random_poly(std::mt19937& rng, int nvars, int max_exp, int max_coeff, int max_terms = 4) {
  std::uniform_int_distribution<int> nterms(1, max_terms), e(0, max_exp), c(-max_coeff, max_coeff);
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

TEST(GroebnerProperties, IdempotentAndContainsGenerators) {
  std::mt19937 rng(4242);
  for (int iter = 0; iter < 300; ++iter) {
    int nvars = 1 + iter % 3;
    int ngens = 1 + iter % 4;
    std::vector<MultiPoly> gens;
    for (int i = 0; i < ngens; ++i) gens.push_back(nvars == 1 ? random_poly(rng, 1, 4, 12) : random_poly(rng, nvars, 2, 6, 3));
    Ideal I(nvars == 1 ? Ring::Zx : Ring::ZX, nvars, MonomialOrder::DegRevLex, gens);
    const auto& basis = I.canonical_basis();
    for (const auto& g : I.generators()) EXPECT_TRUE(ideal_member(g, I)) << g.to_string();
    Ideal again(I.ring(), nvars, MonomialOrder::DegRevLex, basis);
    EXPECT_EQ(again.canonical_basis(), basis);
    EXPECT_TRUE(mutually_contained(I, again));
    for (const auto& b : basis) EXPECT_GT(b.lc().sign(), 0);
    // Basis of a shuffled, rescaled-by-units generator list is the same list.
    std::vector<MultiPoly> shuffled = gens;
    std::shuffle(shuffled.begin(), shuffled.end(), rng);
    for (auto& p : shuffled) p = -p;
    shuffled.push_back(gens.front() + gens.back());
    Ideal K(I.ring(), nvars, MonomialOrder::DegRevLex, shuffled);
    EXPECT_TRUE(ideal_equal(I, K));
  }
}

TEST(GroebnerProperties, EqualityAgreesWithMutualMembership) {
  std::mt19937 rng(77);
  int equal_seen = 0;
  for (int iter = 0; iter < 400; ++iter) {
    std::vector<MultiPoly> a, b;
    for (int i = 0; i < 2; ++i) a.push_back(random_poly(rng, 1, 2, 3));
    for (int i = 0; i < 2; ++i) b.push_back(random_poly(rng, 1, 2, 3));
    if (iter % 3 == 0) b = {a[0] + a[1], a[1]};
    Ideal I(Ring::Zx, 1, MonomialOrder::DegRevLex, a), J(Ring::Zx, 1, MonomialOrder::DegRevLex, b);
    bool eq = ideal_equal(I, J);
    EXPECT_EQ(eq, mutually_contained(I, J));
    equal_seen += eq;
  }
  EXPECT_GT(equal_seen, 100);
}

TEST(GroebnerProperties, QxBasisIsGcd) {
  std::mt19937 rng(5);
  std::uniform_int_distribution<int> c(-5, 5);
  for (int iter = 0; iter < 200; ++iter) {
    std::vector<QPoly> gens;
    QPoly g;
    QPoly common{Rational(c(rng)), Rational(1)};
    for (int i = 0; i < 3; ++i) {
      QPoly p = QPoly{Rational(c(rng)), Rational(c(rng)), Rational(c(rng))} * common;
      gens.push_back(p);
      if (!p.is_zero()) g = g.is_zero() ? monic(p) : gcd_poly_q(g, p);
    }
    Ideal I = Ideal::qx(gens);
    EXPECT_EQ(I.monic_generator(), g);
  }
}
