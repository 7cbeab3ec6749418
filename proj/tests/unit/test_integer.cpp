#include <gtest/gtest.h>

#include <cstdint>
#include <limits>
#include <random>

#include "detideal/integer.hpp"
#include "detideal/rational.hpp"

using detideal::Integer;
using detideal::Rational;

TEST(Integer, GcdExamples) {
  EXPECT_EQ(gcd(Integer(-243), Integer(-81)), Integer(81));
  EXPECT_EQ(gcd(Integer(0), Integer(7)), Integer(7));
  EXPECT_EQ(gcd(Integer(12), Integer(18)), Integer(6));
  EXPECT_EQ(gcd(Integer(0), Integer(0)), Integer(0));
}

TEST(Integer, ParsesAndPrintsBigValues) {
  Integer big("-123456789012345678901234567890");
  EXPECT_FALSE(big.is_small());
  EXPECT_EQ(big.to_string(), "-123456789012345678901234567890");
  EXPECT_EQ((big - big).to_string(), "0");
  EXPECT_TRUE((big - big).is_small());
}

TEST(Integer, OverflowSpillsAndShrinks) {
  Integer m(std::numeric_limits<int64_t>::max());
  Integer p = m + Integer(1);
  EXPECT_FALSE(p.is_small());
  EXPECT_EQ(p.to_string(), "9223372036854775808");
  Integer back = p - Integer(1);
  EXPECT_TRUE(back.is_small());
  EXPECT_EQ(back, m);

  Integer lo(std::numeric_limits<int64_t>::min());
  EXPECT_EQ((-lo).to_string(), "9223372036854775808");
  EXPECT_EQ(lo.abs().to_string(), "9223372036854775808");
  EXPECT_EQ((lo * Integer(-1)).to_string(), "9223372036854775808");
  EXPECT_EQ(Integer::pow(Integer(2), 100).to_string(), "1267650600228229401496703205376");
}

TEST(Integer, FloorDivision) {
  EXPECT_EQ(Integer::div_floor(Integer(-7), Integer(2)), Integer(-4));
  EXPECT_EQ(Integer::mod_floor(Integer(-7), Integer(2)), Integer(1));
  EXPECT_EQ(Integer::div_floor(Integer(7), Integer(-2)), Integer(-4));
  EXPECT_EQ(Integer::mod_floor(Integer(7), Integer(-2)), Integer(-1));
  EXPECT_THROW(Integer::div_floor(Integer(1), Integer(0)), std::domain_error);
  EXPECT_TRUE(Integer::divides(Integer(0), Integer(0)));
  EXPECT_FALSE(Integer::divides(Integer(0), Integer(3)));
}

TEST(Integer, ExtendedGcd) {
  Integer s, t;
  Integer g = gcd_ext(Integer(240), Integer(-46), s, t);
  EXPECT_EQ(g, Integer(2));
  EXPECT_EQ(s * Integer(240) + t * Integer(-46), g);
}

// Random values spanning small and multi-limb magnitudes.
Integer random_integer(std::mt19937_64& rng) {
  std::uniform_int_distribution<int> kind(0, 3);
  std::uniform_int_distribution<int64_t> small(-1000, 1000);
  switch (kind(rng)) {
    case 0:
      return Integer(small(rng));
    case 1:
      return Integer(static_cast<int64_t>(rng() >> 1) * (rng() & 1 ? 1 : -1));
    default: {
      Integer v = Integer(static_cast<int64_t>(rng() >> 2));
      return v * Integer(static_cast<int64_t>(rng() >> 2)) + Integer(small(rng));
    }
  }
}

TEST(IntegerProperties, RingAxiomsAndGcd) {
  std::mt19937_64 rng(12345);
  for (int iter = 0; iter < 2000; ++iter) {
    Integer a = random_integer(rng), b = random_integer(rng), c = random_integer(rng);
    EXPECT_EQ((a + b) * c, a * c + b * c);
    EXPECT_EQ(a - b + b, a);
    Integer g = gcd(a, b);
    EXPECT_EQ(g, gcd(b, a));
    EXPECT_GE(g.sign(), 0);
    if (!g.is_zero()) {
      EXPECT_TRUE(Integer::divides(g, a));
      EXPECT_TRUE(Integer::divides(g, b));
    }
    if (!b.is_zero()) {
      Integer q = Integer::div_floor(a, b), r = Integer::mod_floor(a, b);
      EXPECT_EQ(q * b + r, a);
      EXPECT_TRUE(r.is_zero() || r.sign() == b.sign());
      EXPECT_LT(r.abs(), b.abs());
    }
    Integer s, t;
    Integer g2 = gcd_ext(a, b, s, t);
    EXPECT_EQ(g2, g);
    EXPECT_EQ(s * a + t * b, g);
    EXPECT_EQ(Integer(a.to_string()), a);
  }
}

TEST(Rational, NormalizesSignAndGcd) {
  Rational r(Integer(6), Integer(-4));
  EXPECT_EQ(r.num(), Integer(-3));
  EXPECT_EQ(r.den(), Integer(2));
  EXPECT_EQ(r.to_string(), "-3/2");
  EXPECT_EQ(Rational(4, 2).to_string(), "2");
  EXPECT_THROW(Rational(1, 0), std::domain_error);
  EXPECT_THROW(Rational(0).inverse(), std::domain_error);
}

TEST(RationalProperties, FieldAxioms) {
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<int> d(-50, 50);
  auto rnd = [&] {
    int q = d(rng);
    return Rational(Integer(d(rng)), Integer(q == 0 ? 1 : q));
  };
  for (int iter = 0; iter < 2000; ++iter) {
    Rational a = rnd(), b = rnd(), c = rnd();
    EXPECT_EQ((a + b) * c, a * c + b * c);
    EXPECT_EQ(gcd(a.num(), a.den()), a.num().is_zero() ? a.den() : Integer(1));
    EXPECT_GT(a.den().sign(), 0);
    if (!b.is_zero()) EXPECT_EQ(a / b * b, a);
    EXPECT_EQ(a < b, a.num() * b.den() < b.num() * a.den());
  }
}
