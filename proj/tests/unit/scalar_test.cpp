#include <gtest/gtest.h>

#include <random>

#include "courant/poly_parse.hpp"
#include "courant/sampling.hpp"
#include "oracles.hpp"

using namespace courant;

namespace {

Poly P(const char* s, int n) { return parse_poly(s, n); }

std::vector<Rational> random_point(sampling::Rng& rng, int n) {
  std::vector<Rational> pt;
  for (int i = 0; i < n; ++i) pt.push_back(sampling::small_rational(rng, 7, 5));
  return pt;
}

}  // namespace

TEST(Rational, LowestTerms) {
  EXPECT_EQ(Rational(6, -4).to_string(), "-3/2");
  EXPECT_EQ(Rational::parse("10/4"), Rational(5, 2));
  EXPECT_THROW(Rational(1) / Rational(0), std::domain_error);
}

TEST(Poly, DifferenceOfSquares) {
  EXPECT_EQ(P("x1 + 1", 1) * P("x1 - 1", 1), P("x1^2 - 1", 1));
  EXPECT_EQ((P("x1 + 1", 1) * P("x1 - 1", 1)).to_string(), "x1^2 - 1");
}

TEST(Poly, SelfDifferenceIsZero) {
  sampling::Rng rng(1);
  for (int t = 0; t < 20; ++t) {
    Poly p = sampling::random_poly(rng, 3, 4, 6);
    EXPECT_TRUE((p - p).is_zero());
  }
}

TEST(Poly, ProductOfScaledVariables) {
  Poly prod = P("1/2*x1", 2) * P("2/3*x2", 2);
  EXPECT_EQ(prod.to_string(), "1/3*x1*x2");
  sampling::Rng rng(2);
  for (int k = 0; k < 5; ++k) {
    auto pt = random_point(rng, 2);
    EXPECT_EQ(oracle::evaluate(prod, pt), Rational(1, 3) * pt[0] * pt[1]);
  }
}

TEST(Poly, ArithmeticAgreesWithEvaluation) {
  sampling::Rng rng(3);
  for (int t = 0; t < 30; ++t) {
    Poly a = sampling::random_poly(rng, 4, 3, 5), b = sampling::random_poly(rng, 4, 3, 5);
    for (int k = 0; k < 5; ++k) {
      auto pt = random_point(rng, 4);
      const Rational va = oracle::evaluate(a, pt), vb = oracle::evaluate(b, pt);
      EXPECT_EQ(oracle::evaluate(a + b, pt), va + vb);
      EXPECT_EQ(oracle::evaluate(a - b, pt), va - vb);
      EXPECT_EQ(oracle::evaluate(a * b, pt), va * vb);
      EXPECT_EQ(a.evaluate(pt), va);
    }
  }
}

TEST(Poly, PartialDerivatives) {
  EXPECT_EQ(P("x1^2*x2", 2).derivative(0), P("2*x1*x2", 2));
  EXPECT_TRUE(P("x1^3", 2).derivative(1).is_zero());
  sampling::Rng rng(4);
  for (int t = 0; t < 20; ++t) {
    Poly p = sampling::random_poly(rng, 3, 4, 6);
    EXPECT_EQ(p.derivative(0).derivative(1), p.derivative(1).derivative(0));
  }
}

TEST(Poly, GradedLexOrder) {
  EXPECT_EQ(P("x2 + x1^2 + 1 + x1", 2).to_string(), "x1^2 + x1 + x2 + 1");
  EXPECT_EQ(P("x2^3 + x1*x2", 2).to_string(), "x2^3 + x1*x2");
}

TEST(Poly, DegreeLimits) {
  std::vector<int> too_many(kMaxVars + 1, 0);
  EXPECT_THROW(Monomial::from_exponents(too_many), std::invalid_argument);
  EXPECT_THROW(P("x1^200", 1) * P("x1^100", 1), std::overflow_error);
}

TEST(PolyParse, GrammarExamples) {
  Poly p = P("3/2*x1^2*x3 - x2", 3);
  ASSERT_EQ(p.size(), 2u);
  EXPECT_EQ(p.terms()[0].coef, Rational(3, 2));
  EXPECT_EQ(p.terms()[0].mono, Monomial::from_exponents(std::vector<int>{2, 0, 1}));
  EXPECT_EQ(p.terms()[1].coef, Rational(-1));
  EXPECT_EQ(p.terms()[1].mono, Monomial::from_exponents(std::vector<int>{0, 1, 0}));
  EXPECT_TRUE(P("0", 2).is_zero());
  Poly s = P("x1", 1) + Poly::constant(1, 1);
  EXPECT_EQ(P("(x1+1)^2", 1), s * s);
  EXPECT_EQ(P(" ( x1 + 1 ) ^ 2 ", 1), P("x1^2+2*x1+1", 1));
}

TEST(PolyParse, Rejections) {
  EXPECT_THROW(P("x3", 2), ParseError);
  EXPECT_THROW(P("x0", 2), ParseError);
  EXPECT_THROW(P("x1 +", 2), ParseError);
  EXPECT_THROW(P("1/0", 2), ParseError);
  EXPECT_THROW(P("(x1", 2), ParseError);
  EXPECT_THROW(P("x1 x2", 2), ParseError);
  EXPECT_THROW(P("y1", 2), ParseError);
}

TEST(PolyParse, PrintedTextParsesBack) {
  sampling::Rng rng(5);
  for (int t = 0; t < 50; ++t) {
    Poly p = sampling::random_poly(rng, 3, 4, 6);
    EXPECT_EQ(P(p.to_string().c_str(), 3), p) << p.to_string();
  }
}
