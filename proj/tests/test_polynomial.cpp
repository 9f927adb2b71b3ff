#include <gtest/gtest.h>

#include <random>

#include "orikami/error.hpp"
#include "orikami/polynomial.hpp"

namespace orikami {
namespace {

using P = LaurentPolynomial;

P random_poly(std::mt19937_64& rng) {
  std::uniform_int_distribution<int> low(-4, 4);
  std::uniform_int_distribution<int> len(0, 5);
  std::uniform_int_distribution<std::int64_t> c(-5, 5);
  std::vector<std::int64_t> coeffs(len(rng));
  for (auto& x : coeffs) x = c(rng);
  return P(low(rng), coeffs);
}

TEST(LaurentPolynomial, CanonicalForm) {
  const P p(-2, {0, 0, 3, 0, -1, 0});
  EXPECT_EQ(p.low_exponent(), 0);
  EXPECT_EQ(p.high_exponent(), 2);
  EXPECT_EQ(p.coefficients(), (std::vector<std::int64_t>{3, 0, -1}));
  EXPECT_TRUE(P(3, {0, 0}).is_zero());
  EXPECT_EQ(P(3, {0, 0}), P());
}

TEST(LaurentPolynomial, Arithmetic) {
  const P a(0, {1, 1});   // 1 + t
  const P b(0, {1, -1});  // 1 - t
  EXPECT_EQ(a * b, P(0, {1, 0, -1}));
  EXPECT_EQ(a + b, P(2));
  EXPECT_EQ(a - b, P::monomial(2, 1));
  EXPECT_EQ(-a, P(0, {-1, -1}));
  EXPECT_EQ(a.pow(3), P(0, {1, 3, 3, 1}));
  EXPECT_EQ(a.pow(0), P(1));
}

TEST(LaurentPolynomial, ShiftMirrorDivide) {
  const P p(-1, {2, 0, 5});  // 2t^-1 + 5t
  EXPECT_EQ(p.shifted(1), P(0, {2, 0, 5}));
  EXPECT_EQ(p.mirrored(), P(-1, {5, 0, 2}));
  EXPECT_EQ(P(-4, {1, 0, 0, 0, 1}).exponents_divided(-4), P(0, {1, 1}));
  EXPECT_THROW(P(0, {1, 1}).exponents_divided(2), NumericError);
}

TEST(LaurentPolynomial, ExactDivide) {
  const P a(0, {1, 1});
  const P b(-2, {3, 0, -1});
  EXPECT_EQ((a * b).exact_divide(a), b);
  EXPECT_EQ((a * b).exact_divide(b), a);
  EXPECT_THROW(P(0, {1, 0, 1}).exact_divide(a), NumericError);
}

TEST(LaurentPolynomial, Evaluate) {
  const P p(-1, {1, -1, 1});
  EXPECT_EQ(p.evaluate(1), 1);
  EXPECT_EQ(p.evaluate(-1), -3);
  EXPECT_EQ(P(0, {1, 2, 3}).evaluate(2), 17);
}

TEST(LaurentPolynomial, ToString) {
  EXPECT_EQ(P(0, {1, -1, 1}).to_string(), "t^2 - t + 1");
  EXPECT_EQ(P(-4, {-1, 1, 0, 1}).to_string(), "t^-1 + t^-3 - t^-4");
  EXPECT_EQ(P().to_string(), "0");
  EXPECT_EQ(P(-2).to_string("A"), "-2");
  EXPECT_EQ(P::monomial(3, 1).to_string("A"), "3A");
}

TEST(LaurentPolynomial, RingLaws) {
  std::mt19937_64 rng(17);
  for (int i = 0; i < 300; ++i) {
    const P a = random_poly(rng), b = random_poly(rng), c = random_poly(rng);
    EXPECT_EQ(a + b, b + a);
    EXPECT_EQ(a * b, b * a);
    EXPECT_EQ((a + b) * c, a * c + b * c);
    EXPECT_EQ((a * b) * c, a * (b * c));
    EXPECT_EQ(a - a, P());
    EXPECT_EQ((a * b).mirrored(), a.mirrored() * b.mirrored());
    EXPECT_EQ((a * b).evaluate(1), a.evaluate(1) * b.evaluate(1));
    EXPECT_EQ((a * b).evaluate(-1), a.evaluate(-1) * b.evaluate(-1));
    if (!b.is_zero()) EXPECT_EQ((a * b).exact_divide(b), a);
  }
}

TEST(LaurentPolynomial, TermsRoundTrip) {
  const P p(-3, {4, 0, -2, 7});
  EXPECT_EQ(P::from_terms(p.terms()), p);
  EXPECT_EQ(p.coefficient(-3), 4);
  EXPECT_EQ(p.coefficient(-2), 0);
  EXPECT_EQ(p.coefficient(10), 0);
  EXPECT_EQ(p.leading_coefficient(), 7);
}

}  // namespace
}  // namespace orikami
