#include <gtest/gtest.h>

#include <random>

#include "graphdesign/error.hpp"
#include "graphdesign/polynomial.hpp"

using namespace graphdesign;

namespace {

const RationalPoly n = RationalPoly::variable();

RationalPoly poly(std::initializer_list<std::int64_t> low_to_high) {
  std::vector<Rational> c;
  for (auto x : low_to_high) c.emplace_back(x);
  return RationalPoly(c);
}

BigInt factorial(int m) {
  BigInt f = 1;
  for (int i = 2; i <= m; ++i) f *= i;
  return f;
}

}  // namespace

TEST(RationalPoly, ZeroHasMarkerDegree) {
  EXPECT_TRUE(RationalPoly().is_zero());
  EXPECT_EQ(RationalPoly().degree(), RationalPoly::kZeroDegree);
  EXPECT_EQ((n - n).degree(), RationalPoly::kZeroDegree);
  EXPECT_EQ(RationalPoly().to_string(), "0");
}

TEST(RationalPoly, Arithmetic) {
  EXPECT_EQ((n - RationalPoly(1)) + RationalPoly(1), n);
  EXPECT_EQ(n * n, RationalPoly::monomial(Rational(1), 2));
  EXPECT_EQ((n + RationalPoly(1)) * (n - RationalPoly(1)), poly({-1, 0, 1}));
  EXPECT_EQ(-n + n, RationalPoly());
}

TEST(RationalPoly, CoefficientsStayReduced) {
  const auto p = n * Rational(6, 4);
  EXPECT_EQ(p.leading_coefficient(), Rational(3, 2));
  EXPECT_EQ(boost::multiprecision::denominator(p.leading_coefficient()), 2);
  EXPECT_EQ((n * Rational(-2, 6)).leading_coefficient(), Rational(-1, 3));
}

TEST(RationalPoly, ToString) {
  EXPECT_EQ(poly({-1, 0, 1}).to_string(), "n^2-1");
  EXPECT_EQ((falling_factorial(4, 6) * Rational(1, 48)).to_string(),
            "1/48*n^6-13/16*n^5+625/48*n^4-1755/16*n^3+12287/24*n^2-2509/2*n+1260");
}

TEST(FallingFactorial, Examples) {
  EXPECT_EQ(falling_factorial(0, 2), poly({0, -1, 1}));
  EXPECT_EQ(eval_int(falling_factorial(4, 6), 10), 720);
  EXPECT_EQ(falling_factorial(3, 0), RationalPoly(1));
  EXPECT_EQ(eval_int(falling_factorial(4, 6) * Rational(1, 48), 10), 15);
}

TEST(FallingFactorial, MatchesDirectProduct) {
  for (int shift = -3; shift <= 6; ++shift) {
    for (int length = 0; length <= 7; ++length) {
      for (std::int64_t x = -5; x <= 20; ++x) {
        std::int64_t product = 1;
        for (int i = 0; i < length; ++i) product *= x - shift - i;
        ASSERT_EQ(eval_int(falling_factorial(shift, length), x), product);
      }
    }
  }
}

TEST(BinomOfPoly, Examples) {
  const auto pairs = n * (n - RationalPoly(1)) * Rational(1, 2) - RationalPoly(2);
  EXPECT_EQ(eval_int(binom_of_poly(pairs, 3), 10), 12341);
  EXPECT_EQ(binomial(43, 3), 12341);
  EXPECT_EQ(binom_of_poly(n * n + n, 0), RationalPoly(1));
  EXPECT_EQ(binom_of_poly(n, 1), n);
}

TEST(BinomOfPoly, AgreesWithBinomial) {
  for (int r = 0; r <= 5; ++r) {
    const auto p = binom_of_poly(n, r);
    for (std::int64_t x = 0; x <= 40; ++x) ASSERT_EQ(BigInt(eval_int(p, x)), binomial(x, r));
  }
}

TEST(EvalInt, RejectsFractionsAndOverflow) {
  EXPECT_THROW(eval_int(n * Rational(1, 2), 3), IntegralityError);
  EXPECT_EQ(eval_int(n * Rational(1, 2), 4), 2);
  EXPECT_THROW(eval_int(RationalPoly::monomial(Rational(1), 5), 10'000'000), IntegralityError);
}

TEST(Interpolate, Examples) {
  const std::vector<std::pair<std::int64_t, std::int64_t>> square{{0, 0}, {1, 1}, {2, 4}};
  EXPECT_EQ(interpolate(square), n * n);
  const std::vector<std::pair<std::int64_t, std::int64_t>> constant{{5, 7}};
  EXPECT_EQ(interpolate(constant), RationalPoly(7));
  const auto target = falling_factorial(4, 6) * Rational(1, 48);
  std::vector<std::pair<std::int64_t, std::int64_t>> samples;
  for (std::int64_t x = 10; x <= 16; ++x) samples.emplace_back(x, eval_int(target, x));
  EXPECT_EQ(interpolate(samples), target);
}

TEST(Interpolate, RejectsBadInput) {
  EXPECT_THROW(interpolate(std::vector<std::pair<std::int64_t, std::int64_t>>{}), InvalidInputError);
  const std::vector<std::pair<std::int64_t, std::int64_t>> dup{{1, 1}, {1, 2}};
  EXPECT_THROW(interpolate(dup), InvalidInputError);
}

// Integer-valued polynomials built like the matrix entries: sums of
// (a / L!) (n - s)^(L) with integer a.
TEST(Interpolate, RoundTripsRandomIntegerValuedPolynomials) {
  std::mt19937 rng(99);
  std::uniform_int_distribution<int> coeff(-60, 60);
  std::uniform_int_distribution<int> shift(0, 6);
  for (int trial = 0; trial < 300; ++trial) {
    RationalPoly p;
    for (int length = 0; length <= 6; ++length) {
      const Rational c(BigInt(coeff(rng)), factorial(length));
      p += falling_factorial(shift(rng), length) * c;
    }
    std::vector<std::pair<std::int64_t, std::int64_t>> samples;
    for (std::int64_t x = 10; x <= 16; ++x) samples.emplace_back(x, eval_int(p, x));
    ASSERT_EQ(interpolate(samples), p);
  }
}

TEST(PrimitivePart, ClearsDenominatorsAndSign) {
  EXPECT_EQ(primitive_part(n * Rational(-3, 4) + RationalPoly(Rational(1, 2))), poly({-2, 3}));
  EXPECT_EQ(primitive_part(poly({6, 4})), poly({3, 2}));
}

TEST(EventualSign, Basic) {
  EXPECT_EQ(eventual_sign(poly({100, -1})), -1);
  EXPECT_EQ(eventual_sign(poly({-100, 0, 1})), 1);
  EXPECT_EQ(eventual_sign(RationalPoly()), 0);
}

TEST(PositivityThreshold, Examples) {
  EXPECT_EQ(positivity_threshold(poly({216, -59, 1})), 56);
  EXPECT_EQ(positivity_threshold(poly({-9516, 4541, -546, 1})), 538);
  EXPECT_EQ(positivity_threshold(poly({-120, 95, -20, 1})), 14);
}

TEST(PositivityThreshold, Errors) {
  EXPECT_THROW(positivity_threshold(poly({0, -1})), NoThresholdError);
  EXPECT_THROW(positivity_threshold(RationalPoly(5)), NoThresholdError);
  EXPECT_THROW(positivity_threshold(poly({1, 0, 1})), NoThresholdError);
}

TEST(PositivityThreshold, IsTightByDirectEvaluation) {
  std::mt19937 rng(2024);
  std::uniform_int_distribution<int> root(-40, 600);
  for (int trial = 0; trial < 200; ++trial) {
    RationalPoly p(1);
    const int degree = 1 + trial % 5;
    for (int i = 0; i < degree; ++i) p *= n - RationalPoly(root(rng));
    if (degree % 2 == 0) p *= n - RationalPoly(root(rng));
    const std::int64_t threshold = positivity_threshold(p);
    ASSERT_GT(p(Rational(threshold)), 0);
    ASSERT_LE(p(Rational(threshold - 1)), 0);
    for (std::int64_t x = threshold; x < threshold + 50; ++x) ASSERT_GT(p(Rational(x)), 0);
  }
}
