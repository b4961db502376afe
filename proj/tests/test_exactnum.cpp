#include <random>

#include <gtest/gtest.h>

#include "tbrackets/exactnum.hpp"

using namespace tbrackets;

namespace {

Rational random_rational(std::mt19937& rng, bool nonnegative = false) {
  std::uniform_int_distribution<long> num(nonnegative ? 0 : -40, 40);
  std::uniform_int_distribution<long> den(1, 30);
  return Rational(num(rng), den(rng));
}

SurdValue random_surd(std::mt19937& rng) {
  std::bernoulli_distribution negative(0.5);
  const Rational r = random_rational(rng, true);
  return SurdValue(negative(rng) ? -1 : 1, r);
}

}  // namespace

TEST(Rational, LowestTermsAndPositiveDenominator) {
  const Rational r(6, -4);
  EXPECT_EQ(r.numerator(), -3);
  EXPECT_EQ(r.denominator(), 2);
  EXPECT_EQ(Rational(0, 7).denominator(), 1);
  EXPECT_THROW(Rational(1, 0), DomainError);
}

TEST(Rational, ParseAndPerfectSquares) {
  EXPECT_EQ(Rational::parse("-10/4"), Rational(-5, 2));
  EXPECT_EQ(Rational::parse("7"), Rational(7));
  EXPECT_THROW(Rational::parse("x/2"), DomainError);
  EXPECT_TRUE(Rational(9, 4).is_perfect_square());
  EXPECT_EQ(Rational(9, 4).exact_sqrt(), Rational(3, 2));
  EXPECT_FALSE(Rational(2).is_perfect_square());
  EXPECT_FALSE(Rational(-4).is_perfect_square());
}

TEST(GaussianRational, FieldOperations) {
  const GaussianRational a(Rational(1, 2), Rational(3));
  const GaussianRational b(Rational(-2), Rational(1, 3));
  EXPECT_EQ((a * b) / b, a);
  EXPECT_EQ(GaussianRational::i() * GaussianRational::i(), GaussianRational(-1));
  EXPECT_EQ(a.conj() * a, GaussianRational(a.norm2()));
}

TEST(DoubleFactorial, Values) {
  EXPECT_EQ(double_factorial(0), 1);
  EXPECT_EQ(double_factorial(-1), 1);
  EXPECT_EQ(double_factorial(7), 105);
  EXPECT_EQ(double_factorial(8), 384);
  EXPECT_THROW(double_factorial(-2), DomainError);
}

TEST(DoubleFactorial, RecurrenceAndEvenOddIdentities) {
  for (long m = 1; m <= 60; ++m) EXPECT_EQ(double_factorial(m), Integer(m) * double_factorial(m - 2));
  for (long m = 0; m <= 30; ++m) {
    Integer two_m;
    mpz_ui_pow_ui(two_m.get_mpz_t(), 2, static_cast<unsigned long>(m));
    EXPECT_EQ(double_factorial(2 * m), two_m * factorial(m));
    EXPECT_EQ(double_factorial(2 * m - 1) * double_factorial(2 * m), factorial(2 * m));
  }
}

TEST(DoubleFactorial, ExceedsSixtyFourBits) {
  // (N + sigma + nu - 1)!! at N = sigma = 20, nu = 9
  const Integer big = double_factorial(48);
  EXPECT_GT(mpz_sizeinbase(big.get_mpz_t(), 2), 64u);
}

TEST(Pochhammer, Values) {
  EXPECT_EQ(pochhammer(Rational(5, 7), 0), Rational(1));
  EXPECT_EQ(pochhammer(Rational(1, 2), 3), Rational(15, 8));
  EXPECT_EQ(pochhammer(Rational(-2), 3), Rational(0));
}

TEST(Pochhammer, RecurrenceProperty) {
  std::mt19937 rng(7);
  for (int trial = 0; trial < 200; ++trial) {
    const Rational a = random_rational(rng);
    const long k = trial % 9;
    EXPECT_EQ(pochhammer(a, k + 1), pochhammer(a, k) * (a + Rational(k)));
  }
}

TEST(Binomial, Values) {
  EXPECT_EQ(binomial(5, 2), 10);
  EXPECT_EQ(binomial(3, 0), 1);
  EXPECT_EQ(binomial(2, 5), 0);
  EXPECT_EQ(binomial(4, -1), 0);
}

TEST(Surd, Construction) {
  EXPECT_EQ(SurdValue(1, Rational(0)).sign(), 0);
  EXPECT_THROW(SurdValue(1, Rational(-1)), DomainError);
  EXPECT_EQ(SurdValue::from_rational(Rational(-3, 2)), SurdValue(-1, Rational(9, 4)));
}

TEST(Surd, MulExamples) {
  EXPECT_EQ(surd_mul(SurdValue::sqrt_of(Rational(1, 2)), SurdValue::sqrt_of(Rational(2))), SurdValue(1, Rational(1)));
  EXPECT_EQ(surd_mul(SurdValue(-1, Rational(3)), SurdValue(1, Rational(3))), SurdValue(-1, Rational(9)));
  EXPECT_EQ(surd_mul(SurdValue(-1, Rational(3)), SurdValue(1, Rational(3))).to_rational(), Rational(-3));
  EXPECT_TRUE(surd_mul(SurdValue::zero(), SurdValue(1, Rational(7))).is_zero());
}

TEST(Surd, ScaleExamples) {
  EXPECT_EQ(surd_scale(Rational(-1, 2), SurdValue(1, Rational(3))), SurdValue(-1, Rational(3, 4)));
  EXPECT_TRUE(surd_scale(Rational(0), SurdValue(1, Rational(5))).is_zero());
  EXPECT_EQ(surd_scale(Rational(2), SurdValue(-1, Rational(1, 4))), SurdValue(-1, Rational(1)));
}

TEST(Surd, MulIsCommutativeAndAssociative) {
  std::mt19937 rng(11);
  for (int trial = 0; trial < 300; ++trial) {
    const SurdValue a = random_surd(rng), b = random_surd(rng), c = random_surd(rng);
    EXPECT_EQ(a * b, b * a);
    EXPECT_EQ((a * b) * c, a * (b * c));
  }
}

TEST(Surd, AddRequiresCommensurableRadicands) {
  EXPECT_EQ(surd_add(SurdValue(1, Rational(2)), SurdValue(1, Rational(8))), SurdValue(1, Rational(18)));
  EXPECT_EQ(surd_add(SurdValue(1, Rational(2)), SurdValue(-1, Rational(8))), SurdValue(-1, Rational(2)));
  EXPECT_TRUE(surd_add(SurdValue(1, Rational(3)), SurdValue(-1, Rational(3))).is_zero());
  EXPECT_THROW(surd_add(SurdValue(1, Rational(2)), SurdValue(1, Rational(3))), SurdAdditionError);
}

TEST(SurdSum, CollapsesWhenCommensurable) {
  SurdSum s;
  s += SurdValue(1, Rational(2));
  s += SurdValue(1, Rational(3));
  EXPECT_FALSE(s.is_surd());
  EXPECT_THROW(s.to_surd(), SurdAdditionError);
  s += SurdValue(-1, Rational(12));  // -2 sqrt 3
  s += SurdValue(1, Rational(3));
  EXPECT_TRUE(s.is_surd());
  EXPECT_EQ(s.to_surd(), SurdValue(1, Rational(2)));
}

TEST(SurdSum, DoubleMatchesSumOfDoubles) {
  std::mt19937 rng(3);
  for (int trial = 0; trial < 100; ++trial) {
    SurdSum s;
    double expect = 0.0;
    for (int i = 0; i < 5; ++i) {
      const SurdValue v = random_surd(rng);
      s += v;
      expect += v.to_double();
    }
    EXPECT_NEAR(s.to_double(), expect, 1e-9);
  }
}

TEST(Surd, ToDoubleAndRendering) {
  EXPECT_DOUBLE_EQ(SurdValue(-1, Rational(1, 3)).to_double(), -0.57735026918962584);
  EXPECT_EQ(render_surd(SurdValue(-1, Rational(1, 3))), "-sqrt(1/3) ≈ -0.5773502692");
  EXPECT_EQ(render_surd(SurdValue::one()), "+sqrt(1) = 1");
  EXPECT_EQ(render_surd(SurdValue(-1, Rational(1, 4))), "-sqrt(1/4) = -0.5");
  EXPECT_EQ(render_surd(SurdValue::zero()), "0 = 0");
}
