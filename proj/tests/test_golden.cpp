#include <affico/golden.hpp>

#include <gtest/gtest.h>

#include <cmath>
#include <unordered_set>

using namespace affico;

namespace {

const double kTau = (1 + std::sqrt(5.0)) / 2;

GoldenNumber g(long a, long b) { return {make_rational(a), make_rational(b)}; }

}  // namespace

TEST(Golden, TauSquaredIsTauPlusOne) {
  const auto t = GoldenNumber::tau();
  EXPECT_EQ(t * t, t + 1);
  EXPECT_EQ(t.pow(3), 2 * t + 1);
}

TEST(Golden, ProductMatchesFloat) {
  for (long a = -4; a <= 4; ++a)
    for (long b = -4; b <= 4; ++b) {
      const auto x = g(a, b), y = g(b - 1, a + 2);
      EXPECT_NEAR((x * y).to_double(), (a + b * kTau) * ((b - 1) + (a + 2) * kTau), 1e-9);
    }
}

TEST(Golden, InverseOfTauIsTauMinusOne) {
  EXPECT_EQ(GoldenNumber::tau().inverse(), GoldenNumber::tau() - 1);
  EXPECT_EQ(GoldenNumber::tau().pow(-2), 2 - GoldenNumber::tau());
  EXPECT_THROW(GoldenNumber(0).inverse(), std::domain_error);
}

TEST(Golden, ConjugateAndNorm) {
  const auto t = GoldenNumber::tau();
  EXPECT_EQ(t.conj(), 1 - t);
  EXPECT_EQ(t * t.conj(), GoldenNumber(-1));
  // a^2 + ab - b^2 for 3 + 2 tau
  EXPECT_EQ(g(3, 2).norm(), Rational(11));
}

TEST(Golden, SignMatchesFloatNearCancellation) {
  EXPECT_EQ(g(-8, -16).sign(), Sign::negative);
  EXPECT_LT(-8 - 16 * kTau, 0);
  // Fibonacci ratios approach tau from both sides
  long f0 = 1, f1 = 1;
  for (int i = 0; i < 30; ++i) {
    const auto x = g(-f1, f0);  // f0 tau - f1
    const double fx = f0 * kTau - f1;
    if (std::abs(fx) > 1e-6) {
      EXPECT_EQ(x.sign(), fx > 0 ? Sign::positive : Sign::negative) << i;
    }
    const long f2 = f0 + f1;
    f0 = f1;
    f1 = f2;
  }
  EXPECT_EQ(GoldenNumber(0).sign(), Sign::zero);
}

TEST(Golden, OrderIsExact) {
  // F_40 tau - F_41 and F_41 tau - F_42 straddle 0 and differ by ~1e-8
  const long f40 = 102334155, f41 = 165580141, f42 = 267914296;
  EXPECT_LT(g(-f41, f40), GoldenNumber(0));
  EXPECT_GT(g(-f42, f41), GoldenNumber(0));
}

TEST(Golden, FormatIsCanonical) {
  EXPECT_EQ(format(GoldenNumber(0)), "0");
  EXPECT_EQ(format(GoldenNumber::tau()), "tau");
  EXPECT_EQ(format(-GoldenNumber::tau()), "-tau");
  EXPECT_EQ(format(GoldenNumber(Rational(7, 5), Rational(1, 5))), "7/5+1/5*tau");
  EXPECT_EQ(format(g(2, -3)), "2-3*tau");
}

TEST(Golden, CanonicalizesRationals) {
  EXPECT_EQ(GoldenNumber(Rational(2, 4), Rational(-3, 6)), GoldenNumber(Rational(1, 2), Rational(-1, 2)));
  EXPECT_EQ(make_rational(4, -6), Rational(-2, 3));
}

TEST(Golden, HashAgreesWithEquality) {
  std::unordered_set<GoldenNumber> s;
  s.insert(g(1, 1));
  s.insert(GoldenNumber::tau() * GoldenNumber::tau());
  s.insert(GoldenNumber(Rational(2, 2), Rational(3, 3)));
  EXPECT_EQ(s.size(), 1U);
}
