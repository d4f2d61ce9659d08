#include "lensd/errors.hpp"
#include "lensd/rational.hpp"

#include <gtest/gtest.h>

#include <random>

using lensd::BigInt;
using lensd::Rational;

TEST(Rational, StoredReduced) {
  Rational r(BigInt(6), BigInt(-4));
  EXPECT_EQ(r.numerator(), -3);
  EXPECT_EQ(r.denominator(), 2);
  EXPECT_EQ(Rational(BigInt(0), BigInt(-7)).str(), "0/1");
}

TEST(Rational, ZeroDenominatorRejected) {
  EXPECT_THROW(Rational(BigInt(1), BigInt(0)), lensd::InvalidArgument);
  EXPECT_THROW(Rational(1) / Rational(0), lensd::InvalidArgument);
}

TEST(Rational, ExactArithmetic) {
  Rational quarter(BigInt(1), BigInt(4));
  Rational sixth(BigInt(1), BigInt(6));
  EXPECT_EQ((quarter + sixth).str(), "5/12");
  EXPECT_EQ((quarter - sixth).str(), "1/12");
  EXPECT_EQ((quarter * sixth).str(), "1/24");
  EXPECT_EQ((quarter / sixth).str(), "3/2");
  EXPECT_EQ((-quarter).str(), "-1/4");
  EXPECT_TRUE((Rational(3) * Rational(BigInt(1), BigInt(3))).is_integer());
}

TEST(Rational, Ordering) {
  EXPECT_LT(Rational(BigInt(-1), BigInt(2)), Rational(BigInt(1), BigInt(6)));
  EXPECT_GT(Rational(BigInt(1), BigInt(4)), Rational(BigInt(1), BigInt(5)));
  EXPECT_EQ(Rational(BigInt(2), BigInt(4)), Rational(BigInt(1), BigInt(2)));
}

TEST(Rational, ParseAndPrint) {
  EXPECT_EQ(Rational::parse("-6/8").str(), "-3/4");
  EXPECT_EQ(Rational::parse("5").str(), "5/1");
  EXPECT_THROW(Rational::parse("x/2"), lensd::InvalidArgument);
  EXPECT_THROW(Rational::parse("1/0"), lensd::InvalidArgument);
}

TEST(Rational, BeyondMachineWords) {
  BigInt big = BigInt(1) << 200;
  Rational r(big + 1, big);
  EXPECT_EQ(r - Rational(1), Rational(BigInt(1), big));
}

TEST(RationalProperty, AddThenSubtractIsIdentity) {
  std::mt19937_64 rng(20240917);
  std::uniform_int_distribution<std::int64_t> num(-1'000'000'000, 1'000'000'000);
  std::uniform_int_distribution<std::int64_t> den(1, 1'000'000'000);
  for (int k = 0; k < 2000; ++k) {
    Rational a(BigInt(num(rng)), BigInt(den(rng)));
    Rational c(BigInt(num(rng)), BigInt(den(rng)));
    ASSERT_EQ((a + c) - c, a) << a << " " << c;
    ASSERT_EQ(boost::multiprecision::gcd(a.numerator(), a.denominator()) == 1 || a.is_zero(), true);
  }
}

TEST(RationalProperty, ParseInvertsStr) {
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<std::int64_t> num(-99999, 99999);
  std::uniform_int_distribution<std::int64_t> den(1, 99999);
  for (int k = 0; k < 500; ++k) {
    Rational a(BigInt(num(rng)), BigInt(den(rng)));
    ASSERT_EQ(Rational::parse(a.str()), a);
  }
}
