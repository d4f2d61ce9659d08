#include "lensd/errors.hpp"
#include "lensd/modarith.hpp"
#include "lensd/rational.hpp"
#include "oracles.hpp"

#include <gtest/gtest.h>

#include <random>

using namespace lensd;

TEST(ModRep, Examples) {
  EXPECT_EQ(mod_rep(7, 5).value, 2);
  EXPECT_EQ(mod_rep(0, 5).value, 0);
  EXPECT_EQ(mod_rep(-3, 5).value, 2);
  EXPECT_EQ(mod_rep(-3, 5).modulus, 5);
  EXPECT_THROW(mod_rep(3, 0), InvalidArgument);
}

TEST(ModRep, NegationSumsToZeroOrP) {
  for (std::int64_t p = 1; p <= 1000; ++p) {
    for (std::int64_t a = -2 * p; a <= 2 * p; a += (p < 50 ? 1 : 7)) {
      std::int64_t s = mod_rep(a, p).value + mod_rep(-a, p).value;
      ASSERT_TRUE(s == 0 || s == p) << a << " mod " << p;
    }
  }
}

TEST(ModInv, Examples) {
  EXPECT_EQ(mod_inv(1, 9).value, 1);
  EXPECT_EQ(mod_inv(3, 7).value, 5);
  EXPECT_EQ(oracle::inverse_by_scan(3, 7), 5);
  EXPECT_THROW(mod_inv(2, 4), NotCoprime);
  EXPECT_THROW(mod_inv(2, 0), InvalidArgument);
}

TEST(ModInv, AgreesWithExhaustiveScan) {
  for (std::int64_t p = 2; p <= 1000; ++p) {
    for (std::int64_t a = 1; a < p; a += (p < 100 ? 1 : 13)) {
      if (gcd(a, p) != 1) {
        ASSERT_THROW(mod_inv(a, p), NotCoprime);
        continue;
      }
      std::int64_t inv = mod_inv(a, p).value;
      ASSERT_EQ(mod_rep(a * inv, p).value, 1) << a << " mod " << p;
      if (p < 100) ASSERT_EQ(inv, oracle::inverse_by_scan(a, p));
    }
  }
  EXPECT_EQ(mod_inv(-3, 7).value, oracle::inverse_by_scan(-3, 7));
}

TEST(Legendre, Examples) {
  EXPECT_EQ(legendre(1, 7), 1);
  EXPECT_EQ(legendre(2, 7), 1);
  EXPECT_EQ(legendre(3, 7), -1);
  EXPECT_EQ(legendre(14, 7), 0);
  EXPECT_EQ(legendre(-1, 5), 1);
  EXPECT_THROW(legendre(1, 2), InvalidArgument);
  EXPECT_THROW(legendre(1, 9), InvalidArgument);
  EXPECT_THROW(legendre_by_scan(1, 15), InvalidArgument);
}

TEST(Legendre, EulerMatchesSquareScanAndIsMultiplicative) {
  for (std::int64_t p = 3; p <= 500; p += 2) {
    if (!oracle::is_prime(p)) continue;
    int residues = 0;
    std::vector<int> symbol(static_cast<std::size_t>(p));
    for (std::int64_t m = 0; m < p; ++m) {
      symbol[static_cast<std::size_t>(m)] = legendre(m, p);
      ASSERT_EQ(symbol[static_cast<std::size_t>(m)], legendre_by_scan(m, p)) << m << " " << p;
      if (m > 0) {
        ASSERT_EQ(symbol[static_cast<std::size_t>(m)] == 1, oracle::is_square_mod(m, p));
      }
      if (m > 0 && symbol[static_cast<std::size_t>(m)] == 1) ++residues;
    }
    ASSERT_EQ(residues, (p - 1) / 2);
    for (std::int64_t a = 0; a < p; a += (p < 60 ? 1 : 11)) {
      for (std::int64_t b = 0; b < p; ++b) {
        ASSERT_EQ(legendre(a * b, p),
                  symbol[static_cast<std::size_t>(a)] * symbol[static_cast<std::size_t>(b)]);
      }
    }
  }
}

TEST(BracketSumCase, Examples) {
  EXPECT_EQ(bracket_sum_case(1, 2, 5), SumCase::NoWrap);
  EXPECT_EQ(bracket_sum_case(3, 4, 5), SumCase::Wrap);
  EXPECT_EQ(bracket_sum_case(0, 0, 5), SumCase::NoWrap);
  EXPECT_THROW(bracket_sum_case(0, 0, 0), InvalidArgument);
}

TEST(BracketSumCase, ReproducesReductionOfSum) {
  for (std::int64_t p = 1; p <= 200; ++p) {
    for (std::int64_t x = -p; x < 2 * p; x += (p < 40 ? 1 : 3)) {
      for (std::int64_t y = -p; y < 2 * p; y += (p < 40 ? 1 : 5)) {
        std::int64_t sum = mod_rep(x, p).value + mod_rep(y, p).value;
        if (bracket_sum_case(x, y, p) == SumCase::Wrap) sum -= p;
        ASSERT_EQ(sum, mod_rep(x + y, p).value) << x << " " << y << " " << p;
      }
    }
  }
}

TEST(CenteredRep, TiesTakePositiveHalf) {
  EXPECT_EQ(centered_rep(4, 8), 4);
  EXPECT_EQ(centered_rep(5, 8), -3);
  EXPECT_EQ(centered_rep(3, 7), 3);
  EXPECT_EQ(centered_rep(4, 7), -3);
  EXPECT_EQ(centered_rep(-1, 7), -1);
}

TEST(Arithmetic, PhiAndPrimality) {
  EXPECT_EQ(euler_phi(1), 1);
  EXPECT_EQ(euler_phi(12), 4);
  EXPECT_EQ(euler_phi(97), 96);
  for (std::int64_t n = 0; n < 300; ++n) ASSERT_EQ(is_prime(n), oracle::is_prime(n)) << n;
  for (std::int64_t p = 1; p < 200; ++p) {
    ASSERT_EQ(euler_phi(p), static_cast<std::int64_t>(oracle::units(p).size() + (p == 1 ? 1 : 0)));
  }
}

TEST(Arithmetic, MulModLargeOperands) {
  const std::int64_t p = 1'000'000'007;
  EXPECT_EQ(mul_mod(p - 1, p - 1, p), 1);
  EXPECT_EQ(mul_mod(-2, 3, 7), 1);
}
