#include "lensd/errors.hpp"
#include "lensd/modarith.hpp"
#include "lensd/relative.hpp"
#include "oracles.hpp"

#include <gtest/gtest.h>

using namespace lensd;

TEST(RelF, FrozenL51) {
  // 5 (d(n) - d(0)) over the L(5,1) table (-1, -1/5, 1/5, 1/5, -1/5).
  const RelFnTable f = rel_f_table(LensSpace(5, 1), 0);
  EXPECT_EQ(f.values(), (std::vector<std::int64_t>{0, 4, 6, 6, 4}));
  EXPECT_EQ(oracle::modp(f[2], 5), 1);
  EXPECT_EQ(oracle::modp(-4, 5), 1);
  // Step rule at n = 0 and n = 2.
  EXPECT_EQ(f[1], f[0] + 4 - 2 * 0);
  EXPECT_EQ(f[3], f[2] + 4 - 2 * 2);
}

TEST(RelF, NonSpinLabelRejected) {
  EXPECT_THROW(rel_f_table(LensSpace(5, 1), 1), InvalidArgument);
  EXPECT_THROW(rel_f_table(LensSpace(5, 2), 0), InvalidArgument);
}

TEST(RelF, ReversedTableRejected) {
  const DInvTable t = reverse_orientation_table(d_table(LensSpace(5, 1)));
  EXPECT_THROW(rel_f_table(t, 0), InvalidArgument);
}

TEST(RelF, IdentitiesForAllSpinChoices) {
  for (std::int64_t p = 2; p <= 120; ++p) {
    for (std::int64_t q : oracle::units(p)) {
      const LensSpace space(p, q);
      const DInvTable t = d_table(space);
      for (std::int64_t s : spin_structures(space).labels) {
        const RelFnTable f = rel_f_table(t, s);
        ASSERT_EQ(f[0], 0);
        for (std::int64_t n = 0; n < p; ++n) {
          ASSERT_EQ(f[n + 1] - f[n], p - 1 - 2 * oracle::modp(s + n * q, p));
          ASSERT_EQ(oracle::modp(f[n] + n * n * q, p), 0);
          // Integrality, recomputed from the rational table.
          const Rational scaled = Rational(p) * (t[s + n * q] - t[s]);
          ASSERT_TRUE(scaled.is_integer());
          ASSERT_EQ(scaled, Rational(f[n]));
        }
        EXPECT_TRUE(check_rel_recursion(f).passed);
        EXPECT_TRUE(check_rel_congruence(f).passed);
      }
    }
  }
}

TEST(RelF, ChecksReportFirstFailure) {
  const LensSpace space(7, 2);
  std::vector<std::int64_t> values = rel_f_table(space, 4).values();
  values[3] += 7;  // keeps the congruence, breaks the step rule at n = 2
  const RelFnTable bad(space, 4, values);
  const IdentityCheck step = check_rel_recursion(bad);
  EXPECT_FALSE(step.passed);
  EXPECT_EQ(step.first_failure, 2);
  EXPECT_TRUE(check_rel_congruence(bad).passed);
  values[3] += 1;
  EXPECT_EQ(check_rel_congruence(RelFnTable(space, 4, values)).first_failure, 3);
}

TEST(GFunction, IdentityReindexingAgrees) {
  const LensSpace space(11, 3);
  for (std::int64_t s : spin_structures(space).labels) {
    EXPECT_TRUE(g_function(space, s, space, s, 1).agree);
  }
}

TEST(GFunction, L72AgainstL74) {
  const LensSpace first(7, 2);
  const LensSpace second(7, 4);
  const std::int64_t s1 = spin_structures(first).labels.front();
  const std::int64_t s2 = spin_structures(second).labels.front();
  // u^2 = 2 (mod 7): u = 3 or 4.
  for (std::int64_t u = 1; u < 7; ++u) {
    const GFunctionReport g = g_function(first, s1, second, s2, u);
    EXPECT_EQ(g.agree, u == 3 || u == 4) << "u=" << u;
    if (g.agree) {
      for (std::int64_t m = 0; m < 7; ++m) {
        EXPECT_TRUE(key_identity_holds(7, 2, u, s1, s2, m));
      }
    }
  }
}

TEST(GFunction, L71AgainstL72NeverAgrees) {
  const LensSpace first(7, 1);
  const LensSpace second(7, 2);
  for (std::int64_t s1 : spin_structures(first).labels) {
    for (std::int64_t s2 : spin_structures(second).labels) {
      for (std::int64_t u = 1; u < 7; ++u) {
        EXPECT_FALSE(g_function(first, s1, second, s2, u).agree);
      }
    }
  }
}

TEST(GFunction, Errors) {
  EXPECT_THROW(g_function(LensSpace(7, 1), 0, LensSpace(5, 1), 0, 1), InvalidArgument);
  EXPECT_THROW(g_function(LensSpace(8, 1), 0, LensSpace(8, 3), 1, 2), NotCoprime);
}

TEST(GFunction, AgreementImpliesKeyIdentity) {
  for (std::int64_t p = 3; p <= 30; ++p) {
    for (std::int64_t q1 : oracle::units(p)) {
      for (std::int64_t u : oracle::units(p)) {
        const std::int64_t q2 = oracle::modp(u * u * q1, p);
        const LensSpace first(p, q1);
        const LensSpace second(p, q2);
        for (std::int64_t s1 : spin_structures(first).labels) {
          for (std::int64_t s2 : spin_structures(second).labels) {
            if (!g_function(first, s1, second, s2, u).agree) continue;
            for (std::int64_t m = 0; m < p; ++m) {
              ASSERT_TRUE(key_identity_holds(p, q1, u, s1, s2, m));
              ASSERT_TRUE(threshold_equivalence_holds(p, q1, u, s1, s2, m));
            }
          }
        }
      }
    }
  }
}

TEST(KeyIdentity, EquivalentToThresholdConditionPointwise) {
  for (std::int64_t p = 2; p <= 60; ++p) {
    for (std::int64_t q : oracle::units(p)) {
      for (std::int64_t u : oracle::units(p)) {
        const std::int64_t uq = oracle::modp(u * q, p);
        for (std::int64_t s1 = 0; s1 < p; s1 += 1 + p / 8) {
          for (std::int64_t s2 = 0; s2 < p; s2 += 1 + p / 8) {
            for (std::int64_t m = 0; m < p; ++m) {
              const bool key = oracle::modp(s1 + m, p) + oracle::modp(s2 + (m + q) * u, p) ==
                               oracle::modp(s2 + m * u, p) + oracle::modp(s1 + m + uq, p);
              const bool threshold = (oracle::modp(s1 + m, p) < p - uq) ==
                                     (oracle::modp(s2 + m * u, p) < p - uq);
              ASSERT_EQ(key_identity_holds(p, q, u, s1, s2, m), key);
              ASSERT_EQ(threshold_equivalence_holds(p, q, u, s1, s2, m), threshold);
              ASSERT_EQ(key, threshold);
            }
          }
        }
      }
    }
  }
}
