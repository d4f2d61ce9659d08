#include "lensd/dinvariants.hpp"
#include "lensd/errors.hpp"
#include "lensd/modarith.hpp"
#include "oracles.hpp"

#include <gtest/gtest.h>

#include <algorithm>
#include <string>
#include <vector>

using namespace lensd;

namespace {

std::vector<std::string> strings(const DInvTable& t) {
  std::vector<std::string> out;
  for (const auto& v : t.values()) out.push_back(v.str());
  return out;
}

}  // namespace

TEST(LensSpace, Validation) {
  EXPECT_NO_THROW(LensSpace(1, 0));
  EXPECT_NO_THROW(LensSpace(7, 3));
  EXPECT_THROW(LensSpace(4, 2), NotCoprime);
  EXPECT_THROW(LensSpace(5, 0), NotCoprime);
  EXPECT_THROW(LensSpace(5, 6), InvalidArgument);
  EXPECT_THROW(LensSpace(0, 1), InvalidArgument);
  EXPECT_THROW(LensSpace(1, 1), InvalidArgument);
  EXPECT_EQ(LensSpace(7, 3).euclid_step(), LensSpace(3, 1));
  EXPECT_EQ(LensSpace(3, 1).euclid_step(), LensSpace::sphere());
}

TEST(DInvariant, FrozenSmallValues) {
  // Hand evaluation of one or two recursion steps, matched against the
  // int64 oracle before being frozen.
  EXPECT_EQ(oracle::d_recursive(2, 1, 1).str(), "1/4");
  EXPECT_EQ(oracle::d_recursive(2, 1, 0).str(), "-1/4");
  EXPECT_EQ(d_invariant(LensSpace::sphere(), 0).str(), "0/1");
  EXPECT_EQ(d_invariant(LensSpace(2, 1), 1).str(), "1/4");
  EXPECT_EQ(d_invariant(LensSpace(2, 1), 0).str(), "-1/4");
  EXPECT_EQ(d_invariant(LensSpace(3, 1), 0).str(), "-1/2");
  EXPECT_EQ(d_invariant(LensSpace(3, 1), 1).str(), "1/6");
  EXPECT_EQ(d_invariant(LensSpace(3, 1), 2).str(), "1/6");
}

TEST(DTable, FrozenTables) {
  EXPECT_EQ(strings(d_table(LensSpace::sphere())), (std::vector<std::string>{"0/1"}));
  EXPECT_EQ(strings(d_table(LensSpace(3, 1))),
            (std::vector<std::string>{"-1/2", "1/6", "1/6"}));
  const std::vector<std::string> l51{"-1/1", "-1/5", "1/5", "1/5", "-1/5"};
  ASSERT_EQ(oracle::d_table_strings(5, 1), l51);
  EXPECT_EQ(strings(d_table(LensSpace(5, 1))), l51);
}

TEST(DTable, MatchesTopDownOracle) {
  for (std::int64_t p = 2; p <= 60; ++p) {
    for (std::int64_t q : oracle::units(p)) {
      ASSERT_EQ(strings(d_table(LensSpace(p, q))), oracle::d_table_strings(p, q))
          << "L(" << p << "," << q << ")";
    }
  }
}

TEST(DTable, SingleValueAgreesWithTable) {
  for (std::int64_t p = 2; p <= 40; ++p) {
    for (std::int64_t q : oracle::units(p)) {
      const LensSpace space(p, q);
      const DInvTable t = d_table(space);
      for (std::int64_t i = -p; i < 2 * p; ++i) {
        ASSERT_EQ(d_invariant(space, i), t[i]);
        ASSERT_EQ(d_invariant(space, i), d_invariant(space, i + p));
      }
    }
  }
}

TEST(DTable, ShiftRelationAndDualRoute) {
  for (std::int64_t p = 1; p <= 80; ++p) {
    for (std::int64_t q : p == 1 ? std::vector<std::int64_t>{0} : oracle::units(p)) {
      const LensSpace space(p, q);
      const DInvTable t = d_table(space);
      for (std::int64_t i = 0; i < p; ++i) {
        const Rational expected(BigInt(p - 1 - 2 * i), BigInt(p));
        ASSERT_EQ(t[i + q] - t[i], expected);
      }
      EXPECT_FALSE(shift_relation_violation(t).has_value());
      for (std::int64_t anchor = 0; anchor < p; anchor += 1 + p / 4) {
        ASSERT_EQ(d_table_by_shift(space, anchor), t) << space.name() << " anchor " << anchor;
      }
    }
  }
}

TEST(DTable, CorruptedTableIsDetected) {
  const LensSpace space(7, 3);
  std::vector<Rational> values = d_table(space).values();
  values[4] += Rational(1);
  const DInvTable bad(space, values);
  EXPECT_TRUE(shift_relation_violation(bad).has_value());
  EXPECT_NE(d_table_by_shift(space), bad);
}

TEST(DTable, WrongLengthRejected) {
  EXPECT_THROW(DInvTable(LensSpace(3, 1), {Rational(0)}), InvalidArgument);
}

TEST(SpinStructures, Examples) {
  EXPECT_EQ(spin_structures(LensSpace(5, 1)).labels, (std::vector<std::int64_t>{0}));
  EXPECT_EQ(spin_structures(LensSpace(5, 2)).labels, (std::vector<std::int64_t>{3}));
  EXPECT_EQ(spin_structures(LensSpace(2, 1)).labels, (std::vector<std::int64_t>{0, 1}));
}

TEST(SpinStructures, CountAndDefiningCongruence) {
  for (std::int64_t p = 2; p <= 200; ++p) {
    for (std::int64_t q : oracle::units(p)) {
      const SpinSet s = spin_structures(LensSpace(p, q));
      ASSERT_EQ(s.size(), p % 2 == 0 ? 2u : 1u);
      // Solutions of 2i = q - 1 by scanning all labels.
      std::vector<std::int64_t> solved;
      for (std::int64_t i = 0; i < p; ++i) {
        if (oracle::modp(2 * i - q + 1, p) == 0) solved.push_back(i);
      }
      ASSERT_EQ(s.labels, solved) << p << " " << q;
    }
  }
}

TEST(Conjugation, SymmetricAboutEverySpinStructure) {
  for (std::int64_t p = 2; p <= 120; ++p) {
    for (std::int64_t q : oracle::units(p)) {
      const LensSpace space(p, q);
      const DInvTable t = d_table(space);
      for (std::int64_t s : spin_structures(space).labels) {
        for (std::int64_t n = 0; n < p; ++n) ASSERT_EQ(t[s + n], t[s - n]);
      }
      // Both numbers (q-1)/2 and (p+q-1)/2 are axes whenever integral.
      for (std::int64_t twice : {q - 1, p + q - 1}) {
        if (twice % 2 != 0) continue;
        EXPECT_FALSE(conjugation_violation(t, twice / 2).has_value());
      }
    }
  }
}

TEST(Conjugation, LabelExamples) {
  EXPECT_EQ(conjugate_label(LensSpace(5, 1), 0, 0), 0);
  EXPECT_EQ(conjugate_label(LensSpace(5, 1), 0, 1), 4);
  EXPECT_EQ(conjugate_label(LensSpace(5, 2), 3, 4), 2);
  EXPECT_THROW(conjugate_label(LensSpace(5, 2), 0, 4), InvalidArgument);
}

TEST(ReverseOrientation, NegatesAndIsInvolution) {
  EXPECT_EQ(strings(reverse_orientation_table(d_table(LensSpace::sphere()))),
            (std::vector<std::string>{"0/1"}));
  const DInvTable t = d_table(LensSpace(3, 1));
  const DInvTable r = reverse_orientation_table(t);
  EXPECT_EQ(strings(r), (std::vector<std::string>{"1/2", "-1/6", "-1/6"}));
  EXPECT_TRUE(r.reversed());
  EXPECT_FALSE(shift_relation_violation(r).has_value());
  EXPECT_EQ(reverse_orientation_table(r), t);
}

TEST(DTable, LargeChainStaysExact) {
  // Consecutive Fibonacci numbers give the longest Euclidean chain for their size.
  const LensSpace space(832040, 514229);
  const Rational d0 = d_invariant(space, 0);
  EXPECT_EQ(d0 + shift_increment(space, 0), d_invariant(space, 514229));
}

TEST(ReverseOrientation, MatchesComplementaryLensSpaceAsMultiset) {
  // -L(p,q) is L(p,p-q); the labelings differ, the value multisets must not.
  for (std::int64_t p = 3; p <= 50; ++p) {
    for (std::int64_t q : oracle::units(p)) {
      std::vector<Rational> reversed = reverse_orientation_table(d_table(LensSpace(p, q))).values();
      std::vector<Rational> other = d_table(LensSpace(p, p - q)).values();
      std::sort(reversed.begin(), reversed.end());
      std::sort(other.begin(), other.end());
      ASSERT_EQ(reversed, other) << p << " " << q;
    }
  }
}
