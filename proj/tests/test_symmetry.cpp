#include "repetend/symmetry.hpp"

#include "repetend/error.hpp"
#include "repetend/numtheory.hpp"

#include "oracles.hpp"

#include <gtest/gtest.h>

#include <set>

namespace repetend {
namespace {

using Digits = std::vector<Digit>;

Natural N(std::uint64_t v) { return Natural(v); }

Digits as_vector(const DigitString& s) { return {s.digits().begin(), s.digits().end()}; }

ErrorKind kind_of(auto&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.kind();
  }
  ADD_FAILURE() << "no error raised";
  return ErrorKind::InternalInconsistency;
}

TEST(CyclicShift, Examples) {
  const DigitString s(10, {1, 4, 2, 8, 5, 7});
  EXPECT_EQ(as_vector(cyclic_shift(s, N(2))), (Digits{2, 8, 5, 7, 1, 4}));
  EXPECT_EQ(cyclic_shift(s, N(0)), s);
  EXPECT_EQ(cyclic_shift(s, N(6)), s);
  EXPECT_EQ(cyclic_shift(s, N(8)), cyclic_shift(s, N(2)));
}

TEST(ShiftFraction, Examples) {
  EXPECT_EQ(shift_fraction(N(7), 10, N(2)), ExactFraction(N(2), N(7)));
  EXPECT_EQ(shift_fraction(N(7), 10, N(0)), ExactFraction(N(1), N(7)));
  EXPECT_EQ(shift_fraction(N(11), 2, N(5)), ExactFraction(N(10), N(11)));
  EXPECT_EQ(kind_of([] { shift_fraction(N(8), 2, N(1)); }), ErrorKind::NotCoprime);
}

TEST(ShiftFraction, RotationMatchesResidueDirectly) {
  for (const std::uint64_t base : {2u, 10u}) {
    for (std::uint64_t m = 2; m <= 150; ++m) {
      if (std::gcd(m, base) != 1) continue;
      const Expansion e = expand(N(m), base);
      for (std::uint64_t t = 0; t < e.period(); ++t) {
        const ExactFraction direct = repeating_value(cyclic_shift(e.repetend(), N(t)));
        ASSERT_EQ(direct, ExactFraction(N(oracle::pow_by_iteration(base, t, m)), N(m)))
            << "m=" << m << " t=" << t;
      }
      ASSERT_EQ(shift_fractions_by_rotation(e), shift_fractions_by_residue(e));
    }
  }
}

TEST(OrbitResidues, Examples) {
  const auto seven = orbit_residues(N(7), 10);
  EXPECT_EQ(seven, (std::vector<Natural>{1, 3, 2, 6, 4, 5}));
  EXPECT_EQ(orbit_residues(N(11), 10), (std::vector<Natural>{1, 10}));
  EXPECT_EQ(orbit_residues(N(3), 10), (std::vector<Natural>{1}));
  EXPECT_EQ(kind_of([] { orbit_residues(N(12), 10); }), ErrorKind::NotCoprime);
}

TEST(OrbitResidues, IsASubgroupOfOrderPeriod) {
  for (const std::uint64_t base : {2u, 10u}) {
    for (std::uint64_t m = 2; m <= 200; ++m) {
      if (std::gcd(m, base) != 1) continue;
      const auto orbit = orbit_residues(N(m), base);
      const std::set<Natural> set(orbit.begin(), orbit.end());
      ASSERT_EQ(set.size(), orbit.size());
      ASSERT_EQ(orbit.size(), oracle::order_by_iteration(base, m));
      for (const auto& x : orbit) {
        for (const auto& y : orbit) ASSERT_TRUE(set.contains((x * y) % N(m)));
      }
    }
  }
}

TEST(ComplementPairs, Examples) {
  EXPECT_TRUE(complement_pairs_check(N(7), 10));
  EXPECT_TRUE(complement_pairs_check(N(11), 10));
  EXPECT_EQ(oracle::order_by_iteration(3, 13), 3u);
  EXPECT_EQ(kind_of([] { complement_pairs_check(N(13), 3); }), ErrorKind::NotApplicable);
  EXPECT_EQ(kind_of([] { complement_pairs_check(N(21), 10); }), ErrorKind::Precondition);
}

TEST(ComplementPairs, FailsForCompositeWhenForcedThroughDigits) {
  // The identity needs n^(O/2) = -1, which fails for e.g. m = 21 in base 10:
  // 1/21 = 0.(047619), and 0 + 6 != 9.
  const Expansion e = expand(N(21), 10);
  ASSERT_EQ(e.period(), 6u);
  EXPECT_NE(e.digit(1) + e.digit(4), 9u);
}

TEST(ComplementPairs, HoldsIncludingBaseMinusOneCase) {
  // m = 3 and base 2: 2 = -1 mod 3, digits (0,1).
  EXPECT_TRUE(complement_pairs_check(N(3), 2));
  EXPECT_TRUE(complement_pairs_check(N(11), 10));  // 10 = -1 mod 11
}

TEST(RunLengthEncode, Examples) {
  const auto form = run_length_encode(DigitString(2, {0, 0, 0, 1, 0, 1, 1, 1, 0, 1}));
  EXPECT_EQ(form.runs, (std::vector<repetend::Run>{{0, 3}, {1, 1}, {0, 1}, {1, 3}, {0, 1}, {1, 1}}));
  EXPECT_EQ(run_length_encode(DigitString(2, {1, 1})).runs, (std::vector<repetend::Run>{{1, 2}}));
  EXPECT_EQ(run_length_encode(DigitString(2, {0, 0, 0, 1, 0, 0, 1, 1, 1, 0, 1, 1})).runs,
            (std::vector<repetend::Run>{{0, 3}, {1, 1}, {0, 2}, {1, 3}, {0, 1}, {1, 2}}));
  EXPECT_EQ(oracle::horner({0, 0, 0, 1, 0, 0, 1, 1, 1, 0, 1, 1}, 2), 315);
}

TEST(RunLengthEncode, RunsAlternateAndSumToLength) {
  for (std::uint64_t m = 3; m <= 400; m += 2) {
    const DigitString s = expand(N(m), 2).repetend();
    const auto form = run_length_encode(s);
    ASSERT_EQ(form.total_length(), s.size());
    for (std::size_t i = 1; i < form.runs.size(); ++i) {
      ASSERT_NE(form.runs[i].symbol, form.runs[i - 1].symbol);
      ASSERT_GT(form.runs[i].length, 0u);
    }
  }
}

TEST(Base2StructureReport, Examples) {
  const auto r11 = base2_structure_report(N(11));
  EXPECT_EQ(r11.form.lengths(), (std::vector<std::uint64_t>{3, 1, 1, 3, 1, 1}));
  EXPECT_TRUE(r11.run_count_mod4);
  EXPECT_TRUE(r11.half_symmetry);
  EXPECT_TRUE(r11.decrement_by_two);
  EXPECT_FALSE(r11.counterexample.has_value());

  const auto r13 = base2_structure_report(N(13));
  EXPECT_EQ(r13.form.lengths(), (std::vector<std::uint64_t>{3, 1, 2, 3, 1, 2}));
  EXPECT_TRUE(r13.all_hold());

  EXPECT_EQ(kind_of([] { base2_structure_report(N(7)); }), ErrorKind::NotApplicable);
  EXPECT_EQ(kind_of([] { base2_structure_report(N(3)); }), ErrorKind::Precondition);
  EXPECT_EQ(kind_of([] { base2_structure_report(N(15)); }), ErrorKind::Precondition);
}

}  // namespace
}  // namespace repetend
