#include <gtest/gtest.h>

#include <random>

#include "constants.hpp"
#include "erasing/automaton.hpp"
#include "erasing/classifier.hpp"
#include "erasing/error.hpp"
#include "erasing/words.hpp"

using namespace erasing;
using test::sigma;

TEST(Optimality, Verdicts) {
  EXPECT_EQ(check_optimality(sigma(1)).kind, VerdictKind::kYes);
  EXPECT_EQ(check_optimality(sigma(2)).kind, VerdictKind::kYes);
  EXPECT_EQ(check_optimality(sigma(3)).kind, VerdictKind::kYes);
  auto v4 = check_optimality(sigma(4));
  EXPECT_EQ(v4.kind, VerdictKind::kNo);
  EXPECT_EQ(v4.render(), "No (witness: 1)");
}

TEST(Optimality, SurvivorAutomatonMatchesPrefixSearch) {
  FactorizationAutomaton a(sigma(3));
  for (const char* w : {"0", "1", "0110", "111111", "1010010"}) EXPECT_TRUE(a.survives(w));
  FactorizationAutomaton b(sigma(4));
  EXPECT_FALSE(b.survives("1"));
  EXPECT_TRUE(b.survives("0100"));
}

TEST(StronglyErasing, SigmaOneCycles) {
  auto v = check_strongly_erasing(sigma(1));
  ASSERT_EQ(v.kind, VerdictKind::kNo);
  ASSERT_GE(v.evidence.size(), 3u);
  EXPECT_EQ(v.evidence.front(), v.evidence.back());
  for (std::size_t i = 0; i + 1 < v.evidence.size(); ++i)
    EXPECT_EQ(apply_strict(sigma(1), v.evidence[i]), v.evidence[i + 1]);
  // The cycle quoted for σ1 in the literature is also a genuine cycle.
  EXPECT_EQ(apply_strict(sigma(1), "110") + "," + apply_strict(sigma(1), "111"), test::constant("s1.cycle.110"));
}

TEST(StronglyErasing, PositiveCases) {
  for (int i : {2, 3, 4}) EXPECT_EQ(check_strongly_erasing(sigma(i)).kind, VerdictKind::kYes) << i;
}

TEST(StronglyErasing, ChainsEraseTheirWords) {
  std::mt19937_64 rng(2);
  for (int i : {2, 3, 4}) {
    const auto& s = sigma(i);
    for (int r = 0; r < 100; ++r) {
      FiniteWord w;
      std::size_t len = 1 + rng() % 12;
      for (std::size_t j = 0; j < len; ++j) w += static_cast<char>('0' + rng() % 2);
      auto chain = find_erasing_chain(s, w, Budget{});
      ASSERT_TRUE(chain) << w;
      FiniteWord cur = w;
      for (const auto& e : chain->extensions) {
        ASSERT_EQ((cur.size() + e.size()) % s.k(), 0u);
        cur = apply_strict(s, cur + e);
      }
      EXPECT_TRUE(cur.empty());
    }
  }
}

TEST(Vanishing, OrdersMatchDirectIteration) {
  for (const char* w : {"00", "01", "10", "11", "0", "1"})
    EXPECT_EQ(vanishing_order_or_throw(sigma(3), w), test::constant_int(std::string("s3.vanish.") + w)) << w;
}

TEST(Vanishing, NotAlternatingIsRejected) {
  EXPECT_THROW(vanishing_order_or_throw(sigma(2), "11"), Error);
}

TEST(Vanishing, SigmaFourStaysBelowStatedBound) {
  int worst = 0;
  for (int len = 1; len <= 10; ++len)
    for (std::uint32_t m = 0; m < (1u << len); ++m) {
      FiniteWord w;
      for (int j = len - 1; j >= 0; --j) w += static_cast<char>('0' + ((m >> j) & 1));
      worst = std::max(worst, vanishing_order_or_throw(sigma(4), w));
    }
  EXPECT_LE(worst, 8);
  EXPECT_EQ(worst, test::constant_int("s4.maxvanish.upto12"));
}

TEST(CompletelyErasing, Verdicts) {
  auto v1 = check_completely_erasing(sigma(1));
  EXPECT_EQ(v1.kind, VerdictKind::kNo);
  auto v2 = check_completely_erasing(sigma(2));
  EXPECT_EQ(v2.kind, VerdictKind::kNo);
  EXPECT_NE(v2.summary.find("not alternating"), std::string::npos);
  auto v3 = check_completely_erasing(sigma(3));
  EXPECT_EQ(v3.kind, VerdictKind::kYesBounded);
  EXPECT_EQ(v3.bound, 12);
  EXPECT_TRUE(check_completely_erasing(sigma(4)).positive());
}

TEST(BoundedlyErasing, Verdicts) {
  auto v4 = check_boundedly_erasing(sigma(4));
  EXPECT_EQ(v4.kind, VerdictKind::kYes);
  EXPECT_GT(v4.bound, 0);
  EXPECT_LE(v4.bound, 8);
  EXPECT_FALSE(v4.evidence.empty());
  auto v3 = check_boundedly_erasing(sigma(3));
  EXPECT_EQ(v3.kind, VerdictKind::kNoEmpirical);
  EXPECT_EQ(check_boundedly_erasing(sigma(2)).kind, VerdictKind::kNo);
}

TEST(BoundedlyErasing, EvenPowersOfOneGrow) {
  int prev = 0;
  for (int m = 1; m <= 64; m *= 2) {
    int e = vanishing_order_or_throw(sigma(3), FiniteWord(2 * m, '1'));
    EXPECT_GT(e, prev);
    prev = e;
  }
}

TEST(Classify, HierarchyTable) {
  auto r1 = classify(sigma(1));
  EXPECT_EQ(r1.oc().kind, VerdictKind::kYes);
  EXPECT_EQ(r1.strongly().kind, VerdictKind::kNo);
  EXPECT_EQ(r1.completely().kind, VerdictKind::kNo);
  EXPECT_EQ(r1.boundedly().kind, VerdictKind::kNo);
  auto r2 = classify(sigma(2));
  EXPECT_EQ(r2.oc().kind, VerdictKind::kYes);
  EXPECT_EQ(r2.strongly().kind, VerdictKind::kYes);
  EXPECT_EQ(r2.completely().kind, VerdictKind::kNo);
  auto r3 = classify(sigma(3));
  EXPECT_EQ(r3.completely().kind, VerdictKind::kYesBounded);
  EXPECT_EQ(r3.boundedly().kind, VerdictKind::kNoEmpirical);
  auto r4 = classify(sigma(4), Budget{}, 4);
  EXPECT_EQ(r4.oc().kind, VerdictKind::kNo);
  EXPECT_EQ(r4.boundedly().kind, VerdictKind::kYes);
}

TEST(Classify, RejectsContradictoryReports) {
  Verdict yes{VerdictKind::kYes, "", {}, -1};
  Verdict no{VerdictKind::kNo, "", {}, -1};
  EXPECT_THROW(ClassificationReport(yes, no, yes, no), std::logic_error);
  EXPECT_THROW(ClassificationReport(yes, yes, no, yes), std::logic_error);
  EXPECT_NO_THROW(ClassificationReport(yes, yes, yes, no));
}

TEST(Classify, ParallelMatchesSerial) {
  for (int i = 1; i <= 4; ++i) EXPECT_EQ(classify(sigma(i), Budget{}, 1), classify(sigma(i), Budget{}, 4));
}

TEST(Verdict, NamesRoundTrip) {
  for (auto k : {VerdictKind::kYes, VerdictKind::kYesBounded, VerdictKind::kNo, VerdictKind::kNoEmpirical,
                 VerdictKind::kUnknown})
    EXPECT_EQ(verdict_from_name(verdict_name(k)), k);
}
