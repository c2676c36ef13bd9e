#include <gtest/gtest.h>

#include "constants.hpp"
#include "erasing/classifier.hpp"
#include "erasing/dynamics.hpp"
#include "erasing/error.hpp"
#include "erasing/oracle.hpp"

using namespace erasing;
using test::sigma;

namespace {

const auto& simple3() {
  static const auto m = *oracle::brute_simple(oracle::Table::read(test::data_path(3)));
  return m;
}

FiniteWord iterate_oracle(FiniteWord w, int n) {
  for (int i = 0; i < n; ++i) w = oracle::brute_alt(simple3(), w);
  return w;
}

constexpr std::uint64_t kExpandLimit = std::uint64_t{1} << 16;

}  // namespace

TEST(Periodic, StagedIdentityAndPeriods) {
  for (const char* u0 : {"11", "01", "0000"}) {
    auto p = periodic_point(sigma(3), u0, 20);
    EXPECT_EQ(p.period, vanishing_order_or_throw(sigma(3), u0)) << u0;
    ASSERT_EQ(p.point.stages.size(), 20u);
    EXPECT_TRUE(p.point.all_verified()) << u0;
    EXPECT_EQ(p.point.realized().head(std::string(u0).size()), u0);
  }
  EXPECT_EQ(periodic_point(sigma(3), "0000", 3).period, 1);
}

TEST(Periodic, IdentityCheckedByOracleIteration) {
  for (const char* u0 : {"11", "01"}) {
    auto p = periodic_point(sigma(3), u0, 12);
    std::size_t checked = 0;
    for (std::size_t i = 1; i < p.point.stages.size(); ++i) {
      auto next = p.point.realized(i + 1);
      if (next.size() > kExpandLimit) break;
      FiniteWord image = iterate_oracle(next.expand(), p.period);
      EXPECT_EQ(image, p.point.realized(i).expand()) << u0 << " stage " << i;
      ++checked;
    }
    EXPECT_GE(checked, 3u);
  }
}

TEST(Periodic, RejectsShortSeedsAndNonCompletelyErasing) {
  EXPECT_THROW(periodic_point(sigma(3), "1", 3), Error);
  EXPECT_THROW(periodic_point(sigma(2), "11", 3), Error);
}

TEST(Dense, VisitsEnumeratedCylinders) {
  auto targets = enumerate_words(12);
  EXPECT_EQ(targets[0], "0");
  EXPECT_EQ(targets[2], "00");
  EXPECT_EQ(targets[6], "000");
  auto d = dense_orbit_point(sigma(3), targets, 12);
  ASSERT_EQ(d.schedule.size(), 12u);
  EXPECT_TRUE(d.point.all_verified());
  for (std::size_t n = 0; n < d.schedule.size(); ++n) {
    auto w = d.point.realized(n + 1);
    if (w.size() > kExpandLimit) break;
    FiniteWord image = iterate_oracle(w.expand(), d.schedule[n]);
    EXPECT_EQ(image.substr(0, targets[n].size()), targets[n]) << n;
  }
}

TEST(Dense, ConstantTargetsGiveRecurrence) {
  auto d = dense_orbit_point(sigma(3), {"101"}, 6);
  EXPECT_TRUE(d.point.all_verified());
  for (auto& v : d.visits) EXPECT_EQ(v, "101");
  auto e = dense_orbit_point(sigma(3), {""}, 4);
  EXPECT_TRUE(e.point.all_verified());
}

TEST(Dense, StrictModeForNonAlternating) {
  auto d = dense_orbit_point(sigma(2), enumerate_words(6), 6);
  EXPECT_TRUE(d.point.all_verified());
}

TEST(Scrambled, ProximityAndSeparation) {
  std::vector<FiniteWord> targets;
  for (int i = 1; i <= 12; ++i) targets.push_back(FiniteWord(static_cast<std::size_t>(i), '1'));
  auto p = scrambled_pair(sigma(3), {1, 0}, {0, 1}, targets, 11);
  ASSERT_EQ(p.proximity.size(), 10u);
  ASSERT_EQ(p.separation.size(), 10u);
  EXPECT_TRUE(p.first.all_verified());
  EXPECT_TRUE(p.second.all_verified());
  for (auto& e : p.proximity)
    EXPECT_LE(e.bound, mpq_class(1, mpz_class(1) << targets[static_cast<std::size_t>(e.stage)].size()));
  for (auto& e : p.separation) EXPECT_GE(e.bound, mpq_class(1, 16));
}

TEST(Scrambled, SeparationBoundsAreGenuine) {
  std::vector<FiniteWord> targets{"1", "11", "111", "1111"};
  auto p = scrambled_pair(sigma(3), {1, 0}, {0, 1}, targets, 3);
  std::size_t checked = 0;
  for (auto& e : p.separation) {
    auto a = p.first.realized(static_cast<std::size_t>(e.stage) + 1);
    auto b = p.second.realized(static_cast<std::size_t>(e.stage) + 1);
    if (a.size() > kExpandLimit || b.size() > kExpandLimit) continue;
    FiniteWord fa = iterate_oracle(a.expand(), e.time), fb = iterate_oracle(b.expand(), e.time);
    std::size_t n = std::min<std::size_t>({fa.size(), fb.size(), 60});
    ASSERT_GE(n, 1u);
    long long va = std::stoll(fa.substr(0, n), nullptr, 2), vb = std::stoll(fb.substr(0, n), nullptr, 2);
    mpq_class lower(mpz_class(static_cast<long>(std::max<long long>(0, std::llabs(va - vb) - 1))), mpz_class(1) << n);
    EXPECT_GE(lower, e.bound);
    ++checked;
  }
  EXPECT_GT(checked, 0u);
}

TEST(Scrambled, RejectsEqualSequences) {
  EXPECT_THROW(scrambled_pair(sigma(3), {1, 0}, {1, 0}, {"1"}, 3), Error);
}
