#include <gtest/gtest.h>

#include <set>

#include "constants.hpp"
#include "erasing/classifier.hpp"
#include "erasing/dynamics.hpp"
#include "erasing/entropy.hpp"
#include "erasing/error.hpp"

using namespace erasing;
using test::sigma;

TEST(MaxVanishing, MatchesExhaustiveIteration) {
  for (int k : {1, 2, 4, 8, 16})
    EXPECT_EQ(max_vanishing_order(sigma(3), k, 4), test::constant_int("s3.F." + std::to_string(k))) << k;
  EXPECT_EQ(max_vanishing_order(sigma(4), 3), test::constant_int("s4.F.3"));
  EXPECT_EQ(max_vanishing_order(sigma(3), 10, 1), max_vanishing_order(sigma(3), 10, 8));
}

TEST(MaxVanishing, RatioNondecreasing) {
  double prev = 0;
  for (int k : {2, 4, 8, 16}) {
    double r = static_cast<double>(k) / max_vanishing_order(sigma(3), k, 4);
    EXPECT_GE(r, prev);
    prev = r;
  }
}

TEST(Distance, Examples) {
  auto one = UnitReal::parse("1"), third = UnitReal::parse("1/3");
  EXPECT_TRUE(d_n(sigma(3), one, one, 3).is_zero());
  EXPECT_EQ(d_n(sigma(3), one, third, 0).to_fraction(), "2/3");
  EXPECT_EQ(d_n(sigma(3), one, third, 1).to_fraction(), test::constant("s3.d1.1.1/3"));
}

TEST(Separated, FamilyAtStageZero) {
  auto f = separated_family(sigma(3), 2, 0);
  EXPECT_EQ(f.points.size(), 4u);
  EXPECT_TRUE(f.verified());
  EXPECT_EQ(f.epsilon.to_fraction(), "1/8");
}

TEST(Separated, FamiliesOneAndTwo) {
  for (int n : {1, 2}) {
    auto f = separated_family(sigma(3), 2, n, 4);
    EXPECT_EQ(f.t, 4);
    EXPECT_EQ(f.points.size(), std::size_t{1} << (2 * (n + 1)));
    EXPECT_TRUE(f.verified());
    EXPECT_FALSE(f.sampled);
    EXPECT_EQ(f.pairs_checked, f.points.size() * (f.points.size() - 1) / 2);
    EXPECT_GE(f.min_distance.to_mpq(), mpq_class(1, 8));
    std::set<UnitReal> distinct(f.points.begin(), f.points.end());
    EXPECT_EQ(distinct.size(), f.points.size());
  }
}

TEST(Separated, IndependentPairCheck) {
  auto f = separated_family(sigma(3), 2, 1);
  for (std::size_t i = 0; i < f.points.size(); ++i)
    for (std::size_t j = i + 1; j < f.points.size(); ++j) {
      auto a = orbit_points(sigma(3), f.points[i], f.n * f.t);
      auto b = orbit_points(sigma(3), f.points[j], f.n * f.t);
      mpq_class best = 0;
      for (std::size_t r = 0; r < a.size(); ++r) best = std::max(best, mpq_class(abs(a[r].to_mpq() - b[r].to_mpq())));
      EXPECT_GE(best, mpq_class(1, 8));
    }
}

TEST(Separated, ItinerariesFollowPaddedCylinders) {
  auto f = separated_family(sigma(3), 2, 1);
  for (std::size_t i = 0; i < f.points.size(); ++i) {
    auto pts = orbit_points(sigma(3), f.points[i], f.t);
    for (int j = 0; j <= 1; ++j) {
      auto block = sigma(3).block_word(f.itineraries[i][static_cast<std::size_t>(j)] - 1);
      auto w = std::get<PeriodicWord>(to_tilde(pts[static_cast<std::size_t>(j * f.t)]));
      EXPECT_EQ(w.take(2), block);
    }
  }
}

TEST(Separated, ExportLines) {
  auto f = separated_family(sigma(3), 2, 0);
  auto lines = f.export_lines();
  ASSERT_EQ(lines.size(), 4u);
  EXPECT_NE(lines[0].find("verified:yes"), std::string::npos);
}

TEST(Separated, RequiresCompletelyErasing) { EXPECT_THROW(separated_family(sigma(2), 2, 1), Error); }

TEST(EntropyBound, Renders) {
  auto b = entropy_lower_bound(sigma(3), 2);
  EXPECT_EQ(b.f, 4);
  EXPECT_DOUBLE_EQ(b.value_in_log2, 0.5);
  EXPECT_EQ(b.render(), "F(2)=4, bound = 2·log2/4");
  auto l = localized_entropy_bound(sigma(3), 2, "11");
  EXPECT_EQ(l.local, 4);
  EXPECT_EQ(l.render(), "F(2)=4, eps(w)=4, bound = 2·log2/(4+4)");
}

TEST(EntropyBound, SigmaFourStagnates) {
  auto a = entropy_lower_bound(sigma(4), 3);
  auto b = entropy_lower_bound(sigma(4), 12);
  EXPECT_LE(a.f, 8);
  EXPECT_LE(b.f, 8);
  EXPECT_GT(b.value_in_log2, a.value_in_log2);
}
