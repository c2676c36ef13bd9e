#include <gtest/gtest.h>

#include <random>
#include <sstream>

#include "constants.hpp"
#include "erasing/error.hpp"
#include "erasing/substitution.hpp"

using namespace erasing;
using test::sigma;

namespace {

ErrorCode parse_error(const std::string& text, int* line = nullptr) {
  try {
    Substitution::parse(text);
  } catch (const Error& e) {
    if (line) *line = e.line();
    return e.code();
  }
  ADD_FAILURE() << "parsed: " << text;
  return ErrorCode::kInvalidArgument;
}

std::string simple_key(const AlternatingDecomposition& d) {
  std::string out;
  for (std::size_t i = 0; i < d.simple.size(); ++i) {
    if (i) out += ';';
    auto show = [](const FiniteWord& w) { return w.empty() ? std::string("-") : w; };
    out += show(d.simple[i][0]) + "," + show(d.simple[i][1]);
  }
  return out;
}

}  // namespace

TEST(Parse, ReadsTables) {
  EXPECT_EQ(sigma(3).k(), 2);
  EXPECT_EQ(sigma(3).block_word(sigma(3).eps_index()), "00");
  EXPECT_EQ(sigma(3).image("11"), "01");
  EXPECT_EQ(sigma(4).k(), 3);
  EXPECT_EQ(sigma(4).block_word(sigma(4).eps_index()), "000");
  EXPECT_EQ(sigma(4).image("111"), "010001000");
  EXPECT_EQ(sigma(2).w_eps(), "01");
}

TEST(Parse, RoundTripsThroughSpecText) {
  for (int i = 1; i <= 4; ++i) {
    auto again = Substitution::parse(sigma(i).to_spec());
    EXPECT_EQ(again.images(), sigma(i).images());
  }
}

TEST(Parse, ReportsErrorsWithLines) {
  int line = 0;
  EXPECT_EQ(parse_error("k = 2\n00 -> -\n01 -> -\n10 -> 0\n11 -> 1\n"), ErrorCode::kMultipleEmptyImages);
  EXPECT_EQ(parse_error("k = 2\n00 -> -\n01 -> 1\n10 -> 0\n", &line), ErrorCode::kMissingBlock);
  EXPECT_GT(line, 0);
  EXPECT_EQ(parse_error("k = 2\n00 -> -\n00 -> 1\n10 -> 0\n11 -> 1\n", &line), ErrorCode::kDuplicateBlock);
  EXPECT_EQ(line, 3);
  EXPECT_EQ(parse_error("k = 2\n00 -> 1\n01 -> 1\n10 -> 0\n11 -> 1\n"), ErrorCode::kNoEmptyImage);
  EXPECT_EQ(parse_error("k = 2\n00 -> 1\n01 -> 1\n10 -> 0\n11 -> -\n"), ErrorCode::kErasedBlockIsAllOnes);
  EXPECT_EQ(parse_error("k = 2\n00 -> -\n01 -> 2\n10 -> 0\n11 -> 1\n", &line), ErrorCode::kBadSymbol);
  EXPECT_EQ(line, 3);
}

TEST(Apply, BlockAndAlternatingModes) {
  EXPECT_EQ(apply_strict(sigma(3), "1101"), test::constant("s3.block.1101"));
  EXPECT_EQ(apply_alternating(sigma(3), "111"), test::constant("s3.alt.111"));
  for (int i = 1; i <= 4; ++i) EXPECT_EQ(apply_finite(sigma(i), ""), "");
  EXPECT_EQ(apply_strict(sigma(3), "110"), "01");
}

TEST(Apply, AlternatingAgreesWithBlocksOnWholeBlocks) {
  std::mt19937_64 rng(11);
  for (int i : {3, 4}) {
    const auto& s = sigma(i);
    for (int r = 0; r < 300; ++r) {
      FiniteWord w;
      std::size_t len = s.k() * (rng() % 8);
      for (std::size_t j = 0; j < len; ++j) w += static_cast<char>('0' + rng() % 2);
      EXPECT_EQ(apply_alternating(s, w), apply_strict(s, w));
    }
  }
}

TEST(Apply, PeriodicImages) {
  auto a = apply_periodic(sigma(3), PeriodicWord("01", "11"));
  EXPECT_EQ(std::get<PeriodicWord>(a), PeriodicWord("1", "01"));
  auto b = apply_periodic(sigma(3), PeriodicWord("", "10"));
  EXPECT_EQ(std::get<PeriodicWord>(b), PeriodicWord("", "0"));
  auto c = apply_periodic(sigma(2), PeriodicWord("", "01"));
  EXPECT_EQ(std::get<FiniteWord>(c), "");
}

TEST(Decomposition, MatchesBruteForceSplit) {
  auto d3 = alternating_decomposition(sigma(3));
  ASSERT_TRUE(std::holds_alternative<AlternatingDecomposition>(d3));
  EXPECT_EQ(simple_key(std::get<AlternatingDecomposition>(d3)), test::constant("s3.simple"));
  auto d4 = alternating_decomposition(sigma(4));
  ASSERT_TRUE(std::holds_alternative<AlternatingDecomposition>(d4));
  EXPECT_EQ(simple_key(std::get<AlternatingDecomposition>(d4)), test::constant("s4.simple"));
  EXPECT_TRUE(std::holds_alternative<NotAlternating>(alternating_decomposition(sigma(2))));
  EXPECT_FALSE(sigma(1).is_alternating());
}

TEST(Decomposition, NotAlternatingWitnessNamesBlocks) {
  for (int i : {1, 2}) {
    auto blocks = std::get<NotAlternating>(alternating_decomposition(sigma(i))).blocks;
    ASSERT_GE(blocks.size(), 2u);
    for (auto b : blocks) EXPECT_LT(b, sigma(i).block_count());
  }
}

TEST(RelativeImage, MatchesDirectIteration) {
  EXPECT_EQ(relative_image(sigma(3), "1", 1, "1"), test::constant("s3.rel.u1.n1.v1"));
  EXPECT_EQ(relative_image(sigma(3), "11", 2, "11"), test::constant("s3.rel.u11.n2.v11"));
  EXPECT_EQ(relative_image(sigma(3), "", 1, "0110"), apply_finite(sigma(3), "0110"));
}

TEST(RelativeImage, PrefixProperty) {
  std::mt19937_64 rng(5);
  const auto& s = sigma(3);
  auto word = [&](std::size_t n) {
    FiniteWord w;
    for (std::size_t i = 0; i < n; ++i) w += static_cast<char>('0' + rng() % 2);
    return w;
  };
  for (int r = 0; r < 200; ++r) {
    auto u = word(rng() % 9);
    auto v = word(rng() % 9);
    int n = 1 + static_cast<int>(rng() % 4);
    FiniteWord whole = u + v, head = u;
    for (int j = 0; j < n; ++j) {
      whole = apply_alternating(s, whole);
      head = apply_alternating(s, head);
    }
    ASSERT_EQ(whole.substr(0, head.size()), head);
    EXPECT_EQ(relative_image(s, u, n, v), whole.substr(head.size()));
  }
}

TEST(RelativeImage, StrictVariantIsASuffix) {
  std::mt19937_64 rng(13);
  const auto& s = sigma(2);
  for (int r = 0; r < 200; ++r) {
    FiniteWord u, v;
    for (std::size_t i = rng() % 7; i > 0; --i) u += static_cast<char>('0' + rng() % 2);
    for (std::size_t i = 4 + rng() % 20; i > 0; --i) v += static_cast<char>('0' + rng() % 2);
    int n = 1 + static_cast<int>(rng() % 2);
    StrictRelativeImage rel;
    try {
      rel = relative_image_strict(s, u, n, v);
    } catch (const Error& e) {
      EXPECT_EQ(e.code(), ErrorCode::kInsufficientInput);
      continue;
    }
    FiniteWord whole = u + v;
    for (int j = 0; j < n; ++j) whole = apply_strict(s, whole);
    ASSERT_GE(whole.size(), rel.image.size());
    EXPECT_EQ(whole.substr(whole.size() - rel.image.size()), rel.image);
    EXPECT_EQ(rel.consumed.size(), static_cast<std::size_t>(n));
  }
  EXPECT_THROW(relative_image_strict(s, "1", 3, ""), Error);
}

TEST(EpsLetters, CyclesThroughErasedBlock) {
  EXPECT_EQ(sigma(2).eps_letters(1, 5), "10101");
  EXPECT_EQ(sigma(3).eps_letters(3, 2), "00");
}
