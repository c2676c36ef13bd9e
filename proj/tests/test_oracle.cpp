#include <gtest/gtest.h>

#include <fstream>

#include "constants.hpp"
#include "erasing/oracle.hpp"

using namespace erasing;
namespace o = erasing::oracle;

namespace {

o::Table table(int i) { return o::Table::read(test::data_path(i)); }

}  // namespace

TEST(OracleEval, Streams) {
  auto a = o::brute_eval(table(3), UnitReal::parse("1"), 8);
  EXPECT_FALSE(a.stalled);
  EXPECT_EQ(a.produced.substr(0, 8), "01010101");
  EXPECT_EQ(a.exact, mpq_class(1, 3));
  auto b = o::brute_eval(table(2), UnitReal::parse("1/3"), 8);
  EXPECT_TRUE(b.stalled);
  EXPECT_EQ(b.produced, "");
  auto c = o::brute_eval(table(3), UnitReal::parse("1/2"), 4);
  EXPECT_EQ(c.produced.substr(0, 4), "1010");
}

TEST(OracleVanishing, Outcomes) {
  EXPECT_EQ(std::get<int>(o::brute_vanishing(table(3), "11", 64)), 4);
  EXPECT_EQ(std::get<int>(o::brute_vanishing(table(3), "00", 64)), 1);
  EXPECT_TRUE(std::holds_alternative<o::NotAlternating>(o::brute_vanishing(table(1), "11", 64)));
  std::vector<std::pair<FiniteWord, FiniteWord>> looping{{"", "1"}, {"", "1"}};
  auto r = o::brute_vanishing(looping, "1", 64);
  ASSERT_TRUE(std::holds_alternative<o::NoVanish>(r));
  EXPECT_EQ(std::get<o::NoVanish>(r).repeated, "1");
}

TEST(OracleCoverage, PrefixSearch) {
  EXPECT_TRUE(o::brute_factor_coverage(table(3).images, 12).complete);
  EXPECT_TRUE(o::brute_factor_coverage(table(1).images, 12).complete);
  auto c = o::brute_factor_coverage(table(4).images, 1);
  EXPECT_FALSE(c.complete);
  EXPECT_EQ(c.failure, "1");
}

TEST(OracleWords, TildeAndBlocks) {
  EXPECT_EQ(o::brute_tilde(mpq_class(1, 3)), (std::pair<FiniteWord, FiniteWord>{"", "01"}));
  EXPECT_EQ(o::brute_tilde(mpq_class(1, 2)), (std::pair<FiniteWord, FiniteWord>{"0", "1"}));
  EXPECT_EQ(o::brute_block(table(3), "1101"), "011");
  EXPECT_EQ(table(3).w_eps(), "00");
}

TEST(OracleConstants, RegenerateFrozenFile) {
  std::ifstream in(ERASING_CONSTANTS);
  std::vector<std::string> frozen;
  std::string line;
  while (std::getline(in, line))
    if (!line.empty()) frozen.push_back(line);
  EXPECT_EQ(o::derived_constants(ERASING_DATA_DIR), frozen);
}
