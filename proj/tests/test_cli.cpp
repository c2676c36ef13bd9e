#include <gtest/gtest.h>

#include <cstdlib>
#include <fstream>
#include <sstream>

#include "cli.hpp"
#include "constants.hpp"

using namespace erasing;

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run(std::vector<std::string> args) {
  std::ostringstream out, err;
  int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

std::string file(int i) { return test::data_path(i); }

std::string temp_file(const std::string& name, const std::string& text) {
  std::string path = ::testing::TempDir() + name;
  std::ofstream(path) << text;
  return path;
}

}  // namespace

TEST(Cli, OrbitLine) {
  auto r = run({"orbit", file(3), "1", "-n", "4"});
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("1, 1/3, 1, 1/3, 1"), std::string::npos) << r.out;
}

TEST(Cli, EntropyLine) {
  auto r = run({"entropy", file(3), "-k", "2"});
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("F(2)=4, bound = 2·log2/4"), std::string::npos) << r.out;
}

TEST(Cli, EvalErasedPoint) {
  auto r = run({"eval", file(2), "1/3"});
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("0 (x̃ = w_ε^∞)"), std::string::npos) << r.out;
}

TEST(Cli, ClassifyTables) {
  auto r4 = run({"classify", file(4)});
  EXPECT_EQ(r4.code, 0);
  EXPECT_NE(r4.out.find("oc: No (witness: 1)"), std::string::npos) << r4.out;
  auto r1 = run({"classify", file(1)});
  EXPECT_NE(r1.out.find("oc: Yes"), std::string::npos);
  EXPECT_NE(r1.out.find("strongly: No"), std::string::npos);
  EXPECT_NE(r1.out.find("completely: No"), std::string::npos);
  EXPECT_NE(r1.out.find("boundedly: No"), std::string::npos);
}

TEST(Cli, MalformedFileExitsWithTwo) {
  auto path = temp_file("bad.sub", "k = 2\n00 -> -\n01 -> 1\n10 -> 0\n");
  auto r = run({"classify", path});
  EXPECT_EQ(r.code, 2);
  EXPECT_NE(r.err.find("MissingBlock"), std::string::npos) << r.err;
}

TEST(Cli, UsageErrorsExitWithTwo) {
  EXPECT_EQ(run({"orbit", file(3)}).code, 2);
  EXPECT_EQ(run({"nosuch"}).code, 2);
  EXPECT_EQ(run({"eval", file(3), "5/3"}).code, 2);
}

TEST(Cli, DomainErrorsExitWithOne) {
  auto r = run({"preimage", file(4), "1/2"});
  EXPECT_EQ(r.code, 1);
  EXPECT_FALSE(r.err.empty());
}

TEST(Cli, StructuredReportRoundTrips) {
  for (int i = 1; i <= 4; ++i) {
    auto r = run({"classify", file(i), "--structured"});
    ASSERT_EQ(r.code, 0);
    auto j = nlohmann::json::parse(r.out);
    auto report = cli::report_from_json(j);
    EXPECT_EQ(cli::to_json(report), j);
    EXPECT_EQ(report, classify(Substitution::load(file(i))));
  }
}

TEST(Cli, GlobalFlagsEitherSide) {
  auto a = run({"--structured", "orbit", file(3), "1", "-n", "2"});
  auto b = run({"orbit", file(3), "1", "-n", "2", "--structured"});
  EXPECT_EQ(a.code, 0);
  EXPECT_EQ(a.out, b.out);
  EXPECT_NO_THROW(nlohmann::json::parse(a.out));
}

TEST(Cli, Deterministic) {
  std::vector<std::vector<std::string>> cmds{
      {"fiber", file(3), "1/3", "--count", "8", "--seed", "5"},
      {"separated", file(3), "-k", "2", "-n", "1", "--jobs", "3"},
      {"scrambled", file(3), "--stages", "5"},
      {"periodic", file(3), "11", "--stages", "6"},
      {"dense", file(3), "--stages", "5"},
      {"sensitivity", file(3), "1/3", "--delta", "1/1024"},
      {"mixing", file(3), "11", "1/2"},
      {"almost-fixed", file(2), "-j", "8"},
      {"lift", file(3), "11", "1"},
      {"preimage", file(3), "1/3"},
  };
  for (auto& c : cmds) {
    auto a = run(c), b = run(c);
    EXPECT_EQ(a.code, 0) << c[0] << ": " << a.err;
    EXPECT_EQ(a.out, b.out) << c[0];
    auto sc = c;
    sc.push_back("--structured");
    auto sa = run(sc), sb = run(sc);
    EXPECT_EQ(sa.out, sb.out) << c[0];
    EXPECT_NO_THROW(nlohmann::json::parse(sa.out)) << c[0];
  }
}

TEST(Cli, EchoesVerification) {
  auto r = run({"mixing", file(3), "11", "1/2"});
  EXPECT_NE(r.out.find("f^h(x) = y: ok"), std::string::npos) << r.out;
  auto p = run({"periodic", file(3), "01", "--stages", "4"});
  EXPECT_NE(p.out.find("period = 3"), std::string::npos) << p.out;
  EXPECT_NE(p.out.find("ok"), std::string::npos) << p.out;
}

TEST(Cli, BudgetFromEnvironment) {
  ::setenv("ERASING_DYN_BUDGET_L", "6", 1);
  auto r = run({"classify", file(3)});
  ::unsetenv("ERASING_DYN_BUDGET_L");
  EXPECT_NE(r.out.find("YesBounded(6)"), std::string::npos) << r.out;
  auto l = run({"classify", file(3), "-L", "7"});
  EXPECT_NE(l.out.find("YesBounded(7)"), std::string::npos) << l.out;
}

TEST(Cli, HiddenOracleCommand) {
  auto r = run({"oracle", ERASING_DATA_DIR});
  EXPECT_EQ(r.code, 0);
  std::ifstream in(ERASING_CONSTANTS);
  std::stringstream want;
  want << in.rdbuf();
  EXPECT_EQ(r.out, want.str());
}
