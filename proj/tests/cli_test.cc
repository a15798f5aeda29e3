#include "vecdom/cli.h"

#include <gtest/gtest.h>

#include <unistd.h>

#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <sstream>

#include "json.hpp"
#include "vecdom/bench.h"
#include "vecdom/io.h"

namespace vecdom {
namespace {

namespace fs = std::filesystem;

class CliTest : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = fs::temp_directory_path() /
           ("vecdom_cli_" + std::to_string(::getpid()) + "_" +
            ::testing::UnitTest::GetInstance()->current_test_info()->name());
    fs::create_directories(dir_);
  }
  void TearDown() override { fs::remove_all(dir_); }

  std::string File(const std::string& name, const std::string& text) {
    const std::string path = (dir_ / name).string();
    WriteFile(path, text);
    return path;
  }

  int Run(std::vector<std::string> args) {
    out_.str("");
    err_.str("");
    return RunCli(args, out_, err_);
  }

  nlohmann::json Record() { return nlohmann::json::parse(out_.str()); }

  fs::path dir_;
  std::ostringstream out_;
  std::ostringstream err_;
};

TEST_F(CliTest, SolveTotalOnC4) {
  const std::string g = File("c4.graph", "p edge 4 4\ne 1 2\ne 2 3\ne 3 4\ne 4 1\n");
  const std::string d = File("c4.demands", "1 1\n2 1\n3 1\n4 1\n");
  EXPECT_EQ(Run({"solve", g, "--variant", "total", "--demands", d}), kExitOk);
  const auto rec = Record();
  EXPECT_EQ(rec["size"], 2);
  EXPECT_EQ(rec["feasible"], true);
  EXPECT_EQ(rec["quality"], "optimal");
}

TEST_F(CliTest, SolveFieldOrderAndDeterminism) {
  const std::string g = File("p5.graph", "p edge 5 4\ne 1 2\ne 2 3\ne 3 4\ne 4 5\n");
  ASSERT_EQ(Run({"solve", g, "--variant", "k-domination", "--k", "1"}), kExitOk);
  std::string first = out_.str();
  ASSERT_EQ(Run({"solve", g, "--variant", "k-domination", "--k", "1"}), kExitOk);
  std::string second = out_.str();
  auto strip = [](std::string s) { return s.substr(0, s.find("\"elapsed\"")); };
  EXPECT_EQ(strip(first), strip(second));
  EXPECT_EQ(strip(first),
            R"({"size":2,"vertices":[1,4],"feasible":true,"quality":"optimal",)"
            R"("solverPath":"tree",)");
}

TEST_F(CliTest, SolveMethodsAndAlpha) {
  const std::string g = File("c5.graph", "p edge 5 5\ne 1 2\ne 2 3\ne 3 4\ne 4 5\ne 5 1\n");
  EXPECT_EQ(Run({"solve", g, "--variant", "alpha-domination", "--alpha", "1/2",
                 "--method", "greedy"}),
            kExitOk);
  EXPECT_EQ(Record()["quality"], "approxWithBound");
  EXPECT_TRUE(Record().contains("bound"));
  EXPECT_EQ(Run({"solve", g, "--variant", "alpha-domination", "--alpha", "0.5"}),
            kExitInputError);
  EXPECT_NE(err_.str().find("Malformed"), std::string::npos);
  EXPECT_EQ(Run({"solve", g, "--variant", "nonsense"}), kExitInputError);
  EXPECT_EQ(Run({"solve", g, "--method", "magic"}), kExitInputError);
  EXPECT_EQ(Run({"solve", g, "--method", "tree"}), kExitInputError);
}

TEST_F(CliTest, SolveInfeasibleExitsOne) {
  const std::string g = File("k1.graph", "p edge 1 0\n");
  EXPECT_EQ(Run({"solve", g, "--variant", "total-domination"}), kExitInfeasible);
  EXPECT_NE(err_.str().find("Infeasible"), std::string::npos);
}

TEST_F(CliTest, SolveInstanceFile) {
  const std::string inst =
      File("star.inst", "v open partial\np edge 4 3\ne 1 2\ne 1 3\ne 1 4\nk 1 2\nk 2 1\nk 3 1\nk 4 1\n");
  EXPECT_EQ(Run({"solve", inst}), kExitOk);
  EXPECT_EQ(Record()["vertices"], nlohmann::json::array({1}));
}

TEST_F(CliTest, VerifyStar) {
  const std::string g = File("star.graph", "p edge 4 3\ne 1 2\ne 1 3\ne 1 4\n");
  const std::string d = File("star.demands", "1 2\n2 1\n3 1\n4 1\n");
  const std::string s = File("set.txt", "1\n");
  EXPECT_EQ(Run({"verify", g, "--variant", "vector", "--demands", d, "--set", s}),
            kExitOk);
  EXPECT_EQ(Record()["feasible"], true);

  const std::string bad = File("bad.txt", "2\n");
  EXPECT_EQ(Run({"verify", g, "--variant", "vector", "--demands", d, "--set", bad}),
            kExitInfeasible);
  EXPECT_EQ(Record()["violated"], nlohmann::json::array({1, 3, 4}));
}

TEST_F(CliTest, GadgetKDomCheck) {
  const std::string g = File("p3.graph", "p edge 3 2\ne 1 2\ne 2 3\n");
  const std::string prefix = (dir_ / "kdom").string();
  EXPECT_EQ(Run({"gadget", g, "--construction", "k-dom", "--k", "2", "--check",
                 "--out", prefix}),
            kExitOk);
  const auto rec = Record();
  EXPECT_EQ(rec["check"]["pass"], true);
  EXPECT_EQ(rec["check"]["middle"], 2);
  const Graph gp = ParseGraph(ReadFile(prefix + ".graph"));
  EXPECT_EQ(gp.n(), 4);
  EXPECT_EQ(ParseDemands(ReadFile(prefix + ".demands"), gp),
            (RequirementVector{2, 2, 2, 2}));
  EXPECT_TRUE(fs::exists(prefix + ".claim.json"));
}

TEST_F(CliTest, GadgetErrors) {
  const std::string g = File("k2.graph", "p edge 2 1\ne 1 2\n");
  EXPECT_EQ(Run({"gadget", g, "--construction", "alpha"}), kExitInputError);
  EXPECT_EQ(Run({"gadget", g, "--construction", "total-alpha", "--alpha", "1/2",
                 "--m", "1", "--nc", "1"}),
            kExitInputError);
  EXPECT_NE(err_.str().find("FeasibilityConditionViolated"), std::string::npos);
  EXPECT_EQ(Run({"gadget", g, "--construction", "bogus"}), kExitInputError);
}

TEST_F(CliTest, BenchEmptyAndSmall) {
  EXPECT_EQ(Run({"bench", "--family", "tree"}), kExitOk);
  EXPECT_EQ(out_.str(), "");
  EXPECT_EQ(Run({"bench", "--family", "threshold", "--sizes", "8,30", "--csv"}),
            kExitOk);
  EXPECT_NE(out_.str().find("threshold,8,"), std::string::npos);
  EXPECT_NE(out_.str().find("threshold,30,"), std::string::npos);
}

TEST_F(CliTest, MissingSubcommandAndHelp) {
  EXPECT_EQ(Run({}), kExitInputError);
  EXPECT_EQ(Run({"--help"}), kExitOk);
  EXPECT_NE(out_.str().find("solve"), std::string::npos);
}

TEST_F(CliTest, OracleCapFromEnvironment) {
  ::setenv("VECDOM_ORACLE_CAP", "4", 1);
  EXPECT_EQ(OracleCapFromEnv(), 4);
  const std::string g = File("c5.graph", "p edge 5 5\ne 1 2\ne 2 3\ne 3 4\ne 4 5\ne 5 1\n");
  EXPECT_EQ(Run({"solve", g, "--variant", "domination", "--method", "oracle"}),
            kExitInputError);
  EXPECT_NE(err_.str().find("TooLarge"), std::string::npos);
  ::setenv("VECDOM_ORACLE_CAP", "junk", 1);
  EXPECT_EQ(OracleCapFromEnv(), kDefaultOracleCap);
  ::unsetenv("VECDOM_ORACLE_CAP");
}

TEST(BenchTest, EmptySizeList) {
  BenchConfig config;
  const BenchReport report = BenchSuite(config);
  EXPECT_TRUE(report.rows.empty());
  EXPECT_EQ(report.Table(), "");
  EXPECT_EQ(report.Csv(), "");
}

TEST(BenchTest, DeterministicApartFromTimings) {
  BenchConfig config;
  config.family = BenchFamily::kGnp;
  config.sizes = {8, 12};
  config.seed = 5;
  const BenchReport a = BenchSuite(config);
  const BenchReport b = BenchSuite(config);
  ASSERT_EQ(a.rows.size(), 2u);
  for (size_t i = 0; i < a.rows.size(); ++i) {
    EXPECT_EQ(a.rows[i].m, b.rows[i].m);
    EXPECT_EQ(a.rows[i].solution_size, b.rows[i].solution_size);
    EXPECT_EQ(a.rows[i].greedy_ratio, b.rows[i].greedy_ratio);
    ASSERT_TRUE(a.rows[i].greedy_ratio.has_value());
    EXPECT_GE(*a.rows[i].greedy_ratio, 1.0);
  }
}

TEST(BenchTest, GnpRatiosWithinBound) {
  BenchConfig config;
  config.family = BenchFamily::kGnp;
  config.p = 0.4;
  config.reps = 1;
  for (uint64_t seed = 1; seed <= 20; ++seed) {
    config.seed = seed;
    config.sizes = {12};
    const BenchReport r = BenchSuite(config);
    ASSERT_TRUE(r.rows[0].greedy_ratio.has_value());
    EXPECT_LE(*r.rows[0].greedy_ratio, std::log(2.0 * 11) + 1);
  }
}

}  // namespace
}  // namespace vecdom
