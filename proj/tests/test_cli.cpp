#include <gtest/gtest.h>

#include <sys/wait.h>

#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>

#include "young/io.hpp"

namespace {

std::string cli_binary() {
  if (const char* env = std::getenv("YOUNG_CLI_BIN")) return env;  // manual override
  return YOUNG_CLI_BIN_PATH;
}

int run(const std::string& args, const std::string& stderr_file = "") {
  std::string cmd = cli_binary() + " " + args + " >/dev/null";
  cmd += stderr_file.empty() ? " 2>/dev/null" : " 2>" + stderr_file;
  const int status = std::system(cmd.c_str());
  return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
}

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  std::ostringstream out;
  out << in.rdbuf();
  return out.str();
}

}  // namespace

TEST(Cli, HelpExitsCleanly) {
  EXPECT_EQ(run("--help"), 0);
  EXPECT_EQ(run("verify --help"), 0);
}

TEST(Cli, GenerateThenVerifyEqualityPair) {
  EXPECT_EQ(run("generate --family equality --dim 4 --p 2 --seed 11 "
                "--decay geometric:0.6 --out-dir cli_eq"),
            0);
  EXPECT_EQ(run("verify cli_eq/a.json cli_eq/b.json --p 2 --out cli_eq/report.json"), 0);

  const nlohmann::json report = young::load_json("cli_eq/report.json");
  EXPECT_TRUE(report.at("overallConsistent").get<bool>());
  EXPECT_TRUE(report.at("cond1").at("verdict").get<bool>());
  EXPECT_EQ(report.at("manifest").at("command"), "verify");
}

TEST(Cli, VerifyCounterexamplePairIsConsistentlyUnequal) {
  EXPECT_EQ(run("generate --family opnorm-counterexample --dim 2 --out-dir cli_cx"), 0);
  // All four conditions fail together: consistent, so exit 0.
  EXPECT_EQ(run("verify cli_cx/a.json cli_cx/b.json --p 2 --out cli_cx/report.json"), 0);
  const nlohmann::json report = young::load_json("cli_cx/report.json");
  EXPECT_TRUE(report.at("overallConsistent").get<bool>());
  EXPECT_FALSE(report.at("cond1").at("verdict").get<bool>());
  EXPECT_FALSE(report.at("cond4").at("verdict").get<bool>());
}

TEST(Cli, MalformedInputNamesTheFieldAndExitsOne) {
  young::save_text("cli_bad.json", "{\"rows\": 2, \"cols\": 2, \"data\": [[1, 0]]}");
  EXPECT_EQ(run("verify cli_bad.json cli_bad.json --p 2", "cli_bad.err"), 1);
  const std::string message = slurp("cli_bad.err");
  EXPECT_NE(message.find("'data'"), std::string::npos) << message;
  std::remove("cli_bad.json");
  std::remove("cli_bad.err");
}

TEST(Cli, MissingFileExitsOne) {
  EXPECT_EQ(run("verify nope_a.json nope_b.json"), 1);
}

TEST(Cli, BadExponentExitsOne) {
  EXPECT_EQ(run("generate --family random --dim 2 --seed 1 --out-dir cli_p"), 0);
  EXPECT_EQ(run("verify cli_p/a.json cli_p/b.json --p 1.0"), 1);
}

TEST(Cli, CampaignSuitesRunAndReport) {
  EXPECT_EQ(run("campaign --suite norm-axioms --trials 4 --seed 3 --out cli_norm.json "
                "--csv cli_norm.csv"),
            0);
  const nlohmann::json summary = young::load_json("cli_norm.json");
  EXPECT_EQ(summary.at("suite"), "norm-axioms");
  EXPECT_EQ(summary.at("failures").get<long>(), 0);
  EXPECT_EQ(summary.at("trials").get<long>(), 4);
  const std::string csv = slurp("cli_norm.csv");
  EXPECT_NE(csv.find("suite,trials,failures"), std::string::npos);
  EXPECT_NE(csv.find("norm-axioms,4,0"), std::string::npos);
  std::remove("cli_norm.json");
  std::remove("cli_norm.csv");

  EXPECT_EQ(run("campaign --suite efz-inequality --trials 12 --seed 5"), 0);
  EXPECT_EQ(run("campaign --suite equality-roundtrip --trials 6 --seed 5"), 0);
  EXPECT_EQ(run("campaign --suite lemma-checks --trials 10 --seed 5"), 0);
  EXPECT_EQ(run("campaign --suite conjecture-search --trials 6 --seed 5 --dims 3"), 0);
}

TEST(Cli, UnknownSuiteExitsOne) {
  EXPECT_EQ(run("campaign --suite fancy-suite", "cli_suite.err"), 1);
  const std::string message = slurp("cli_suite.err");
  EXPECT_NE(message.find("unknown suite"), std::string::npos) << message;
  std::remove("cli_suite.err");
}

TEST(Cli, SearchRunsAndWritesSummary) {
  EXPECT_EQ(run("search --trials 8 --seed 5 --dim 3 --p 2 --out cli_search.json"), 0);
  const nlohmann::json summary = young::load_json("cli_search.json");
  EXPECT_FALSE(summary.at("witnessFound").get<bool>());
  EXPECT_EQ(summary.at("trials").get<long>(), 8);
  EXPECT_GT(summary.at("candidates").get<long>(), 0);
  std::remove("cli_search.json");
}

TEST(Cli, GenerateIsByteDeterministic) {
  EXPECT_EQ(run("generate --family random --dim 3 --seed 7 --out-dir cli_det1"), 0);
  EXPECT_EQ(run("generate --family random --dim 3 --seed 7 --out-dir cli_det2"), 0);
  const std::string a1 = slurp("cli_det1/a.json");
  const std::string a2 = slurp("cli_det2/a.json");
  ASSERT_FALSE(a1.empty());
  EXPECT_EQ(a1, a2);
  const std::string b1 = slurp("cli_det1/b.json");
  const std::string b2 = slurp("cli_det2/b.json");
  EXPECT_EQ(b1, b2);

  EXPECT_EQ(run("generate --family random --dim 3 --seed 8 --out-dir cli_det3"), 0);
  EXPECT_NE(slurp("cli_det3/a.json"), a1);
}

TEST(Cli, BadDecaySpellingExitsOne) {
  EXPECT_EQ(run("generate --family random --dim 2 --decay exponential:0.5 "
                "--out-dir cli_decay", "cli_decay.err"),
            1);
  const std::string message = slurp("cli_decay.err");
  EXPECT_NE(message.find("--decay"), std::string::npos) << message;
  std::remove("cli_decay.err");
}
