#include "cli.hpp"

#include "json.hpp"

#include <gtest/gtest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

using nlohmann::json;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
  json report() const { return json::parse(out); }
};

Run cli(std::vector<std::string> args) {
  args.insert(args.begin(), "iwahori");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  int code = iwahori::cli::run(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

}  // namespace

TEST(Cli, BggReport) {
  auto r = cli({"bgg", "--group", "sp4", "--c", "1/3,1/5"});
  ASSERT_EQ(r.code, 0) << r.err;
  auto j = r.report();
  EXPECT_EQ(j["schema"], "iwahori.report/v1");
  EXPECT_TRUE(j["result"]["simple"].get<bool>());
  EXPECT_EQ(j["result"]["values"].size(), 4u);
  EXPECT_EQ(j["result"]["sp4_conditions"]["mismatches"], json::array({3}));
  auto zero = cli({"bgg", "--group", "sp4", "--c", "0,0"}).report();
  EXPECT_FALSE(zero["result"]["simple"].get<bool>());
}

TEST(Cli, GateErrorNamesTheInequality) {
  auto r = cli({"verify-all", "--group", "sp4", "--p", "5"});
  EXPECT_EQ(r.code, iwahori::cli::kGateError);
  EXPECT_NE(r.err.find("p-1 = 4 <= eh = 4"), std::string::npos) << r.err;
  EXPECT_TRUE(r.out.empty());
}

TEST(Cli, VerifyAllIsDeterministic) {
  const std::vector<std::string> args = {"verify-all", "--group", "sl2", "--n-samples", "12", "--degree", "10", "--seed", "4"};
  auto a = cli(args), b = cli(args);
  EXPECT_EQ(a.code, 0) << a.err;
  EXPECT_EQ(a.out, b.out);
  EXPECT_TRUE(a.report()["result"]["failing"].empty());
}

TEST(Cli, JsonDirectoryHoldsReportAndTiming) {
  const auto dir = std::filesystem::temp_directory_path() / "iwahori_cli_test";
  std::filesystem::remove_all(dir);
  auto r = cli({"summands", "--group", "sp4", "--json", dir.string()});
  ASSERT_EQ(r.code, 0);
  std::ifstream report(dir / "summands.json"), timing(dir / "timing.json");
  ASSERT_TRUE(report && timing);
  EXPECT_EQ(json::parse(report), r.report());
  auto t = json::parse(timing);
  EXPECT_EQ(t["schema"], "iwahori.timing/v1");
  EXPECT_EQ(r.report()["result"]["count"], 8);
  std::filesystem::remove_all(dir);
}

TEST(Cli, OmegaOnExplicitMatrix) {
  auto r = cli({"omega", "--group", "sl2", "--matrix", "1,7;0,1"});
  ASSERT_EQ(r.code, 0) << r.err;
  auto j = r.report()["result"];
  EXPECT_EQ(j["omega"]["value"], "1/2");
  EXPECT_EQ(j["omega_oracle"]["value"], "1/2");
  auto bad = cli({"omega", "--group", "sl2", "--matrix", "1,1;0,1"});
  EXPECT_EQ(bad.code, iwahori::cli::kCheckFailed);
  EXPECT_NE(bad.err.find("not in the pro-p Iwahori"), std::string::npos);
}

TEST(Cli, FactorizeAndBasis) {
  auto f = cli({"factorize", "--group", "sp4", "--w", "s1s2"}).report()["result"];
  EXPECT_TRUE(f["round_trip"].get<bool>());
  EXPECT_EQ(f["omega"], f["factorization_omega"]);
  auto b = cli({"basis", "--group", "sl3", "--w", "s1"}).report()["result"]["basis"];
  EXPECT_EQ(b["entries"].size(), 8u);
}

TEST(Cli, MultiplicityAndSlopes) {
  auto m = cli({"verma-mult", "--group", "sp4", "--chi", "0,0", "--lambda=-2,-2"}).report();
  EXPECT_EQ(m["result"]["multiplicity"], 4);
  auto s = cli({"slope", "split", "--group", "sl2", "--s", "1", "--degree", "20"});
  ASSERT_EQ(s.code, 0) << s.err;
  EXPECT_TRUE(s.report()["result"]["recombines"].get<bool>());
  auto p = cli({"slope", "project", "--group", "sp4", "--s", "1", "--n-factorial", "4", "--w", "s2"});
  ASSERT_EQ(p.code, 0) << p.err;
  EXPECT_TRUE(p.report()["result"]["within_bound"].get<bool>());
  auto c = cli({"slope", "constants", "--group", "sl2"});
  EXPECT_EQ(c.report()["result"]["check"]["bound"], 3);
  EXPECT_EQ(cli({"haar", "--max-degree", "6"}).report()["result"]["rank"], 7);
}

TEST(Cli, EnvironmentSuppliesDefaults) {
  ::setenv("IWAHORI_SEED", "99", 1);
  auto r = cli({"rootdata", "info", "--group", "sl2"});
  ::unsetenv("IWAHORI_SEED");
  EXPECT_EQ(r.report()["config"]["seed"], 99);
  EXPECT_EQ(r.report()["result"]["coxeter_number"], 2);
}

TEST(Cli, UsageErrors) {
  EXPECT_EQ(cli({}).code, iwahori::cli::kUsageError);
  EXPECT_EQ(cli({"bgg"}).code, iwahori::cli::kUsageError);
  EXPECT_EQ(cli({"rootdata", "info", "--group", "gl5"}).code, iwahori::cli::kUsageError);
  EXPECT_EQ(cli({"--help"}).code, 0);
}
