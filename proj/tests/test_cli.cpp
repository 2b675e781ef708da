#include <gtest/gtest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "json.hpp"
#include "macd/cli.hpp"

using namespace macd;

namespace {

struct Outcome {
  int code;
  std::string out, err;
};

Outcome run(std::vector<std::string> args) {
  args.insert(args.begin(), "macd");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  const int code = run_cli(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

const std::vector<std::string> kP1{"--p", "3", "--m", "1", "--alpha", "4"};

std::vector<std::string> with(std::vector<std::string> head, const std::vector<std::string>& tail) {
  head.insert(head.end(), tail.begin(), tail.end());
  return head;
}

}  // namespace

TEST(Cli, InfoOrders) {
  const Outcome r = run(with({"info", "--kind", "J"}, kP1));
  EXPECT_EQ(r.code, kExitPass);
  EXPECT_NE(r.out.find("orders: 2187 / 27 27 9"), std::string::npos) << r.out;
  EXPECT_NE(r.out.find("class: 5"), std::string::npos);
  const Outcome k = run(with({"info", "--kind", "K"}, kP1));
  EXPECT_NE(k.out.find("orders: 243 / 9 9 3"), std::string::npos) << k.out;
}

TEST(Cli, InfoByEll) {
  const Outcome r = run({"info", "--p", "5", "--m", "1", "--ell", "2", "--kind", "K"});
  EXPECT_EQ(r.code, kExitPass);
  EXPECT_NE(r.out.find("K(5,1,11)"), std::string::npos) << r.out;
  EXPECT_EQ(run({"info", "--p", "5", "--m", "1", "--ell", "2", "--alpha", "11"}).code,
            kExitInvalid);
}

TEST(Cli, InvalidParameters) {
  EXPECT_EQ(run({"info", "--p", "3", "--m", "1", "--alpha", "5"}).code, kExitInvalid);
  EXPECT_EQ(run({"info", "--p", "4", "--m", "1", "--alpha", "5"}).code, kExitInvalid);
  EXPECT_EQ(run({"info", "--p", "3", "--m", "0", "--alpha", "2"}).code, kExitInvalid);
  EXPECT_EQ(run(with({"verify", "--id", "nosuch"}, kP1)).code, kExitInvalid);
  EXPECT_EQ(run(with({"verify", "--mode", "fast", "--all"}, kP1)).code, kExitInvalid);
  EXPECT_EQ(run({"frobnicate"}).code, kExitInvalid);
}

TEST(Cli, VerifyPassAndFail) {
  const Outcome pass = run(with({"verify", "--id", "autk,autk4"}, kP1));
  EXPECT_EQ(pass.code, kExitPass);
  EXPECT_NE(pass.out.find("[PASS] autk "), std::string::npos) << pass.out;
  EXPECT_NE(pass.out.find("2/2 suites passed"), std::string::npos);
  const Outcome fail = run(with({"verify", "--id", "sylowH"}, kP1));
  EXPECT_EQ(fail.code, kExitFail);
  EXPECT_NE(fail.out.find("[FAIL] sylowH.relt3.b_y"), std::string::npos) << fail.out;
}

TEST(Cli, BruteAutK6AtP2) {
  const Outcome r = run({"verify", "--p", "5", "--m", "1", "--alpha", "6", "--id", "autk6", "--mode",
                     "brute", "--json", "--deterministic"});
  EXPECT_EQ(r.code, kExitPass);
  const auto j = nlohmann::json::parse(r.out);
  EXPECT_EQ(j["checks"][0]["observed"], "125000");
  bool quotient = false;
  for (const auto& c : j["checks"])
    if (c["id"] == "autk6.quotient.order") quotient = c["observed"] == "8";
  EXPECT_TRUE(quotient);
}

TEST(Cli, ZeroBudgetExitsOne) {
  const Outcome r = run(with({"verify", "--id", "autjfull", "--mode", "brute", "--budget", "0"}, kP1));
  EXPECT_EQ(r.code, kExitFail);
  EXPECT_NE(r.out.find("skipped-over-budget"), std::string::npos) << r.out;
}

TEST(Cli, BudgetFromEnvironment) {
  ::setenv("MACD_BUDGET", "0", 1);
  EXPECT_EQ(default_budget(), 0u);
  const Outcome env = run(with({"verify", "--id", "autk"}, kP1));
  const Outcome flag = run(with({"verify", "--id", "autk", "--budget", "20000000"}, kP1));
  ::unsetenv("MACD_BUDGET");
  EXPECT_EQ(env.code, kExitFail);
  EXPECT_EQ(flag.code, kExitPass);
  EXPECT_EQ(default_budget(), kDefaultBudget);
}

TEST(Cli, JsonSchema) {
  const Outcome r = run(with({"report", "--id", "autk4,sylowK"}, kP1));
  EXPECT_EQ(r.code, kExitPass);
  const auto j = nlohmann::ordered_json::parse(r.out);
  std::vector<std::string> top;
  for (const auto& [k, v] : j.items()) top.push_back(k);
  EXPECT_EQ(top, (std::vector<std::string>{"params", "kind", "checks", "version"}));
  EXPECT_EQ(j["params"]["p"], "3");
  EXPECT_EQ(j["params"]["alpha"], "4");
  EXPECT_EQ(j["kind"], "all");
  EXPECT_EQ(j["version"], kVersion);
  ASSERT_FALSE(j["checks"].empty());
  for (const auto& c : j["checks"]) {
    std::vector<std::string> keys;
    for (const auto& [k, v] : c.items()) {
      keys.push_back(k);
      EXPECT_TRUE(v.is_string()) << k;
    }
    EXPECT_EQ(keys, (std::vector<std::string>{"id", "expected", "observed", "status", "runtime_ms"}));
    const std::string s = c["status"];
    EXPECT_TRUE(s == "pass" || s == "fail" || s == "skipped") << s;
  }
}

TEST(Cli, EmptySelection) {
  const Outcome r = run(with({"verify", "--json", "--id", ""}, kP1));
  EXPECT_EQ(r.code, kExitPass);
  EXPECT_TRUE(nlohmann::json::parse(r.out)["checks"].empty());
  EXPECT_NE(r.out.find("\"checks\": []"), std::string::npos) << r.out;
}

TEST(Cli, KindFilter) {
  const Outcome r = run(with({"report", "--all", "--kind", "K", "--deterministic"}, kP1));
  const auto j = nlohmann::json::parse(r.out);
  EXPECT_EQ(j["kind"], "K");
  std::vector<std::string> heads;
  for (const auto& c : j["checks"]) {
    const std::string id = c["id"];
    if (id.find('.') == std::string::npos) heads.push_back(id);
  }
  EXPECT_EQ(heads, (std::vector<std::string>{"autk", "autk2", "autk4", "autk6", "ele", "tet", "zi2",
                                             "sylowK"}));
}

TEST(Cli, DeterministicAcrossWorkers) {
  const auto args = with({"report", "--id", "autk6,auth6", "--mode", "brute", "--deterministic"}, kP1);
  const Outcome one = run(with(args, {"--workers", "1"}));
  const Outcome two = run(with(args, {"--workers", "2"}));
  EXPECT_EQ(one.code, kExitPass);
  EXPECT_EQ(one.out, two.out);
}

TEST(Cli, OutputFile) {
  const auto path = std::filesystem::temp_directory_path() / "macd_cli_test.json";
  const Outcome r = run(with({"verify", "--id", "autk4", "--output", path.string()}, kP1));
  EXPECT_EQ(r.code, kExitPass);
  std::ifstream in(path);
  const auto j = nlohmann::json::parse(in);
  EXPECT_EQ(j["checks"][0]["id"], "autk4");
  std::filesystem::remove(path);
}

TEST(Cli, Word) {
  EXPECT_EQ(word({0, 0, 0}), "1");
  EXPECT_EQ(word({9, 0, 3}), "A^9 C^3");
  EXPECT_EQ(word({1, 2, 0}), "A B^2");
}
