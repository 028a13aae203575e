// Runs the ibs executable on a matrix of good and bad invocations.

#include "json.hpp"

#include <gtest/gtest.h>

#include <array>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <string>
#include <sys/wait.h>

namespace {

struct Run {
  int code;
  std::string out;
};

Run run(const std::string& args) {
  const std::string cmd = std::string(IBS_CLI_PATH) + " " + args + " 2>/dev/null";
  FILE* pipe = popen(cmd.c_str(), "r");
  if (!pipe) return {-1, ""};
  std::string out;
  std::array<char, 4096> buf{};
  while (std::fgets(buf.data(), static_cast<int>(buf.size()), pipe)) out += buf.data();
  const int status = pclose(pipe);
  return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, out};
}

nlohmann::json load(const std::string& path) {
  std::ifstream in(path);
  return nlohmann::json::parse(in);
}

}  // namespace

TEST(Cli, EvalSeries) {
  const auto r = run("eval series 3 1 --digits 30");
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "1.02002080065254276946587561804\n");
  EXPECT_EQ(run("eval series 3 0").out, "1\n");
  EXPECT_EQ(run("eval series 3 -9/4 --digits 20").code, 0);
  EXPECT_EQ(run("eval series 4 '1+1/2i' --digits 20").code, 0);
}

TEST(Cli, EvalConstAndAlias) {
  const auto a = run("eval const beta4 --digits 30");
  EXPECT_EQ(a.code, 0);
  EXPECT_EQ(a.out.substr(0, 20), "0.988944551741105336");
  EXPECT_EQ(run("const beta4 --digits 30").out, a.out);
}

TEST(Cli, EvalLiAndGpl) {
  const auto up = run("eval li 2 3 --digits 20");
  const auto down = run("eval li 2 3 --side lower --digits 20");
  EXPECT_EQ(up.code, 0);
  EXPECT_NE(up.out.find(" + "), std::string::npos);
  EXPECT_NE(down.out.find(" - "), std::string::npos);
  const auto g = run("eval gpl 0,i 1 --digits 20");
  EXPECT_EQ(g.code, 0);
  EXPECT_EQ(g.out.substr(0, 10), "0.20561675");
  EXPECT_EQ(run("eval li 3 'exp(i*pi*1/3)'").code, 0);
}

TEST(Cli, InputErrorsExitTwo) {
  EXPECT_EQ(run("eval series 3 abc").code, 2);
  EXPECT_EQ(run("eval series 3").code, 2);
  EXPECT_EQ(run("eval const no_such_constant").code, 2);
  EXPECT_EQ(run("eval frobnicate 1").code, 2);
  EXPECT_EQ(run("eval li 2 3 --side sideways").code, 2);
  EXPECT_EQ(run("eval series 3 1 --digits 5").code, 2);
  EXPECT_EQ(run("verify no_such_id").code, 2);
  EXPECT_EQ(run("").code, 2);
  EXPECT_EQ(run("verify all --jobs 0").code, 2);
}

TEST(Cli, EvaluationErrorsExitThree) {
  EXPECT_EQ(run("eval series 3 5").code, 3);
  EXPECT_EQ(run("eval li 1 1").code, 3);
  EXPECT_EQ(run("eval gpl 1/2 1").code, 3);
}

TEST(Cli, ListShowsTheCatalog) {
  const auto r = run("list");
  EXPECT_EQ(r.code, 0);
  std::istringstream in(r.out);
  std::string line;
  int n = 0;
  while (std::getline(in, line)) ++n;
  EXPECT_EQ(n, 21);
  EXPECT_NE(r.out.find("s4_m12"), std::string::npos);
}

TEST(Cli, VerifySingleEntry) {
  const auto r = run("verify chen_pos --digits 60");
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("pass"), std::string::npos);
}

TEST(Cli, VerifyAllWritesStableJson) {
  ASSERT_EQ(run("verify all --digits 40 --jobs 2 --json cli_a.json").code, 0);
  ASSERT_EQ(run("verify all --digits 40 --jobs 1 --json cli_b.json").code, 0);
  auto a = load("cli_a.json");
  auto b = load("cli_b.json");
  EXPECT_EQ(a["reports"].size(), 21u);
  EXPECT_EQ(a["metadata"]["digits"], 40);
  EXPECT_TRUE(a["metadata"].contains("tool_version"));
  EXPECT_TRUE(a["metadata"].contains("catalog_hash"));
  EXPECT_TRUE(a["timing"]["elapsed_ms"].contains("s4_m4"));
  for (const auto& r : a["reports"]) EXPECT_EQ(r["status"], "pass") << r["id"];
  a.erase("timing");
  b.erase("timing");
  EXPECT_EQ(a.dump(), b.dump());
}
