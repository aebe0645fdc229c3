// Runs the tsb binary and checks output and exit codes.

#include <array>
#include <cstdio>
#include <string>
#include <sys/wait.h>

#include <gtest/gtest.h>
#include <json.hpp>

#include "tsb/bernoulli.hpp"
#include "tsb/serialize.hpp"

using nlohmann::json;

namespace {

struct RunResult {
  int status = -1;
  std::string out;
};

RunResult run(const std::string& args) {
  const std::string cmd = std::string(TSB_CLI_PATH) + " " + args + " 2>/dev/null";
  RunResult r;
  FILE* pipe = popen(cmd.c_str(), "r");
  if (pipe == nullptr) return r;
  std::array<char, 4096> buf{};
  std::size_t got = 0;
  while ((got = std::fread(buf.data(), 1, buf.size(), pipe)) > 0) r.out.append(buf.data(), got);
  const int status = pclose(pipe);
  r.status = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

}  // namespace

TEST(Cli, ComputeDegreeOne) {
  const auto r = run("compute --n 1 --no-meta");
  ASSERT_EQ(r.status, 0);
  const json doc = json::parse(r.out);
  EXPECT_EQ(doc["schema_version"], "tsallis-bernoulli/1");
  EXPECT_FALSE(doc.contains("meta"));
  EXPECT_EQ(doc["results"][0]["poly"]["coeffs"], json::parse(R"([["-1/2","1/2"],["1"]])"));
}

TEST(Cli, ComputeDegreeZeroAndLambdaZero) {
  EXPECT_EQ(json::parse(run("compute --n 0 --no-meta").out)["results"][0]["poly"]["coeffs"], json::parse(R"([["1"]])"));
  const auto r = run("compute --n 2 --lambda 0 --format text --no-meta");
  EXPECT_EQ(r.status, 0);
  EXPECT_EQ(r.out, "x^2 - x + 1/6\n");
}

TEST(Cli, ComputeValue) {
  const auto r = run("compute --n 1 --lambda 1/2 --x 1/3 --format text --no-meta");
  EXPECT_EQ(r.out, "1/12\n");
}

TEST(Cli, JsonRoundTrip) {
  for (int n : {0, 3, 7}) {
    const json doc = json::parse(run("compute --n " + std::to_string(n) + " --no-meta").out);
    const tsb::XPoly p = tsb::xpoly_from_json(doc["results"][0]["poly"]);
    EXPECT_EQ(p, tsb::beta_tilde_recurrence(n));
    EXPECT_EQ(tsb::to_json(p), doc["results"][0]["poly"]);
  }
}

TEST(Cli, DeterministicWithoutMeta) {
  for (const char* args : {"compute --n 6 --route all --no-meta", "numbers --max-n 8 --no-meta",
                           "bivariate --n 4 --r 2 --no-meta --format csv", "series --order 4 --no-meta --format latex"}) {
    const auto a = run(args);
    const auto b = run(args);
    EXPECT_EQ(a.status, 0) << args;
    EXPECT_EQ(a.out, b.out) << args;
  }
}

TEST(Cli, AllRoutesAgree) {
  const auto r = run("compute --n 5 --route all --no-meta");
  ASSERT_EQ(r.status, 0);
  const json doc = json::parse(r.out);
  EXPECT_TRUE(doc["agree"].get<bool>());
  EXPECT_EQ(doc["results"].size(), 4u);
}

TEST(Cli, LatexAndJsonDescribeTheSamePolynomial) {
  const json doc = json::parse(run("compute --n 4 --no-meta").out);
  const auto latex = run("compute --n 4 --format latex --no-meta");
  EXPECT_EQ(latex.out, tsb::to_latex(tsb::xpoly_from_json(doc["results"][0]["poly"])) + "\n");
}

TEST(Cli, UsageErrors) {
  EXPECT_EQ(run("compute --n -1").status, 2);
  EXPECT_EQ(run("compute --n 2 --lambda 0.5").status, 2);
  EXPECT_EQ(run("compute --n 2 --route nowhere").status, 2);
  EXPECT_EQ(run("bivariate --n 2 --r 9").status, 2);
  EXPECT_EQ(run("frobnicate").status, 2);
  EXPECT_EQ(run("").status, 2);
  EXPECT_EQ(run("--help").status, 0);
}

TEST(Cli, EvalDomainError) {
  const auto r = run("eval explambda --x -3 --lambda 0.5 --no-meta");
  EXPECT_EQ(r.status, 2);
  EXPECT_EQ(json::parse(r.out)["error"]["kind"], "domain");
  const auto ok = run("eval explambda --x 2 --lambda 0.5 --format text");
  EXPECT_EQ(ok.status, 0);
  EXPECT_EQ(ok.out, "4.0\n");
}

TEST(Cli, VerifySmall) {
  const auto r = run("verify --max-n 4 --format json --no-meta");
  EXPECT_EQ(r.status, 0);
  EXPECT_TRUE(json::parse(r.out)["all_passed"].get<bool>());
}

TEST(Cli, NumbersCsv) {
  const auto r = run("numbers --max-n 1 --format csv --no-meta");
  EXPECT_EQ(r.out, "n,lexp,coeff\n0,0,1\n1,0,-1/2\n1,1,1/2\n");
}
