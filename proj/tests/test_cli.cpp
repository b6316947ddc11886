#include <gtest/gtest.h>

#include <clocale>
#include <cmath>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "cli.hpp"
#include "output.hpp"

using namespace sig6::cli;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args) {
  std::ostringstream out;
  std::ostringstream err;
  const int code = run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

std::vector<std::string> lines(const std::string& text) {
  std::vector<std::string> result;
  std::istringstream stream(text);
  for (std::string line; std::getline(stream, line);) {
    result.push_back(line);
  }
  return result;
}

}  // namespace

TEST(ParseGrid, PlainAndKRelative) {
  EXPECT_EQ(parse_grid("0:1:3"), (std::vector<double>{0.0, 0.5, 1.0}));
  EXPECT_EQ(parse_grid("0.25:1:1"), (std::vector<double>{0.25}));
  EXPECT_EQ(parse_grid("-K:K:3", 2.0), (std::vector<double>{-2.0, 0.0, 2.0}));
  EXPECT_EQ(parse_grid("0:4K:5", 1.5), (std::vector<double>{0.0, 1.5, 3.0, 4.5, 6.0}));
  EXPECT_EQ(parse_grid("0.5K:+K:2", 4.0), (std::vector<double>{2.0, 4.0}));
  EXPECT_EQ(parse_grid("-2K:6K:100", 1.0).size(), 100u);
}

TEST(ParseGrid, Rejects) {
  EXPECT_THROW(parse_grid("0:1"), UsageError);
  EXPECT_THROW(parse_grid("0:1:2:3"), UsageError);
  EXPECT_THROW(parse_grid("1:0:3"), UsageError);
  EXPECT_THROW(parse_grid("0:1:0"), UsageError);
  EXPECT_THROW(parse_grid("0:1:2.5"), UsageError);
  EXPECT_THROW(parse_grid("0:K:3"), UsageError);  // K only where a unit is known
  EXPECT_THROW(parse_grid("a:1:3"), UsageError);
  EXPECT_THROW(parse_number("1,5"), UsageError);
  EXPECT_THROW(parse_number("inf"), UsageError);
  EXPECT_THROW(parse_number(""), UsageError);
  EXPECT_EQ(parse_number("+2.5e-1"), 0.25);
}

TEST(Output, SeventeenDigitsLocaleFree) {
  std::setlocale(LC_ALL, "de_DE.UTF-8");  // no effect on to_chars, even if installed
  EXPECT_EQ(format_double(0.1), "0.10000000000000001");
  EXPECT_EQ(format_double(1.0), "1");
  EXPECT_EQ(format_double(-2.5e-17), "-2.4999999999999999e-17");
  EXPECT_EQ(format_double(1e300), "1.0000000000000001e+300");
  std::setlocale(LC_ALL, "C");
}

TEST(Output, CsvQuoting) {
  Report report;
  report.columns = {"a", "b"};
  report.rows.push_back({std::string("x, \"y\""), std::int64_t{3}});
  std::ostringstream out;
  write_csv(report, out);
  EXPECT_EQ(out.str(), "a,b\n\"x, \"\"y\"\"\",3\n");
}

TEST(Cli, KTableSingleRow) {
  const auto result = run({"k-table", "--kk", "0.5", "--tol", "1e-9"});
  EXPECT_EQ(result.code, kExitPass);
  const auto rows = lines(result.out);
  ASSERT_EQ(rows.size(), 2u);
  EXPECT_EQ(rows[0], "kk,K_series,K_quad,K_psi,K_cubic,K_agm,max_pairwise_relative_diff");
}

TEST(Cli, KTableJsonGrid) {
  const auto result = run({"k-table", "--kk-grid", "0.1:0.9:9", "--format", "json"});
  EXPECT_EQ(result.code, kExitPass);
  const auto document = nlohmann::json::parse(result.out);
  EXPECT_EQ(document["rows"].size(), 9u);
  EXPECT_TRUE(document["pass"].get<bool>());
  EXPECT_LE(document["max_residual"].get<double>(), 1e-9);
  EXPECT_TRUE(document.contains("config"));
}

TEST(Cli, UsageErrors) {
  EXPECT_EQ(run({"k-table", "--kk", "1.5"}).code, kExitUsage);
  EXPECT_EQ(run({"k-table", "--kk", "1e-6"}).code, kExitUsage);
  EXPECT_EQ(run({"k-table"}).code, kExitUsage);
  EXPECT_EQ(run({"k-table", "--kk", "0.5", "--kk-grid", "0.1:0.2:2"}).code, kExitUsage);
  EXPECT_EQ(run({"eval", "--kk", "1e-9", "--u-range", "0:K:3"}).code, kExitUsage);
  EXPECT_EQ(run({"eval", "--kk", "0.5", "--u-range", "K:0:3"}).code, kExitUsage);
  EXPECT_EQ(run({"eval", "--kk", "0.5", "--format", "xml"}).code, kExitUsage);
  EXPECT_EQ(run({"verify-bbg", "--which", "lemma"}).code, kExitUsage);
  EXPECT_EQ(run({"verify-identity", "--x-grid", "0:0.5:3"}).code, kExitUsage);
  EXPECT_EQ(run({"verify-identity", "--tol", "-1"}).code, kExitUsage);
  EXPECT_EQ(run({"no-such-command"}).code, kExitUsage);
  EXPECT_EQ(run({}).code, kExitUsage);
  const auto rejected = run({"k-table", "--kk", "1.5"});
  EXPECT_TRUE(rejected.out.empty());
  EXPECT_NE(rejected.err.find("admissible"), std::string::npos);
}

TEST(Cli, HelpExitsZero) {
  const auto result = run({"--help"});
  EXPECT_EQ(result.code, kExitPass);
  EXPECT_NE(result.out.find("k-table"), std::string::npos);
}

TEST(Cli, EvalGrid) {
  const auto result = run({"eval", "--kk", "0.6", "--u-range", "-K:K:3"});
  EXPECT_EQ(result.code, kExitPass);
  const auto rows = lines(result.out);
  ASSERT_EQ(rows.size(), 4u);
  EXPECT_EQ(rows[0], "u,phi,s6,c6,pythagorean_residual");
  EXPECT_EQ(rows[2], "0,0,0,1,0");

  const auto full = run({"eval", "--kk", "0.6", "--u-range", "0:4K:65", "--format", "json"});
  EXPECT_EQ(full.code, kExitPass);
  const auto document = nlohmann::json::parse(full.out);
  ASSERT_EQ(document["rows"].size(), 65u);
  const auto& at_K = document["rows"][16];
  EXPECT_NEAR(at_K["u"].get<double>(), document["config"]["K"].get<double>(), 1e-15);
  EXPECT_NEAR(at_K["s6"].get<double>(), 1.0, 1e-10);
}

TEST(Cli, EvalPythagoreanFailureExitsOne) {
  // This grid has rows with s^2 + c^2 - 1 = -1.1e-16, above a 1e-17 bound.
  const auto result = run({"eval", "--kk", "0.6", "--u-range", "0:4K:9", "--tol", "1e-17"});
  EXPECT_EQ(result.code, kExitVerificationFailure);
  EXPECT_NE(result.err.find("s^2 + c^2 - 1"), std::string::npos);
}

TEST(Cli, VerifyIdentityAndBbg) {
  EXPECT_EQ(run({"verify-identity", "--x-grid", "0.02:0.9:45", "--tol", "1e-9"}).code, kExitPass);
  EXPECT_EQ(run({"verify-bbg", "--which", "theorem"}).code, kExitPass);
  const auto cor = run({"verify-bbg", "--which", "corollary", "--format", "json"});
  EXPECT_EQ(cor.code, kExitPass);
  EXPECT_EQ(nlohmann::json::parse(cor.out)["rows"].size(), 19u);
}

TEST(Cli, VerificationFailureReportsWorst) {
  const auto result = run({"verify-identity", "--x-grid", "0.1:0.5:5", "--tol", "1e-30"});
  EXPECT_EQ(result.code, kExitVerificationFailure);
  EXPECT_NE(result.err.find("worst"), std::string::npos);
  EXPECT_FALSE(result.out.empty());
}

TEST(Cli, NumericalFailureExitsOne) {
  const auto result = run({"verify-identity", "--x-grid", "0.1:0.9:3", "--max-terms", "10"});
  EXPECT_EQ(result.code, kExitVerificationFailure);
  EXPECT_NE(result.err.find("max_terms"), std::string::npos);
}

TEST(Cli, Roots) {
  const auto result = run({"roots", "--kk", "0.866025403784", "--format", "json"});
  EXPECT_EQ(result.code, kExitPass);
  const auto row = nlohmann::json::parse(result.out)["rows"][0];
  EXPECT_NEAR(row["e1"].get<double>(), 0.766044, 5e-7);
  EXPECT_NEAR(row["e2"].get<double>(), 0.173648, 5e-7);
  EXPECT_NEAR(row["e3"].get<double>(), -0.939693, 5e-7);
  EXPECT_LE(std::fabs(row["root_sum"].get<double>()), 1e-14);
  EXPECT_EQ(run({"roots", "--kk-grid", "0.1:0.9:9"}).code, kExitPass);
}

TEST(Cli, SelfTest) {
  const auto result = run({"self-test"});
  EXPECT_EQ(result.code, kExitPass) << result.err;
  EXPECT_EQ(lines(result.out).size(), 10u);
}

TEST(Cli, Deterministic) {
  const std::vector<std::vector<std::string>> commands = {
      {"k-table", "--kk-grid", "0.1:0.9:9"},
      {"eval", "--kk", "0.3", "--u-range", "-2K:6K:50", "--format", "json"},
      {"verify-identity"},
      {"verify-bbg", "--which", "corollary"},
      {"roots", "--kk-grid", "0.2:0.8:4", "--format", "json"},
      {"self-test"}};
  for (const auto& command : commands) {
    const auto first = run(command);
    const auto second = run(command);
    EXPECT_EQ(first.code, second.code);
    EXPECT_EQ(first.out, second.out) << command.front();
  }
}

TEST(Cli, OutputFile) {
  const std::string path = ::testing::TempDir() + "sig6_cli_roots.csv";
  const auto result = run({"roots", "--kk", "0.5", "--output", path});
  EXPECT_EQ(result.code, kExitPass);
  EXPECT_TRUE(result.out.empty());
  std::ifstream file(path, std::ios::binary);
  std::stringstream contents;
  contents << file.rdbuf();
  EXPECT_EQ(contents.str().rfind("kk,alpha,beta,g2,g3,delta,e1,e2,e3,", 0), 0u);
  EXPECT_EQ(run({"roots", "--kk", "0.5", "--output", "/nonexistent-dir/x.csv"}).code, kExitUsage);
}
