#include <gtest/gtest.h>

#include <sstream>

#include "json.hpp"
#include "socksort/cli.hpp"
#include "socksort/harness.hpp"
#include "socksort/preimage_fertility.hpp"

using namespace socksort;

namespace {

struct CliRun {
  int code;
  std::string out;
  std::string err;
};

CliRun run(std::vector<std::string> args) {
  std::ostringstream out, err;
  int code = run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

std::vector<nlohmann::json> json_lines(const std::string& text) {
  std::vector<nlohmann::json> out;
  std::istringstream in(text);
  for (std::string line; std::getline(in, line);) out.push_back(nlohmann::json::parse(line));
  return out;
}

}  // namespace

TEST(Cli, Sort) {
  CliRun r = run({"sort", "--pattern", "~aba", "abcb"});
  EXPECT_EQ(r.code, kExitOk);
  EXPECT_EQ(r.out, "cbba\n");
}

TEST(Cli, SortTraceJson) {
  CliRun r = run({"sort", "--pattern", "aba", "--trace", "aba", "--format", "json-lines"});
  ASSERT_EQ(r.code, kExitOk);
  auto lines = json_lines(r.out);
  ASSERT_EQ(lines.size(), 7u);
  EXPECT_EQ(lines[0]["kind"], "push");
  EXPECT_EQ(lines.back()["output"], "baa");
  EXPECT_EQ(lines.back()["sorted"], true);
}

TEST(Cli, SortIterate) {
  CliRun r = run({"sort", "--pattern", "abba,abab", "--k", "3", "abacada"});
  EXPECT_EQ(r.code, kExitOk);
  EXPECT_NE(r.out.find("NeverSorts"), std::string::npos);
}

TEST(Cli, ImageCheckTraceTable) {
  CliRun r = run({"image-check", "--map", "aba", "--trace", "bcbabccdd"});
  EXPECT_EQ(r.code, kExitOk);
  EXPECT_EQ(r.out,
            "initial bc‖ba‖bccdd\n"
            "[b]c‖ba‖bccdd\t0\n"
            "bc‖[b]a‖bccdd\t-1\n"
            "bc‖ba‖[b]ccdd\t-2\n"
            "bc‖babc[c]dd\t-1\n"
            "bcbabccd[d]\t0\n"
            "MEMBER\n");
}

TEST(Cli, ImageCheckConsWitness) {
  CliRun r = run({"image-check", "--map", "cons-aba", "--witness", "aabbc"});
  EXPECT_EQ(r.out, "MEMBER\nwitness cbbaa\n");
  r = run({"--format", "json-lines", "image-check", "--map", "cons-aba", "aba"});
  auto j = json_lines(r.out).at(0);
  EXPECT_EQ(j["member"], false);
}

TEST(Cli, Preimages) {
  CliRun r = run({"preimages", "--map", "cons-aba", "baa"});
  EXPECT_EQ(r.out, "aab\naba\ncount 2\n");
  r = run({"preimages", "--map", "aba", "abcdefghijk"});
  EXPECT_EQ(r.code, kExitUsage);
  EXPECT_NE(r.err.find("10"), std::string::npos);
}

TEST(Cli, FertilityAndStaircase) {
  EXPECT_EQ(run({"fertility", "--map", "aba", "--m", "3", "--n", "5"}).code, kExitOk);
  EXPECT_EQ(run({"fertility", "--map", "aba", "--m", "5", "--n", "5"}).code, kExitUsage);
  CliRun r = run({"staircase", "--map", "aba", "--n", "3", "--k", "3"});
  EXPECT_EQ(r.code, kExitOk);
  EXPECT_NE(r.out.find("preimages=10"), std::string::npos);
  r = run({"staircase", "--map", "cons-aba", "--n", "2", "--k", "2"});
  EXPECT_EQ(r.code, kExitFail);
  EXPECT_NE(r.out.find("preimages=2 C(k+n-1,k-1)=3 FAIL"), std::string::npos);
}

TEST(Cli, Count) {
  CliRun r = run({"count-1ss", "--n-max", "4"});
  EXPECT_EQ(r.code, kExitOk);
  EXPECT_NE(r.out.find("s(4) = 8"), std::string::npos);
}

TEST(Cli, Witness) {
  EXPECT_EQ(run({"witness", "--patterns", "abba,abab", "--m", "4"}).code, kExitOk);
  EXPECT_EQ(run({"witness", "--patterns", "~aba", "--m", "3"}).code, kExitUsage);
}

TEST(Cli, UsageErrors) {
  EXPECT_EQ(run({}).code, kExitUsage);
  EXPECT_EQ(run({"frobnicate"}).code, kExitUsage);
  EXPECT_EQ(run({"sort", "ab1"}).code, kExitUsage);
  EXPECT_EQ(run({"verify", "12"}).code, kExitUsage);
  EXPECT_EQ(run({"--format", "xml", "sort", "ab"}).code, kExitUsage);
}

TEST(Verify, SmallestRunIsDeterministic) {
  VerifyReport a = verify(3);
  VerifyReport b = verify(3);
  std::ostringstream sa, sb;
  write_report(sa, a, OutputFormat::JsonLines);
  write_report(sb, b, OutputFormat::JsonLines);
  EXPECT_EQ(sa.str(), sb.str());
  ASSERT_EQ(a.suites.size(), 9u);
  EXPECT_EQ(a.suites[0].name, "evaluators");
  EXPECT_NE(sa.str().find("\"sequences\":5"), std::string::npos);
  EXPECT_THROW(verify(2), BoundError);
  EXPECT_THROW(verify(10), BoundError);
}

TEST(Verify, SuitesThatHold) {
  VerifyReport r = verify(6);
  for (const SuiteResult& s : r.suites) {
    if (s.name == "staircase-cons-aba") continue;
    EXPECT_TRUE(s.passed) << s.name;
  }
}

TEST(Bench, RowsAndBounds) {
  EXPECT_EQ(random_standardized(50, 3), random_standardized(50, 3));
  EXPECT_TRUE(is_standardized(random_standardized(200, 9)));
  std::vector<BenchRow> rows = bench({0, 7, 200});
  ASSERT_EQ(rows.size(), 3u);
  EXPECT_TRUE(rows[0].brute_force_ran);
  EXPECT_EQ(rows[1].brute_force_sequences, 877u);
  EXPECT_TRUE(rows[1].brute_force_agrees);
  EXPECT_FALSE(rows[2].brute_force_ran);
  EXPECT_TRUE(rows[2].image_inputs_accepted);
  EXPECT_THROW(bench({kBenchMaxLength + 1}), BoundError);
}
