#include <gtest/gtest.h>

#include <algorithm>
#include <filesystem>
#include <sstream>
#include <string>
#include <vector>

#include "lrfill/cli/run.hpp"

namespace fs = std::filesystem;
using lrfill::cli::Environment;

namespace {

const std::string kFixtures = LRFILL_FIXTURE_DIR;

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run(std::vector<std::string> args, Environment env = {}) {
  std::ostringstream out, err;
  const int code = lrfill::cli::run(args, out, err, env);
  return {code, out.str(), err.str()};
}

std::string first_line(const std::string& s) { return s.substr(0, s.find('\n')); }

std::size_t count_lines(const std::string& s) { return static_cast<std::size_t>(std::ranges::count(s, '\n')); }

}  // namespace

TEST(Cli, GenStandard) {
  const auto r = run({"gen", "--rule", "36", "--n", "9"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "1 3 2 7 9 4 5 15 6\n");
  EXPECT_TRUE(r.err.empty());
}

TEST(Cli, GenDefaultsToStandardRule) { EXPECT_EQ(run({"gen", "--n", "5"}).out, "1 3 2 7 9\n"); }

TEST(Cli, GenPresetsAndInlineSpec) {
  EXPECT_EQ(run({"gen", "--rule", "odd", "--n", "10"}).out, "1 4 2 3 10 12 5 16 6 7\n");
  EXPECT_EQ(run({"gen", "--rule", "42", "--n", "8"}).out, "1 4 2 8 3 12 14 5\n");
  EXPECT_EQ(run({"gen", "--rule", "L=floor(n/2);R=floor(n/2);tie=left", "--n", "9"}).out, "1 3 2 7 9 4 5 15 6\n");
}

TEST(Cli, GenUndefinedCellsAfterFixedSteps) {
  EXPECT_EQ(run({"gen", "--rule", "36", "--n", "10", "--steps", "6"}).out, "1 3 2 - - 4 5 - 6 -\n");
}

TEST(Cli, GenLongOutputIsOnePerLine) {
  const auto small = run({"gen", "--n", "1000"});
  EXPECT_EQ(count_lines(small.out), 1u);
  const auto big = run({"gen", "--n", "1001"});
  EXPECT_EQ(count_lines(big.out), 1001u);
  EXPECT_EQ(first_line(big.out), "1");
}

TEST(Cli, GenStructured) {
  const auto r = run({"gen", "--n", "3", "--format", "structured"});
  EXPECT_EQ(r.out, "n=1 value=1\nn=2 value=3\nn=3 value=2\n");
}

TEST(Cli, Types) {
  EXPECT_EQ(run({"types", "--rule", "36", "--n", "16"}).out, "1141143141141143\n");
  EXPECT_EQ(run({"types", "--rule", "36", "--n", "40"}).out, "1141143141141143143141143141141143141141\n");
  EXPECT_EQ(run({"types", "--rule", "odd", "--n", "12"}).out, "324322324324\n");
  EXPECT_EQ(run({"types", "--rule", "42", "--n", "12", "--format", "structured"}).out,
            "rule=42 n=12 types=524232234232\n");
}

TEST(Cli, Records) {
  const auto r = run({"records", "--rule", "36", "--n", "14"});
  EXPECT_EQ(r.out, "R_pos: 1 2 4 5 8 10 11 13 14\nR_rec: 1 3 7 9 15 19 21 25 27\ndR_pos: 1 2 1 3 2 1 2 1\n"
                   "dR_rec: 2 4 2 6 4 2 4 2\n");
}

TEST(Cli, VerifyPassExitsZero) {
  const auto r = run({"verify", "--rule", "odd", "--claim", "morphism", "--n", "100000"});
  EXPECT_EQ(r.code, 0) << r.out << r.err;
  EXPECT_EQ(first_line(r.out).substr(0, 18), "PASS morphism.odd ");
}

TEST(Cli, VerifyAllRunsEveryVariant) {
  const auto serial = run({"verify", "--claim", "all", "--n", "3000"});
  EXPECT_EQ(serial.code, 0) << serial.out;
  for (const char* id : {"types.36.a", "types.odd.d", "types.42.v", "morphism.42", "records.odd.pos", "fill.lemma",
                         "selfsim.main", "duplicate.A026186", "oplus.position", "coincidence.C_eq_I4",
                         "conjecture.choral"})
    EXPECT_NE(serial.out.find(std::string("PASS ") + id + " "), std::string::npos) << id;
  const auto parallel = run({"verify", "--claim", "all", "--n", "3000", "--jobs", "4"});
  EXPECT_EQ(parallel.out, serial.out);
}

TEST(Cli, VerifyStructured) {
  const auto r = run({"verify", "--rule", "36", "--claim", "types", "--n", "1000", "--format", "structured"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(count_lines(r.out), 4u);
  std::istringstream lines(r.out);
  for (std::string line; std::getline(lines, line);) {
    EXPECT_EQ(line.rfind("claim=types.36.", 0), 0u) << line;
    EXPECT_NE(line.find(" bound=1000 status=pass empirical=false"), std::string::npos) << line;
  }
}

TEST(Cli, VerifyUsageErrors) {
  EXPECT_EQ(run({"verify", "--claim", "nonsense", "--n", "10"}).code, 2);
  EXPECT_EQ(run({"verify", "--claim", "types", "--n", "5"}).code, 2);
  EXPECT_EQ(run({"verify", "--rule", "unit", "--claim", "types", "--n", "50"}).code, 2);
  EXPECT_EQ(run({"verify", "--n", "10"}).code, 2);
}

TEST(Cli, Coincide) {
  const auto r = run({"coincide", "--n", "80"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(first_line(r.out).rfind("1 3 9 15 24 27 33 42 45 51 60 69 72", 0), 0u);
  std::istringstream lines(r.out);
  std::string line;
  std::getline(lines, line);
  std::getline(lines, line);
  EXPECT_EQ(line, "C == I4: PASS");
}

TEST(Cli, OplusPrefix) {
  const auto r = run({"oplus", "--n", "11"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(first_line(r.out), "2 1 6 8 3 4 14 5 18 20 7");
}

TEST(Cli, ConjectureIsEmpirical) {
  const auto r = run({"conjecture", "--n", "1000"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(first_line(r.out), "EMPIRICAL report (no proof), values up to 1000");
  EXPECT_NE(r.out.find("complement: 6 12 16 18 24 30"), std::string::npos);
  EXPECT_NE(r.out.find("halved:     3 6 8 9 12 15"), std::string::npos);
}

TEST(Cli, ConjectureAgreementThresholdFails) {
  const auto r = run({"conjecture", "--n", "1000", "--min-agreement", "100000"});
  EXPECT_EQ(r.code, 1);
  EXPECT_NE(r.out.find("FAIL conjecture.choral"), std::string::npos);
}

TEST(Cli, OeisCheckAgainstFixtures) {
  const auto r = run({"oeis-check", "--id", "A026136", "--n", "300", "--cache-dir", kFixtures, "--offline"});
  EXPECT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(r.out, "generated A026136 vs A026136: identical over 1..300 (300 terms)\n");
}

TEST(Cli, OeisCheckPairs) {
  const auto r = run({"oeis-check", "--pairs", "--cache-dir", kFixtures, "--offline"});
  EXPECT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(count_lines(r.out), 9u);
  EXPECT_EQ(r.out.find("first-mismatch"), std::string::npos);
}

TEST(Cli, OeisCheckMismatchExitsOne) {
  const auto r = run({"oeis-check", "--id", "A026136", "--against", "A026177", "--cache-dir", kFixtures, "--offline",
                      "--format", "structured"});
  EXPECT_EQ(r.code, 1);
  EXPECT_EQ(r.out, "lhs=A026136 rhs=A026177 status=first-mismatch from=1 to=2 compared=2 index=2 lhs_value=3 rhs_value=4\n");
}

TEST(Cli, OeisCheckColdOfflineExitsThree) {
  const fs::path empty = fs::temp_directory_path() / "lrfill-cli-empty-cache";
  fs::remove_all(empty);
  const auto r = run({"oeis-check", "--id", "A026136", "--cache-dir", empty.string(), "--offline"});
  EXPECT_EQ(r.code, 3);
  EXPECT_NE(r.err.find("unavailable offline"), std::string::npos);
}

TEST(Cli, OeisCheckUsesTransportOnMiss) {
  const fs::path dir = fs::temp_directory_path() / "lrfill-cli-cache";
  fs::remove_all(dir);
  int calls = 0;
  Environment env;
  env.transport = [&](const std::string& url) {
    ++calls;
    EXPECT_EQ(url, "https://oeis.org/A026222/b026222.txt");
    return std::string("1 1\n2 3\n3 9\n4 15\n5 24\n");
  };
  const auto r = run({"oeis-check", "--id", "A026222", "--cache-dir", dir.string()}, env);
  EXPECT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(calls, 1);
  EXPECT_EQ(run({"oeis-check", "--id", "A026222", "--cache-dir", dir.string()}, env).code, 0);
  EXPECT_EQ(calls, 1);
  fs::remove_all(dir);
}

TEST(Cli, OeisCheckUsage) {
  EXPECT_EQ(run({"oeis-check", "--cache-dir", kFixtures, "--offline"}).code, 2);
  EXPECT_EQ(run({"oeis-check", "--id", "A000045", "--cache-dir", kFixtures, "--offline"}).code, 2);
  EXPECT_EQ(run({"oeis-check", "--id", "Axyz", "--cache-dir", kFixtures, "--offline"}).code, 2);
}

TEST(Cli, MorphismSpec) {
  const auto r = run({"morphism", "--spec", "1->114,3->314,4->314;seed=1", "--n", "40"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "1141143141141143143141143141141143141141\n");
  EXPECT_EQ(run({"morphism", "--spec", "0->001, 1->011", "--n", "9"}).out, "001001011\n");
  EXPECT_EQ(run({"morphism", "--spec", "2->2 2b 3, 2b->2b 4 3, 3->2 2b 3, 4->2b 4 3; seed=2", "--n", "5"}).out,
            "2 2b 3 2b 4\n");
  EXPECT_EQ(run({"morphism", "--spec", "1->114,3->314,4->314;seed=4", "--n", "4"}).code, 2);
  EXPECT_EQ(run({"morphism", "--spec", "1->12", "--n", "4"}).code, 2);
}

TEST(Cli, MorphismStructured) {
  EXPECT_EQ(run({"morphism", "--spec", "1->12,2->132,3->1332;seed=1", "--n", "8", "--format", "structured"}).out,
            "morphism=\"1->12, 2->132, 3->1332\" seed=1 n=8 prefix=12132121\n");
}

TEST(Cli, UsageErrorsExitTwo) {
  EXPECT_EQ(run({}).code, 2);
  EXPECT_EQ(run({"frobnicate"}).code, 2);
  const auto r = run({"gen"});
  EXPECT_EQ(r.code, 2);
  EXPECT_NE(r.err.find("--n"), std::string::npos);
  EXPECT_NE(r.err.find("Usage:"), std::string::npos);
  EXPECT_EQ(run({"gen", "--n", "0"}).code, 2);
  EXPECT_EQ(run({"gen", "--n", "-4"}).code, 2);
  EXPECT_EQ(run({"gen", "--n", "5", "--format", "json"}).code, 2);
  EXPECT_EQ(run({"gen", "--n", "5", "--rule", "37"}).code, 2);
  EXPECT_EQ(run({"gen", "--n", "5", "--rule", "L=n/;R=n"}).code, 2);
  EXPECT_EQ(run({"types", "--n", "5", "--rule", "unit"}).code, 2);
}

TEST(Cli, DegenerateRuleLeavesCellsUndefined) {
  const auto r = run({"gen", "--rule", "degenerate", "--n", "5"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "1 - 2 - 3\n");
}

TEST(Cli, HelpExitsZero) {
  const auto r = run({"--help"});
  EXPECT_EQ(r.code, 0);
  for (const char* sub : {"gen", "types", "records", "verify", "coincide", "oplus", "conjecture", "oeis-check", "morphism"})
    EXPECT_NE(r.out.find(sub), std::string::npos) << sub;
  EXPECT_EQ(run({"gen", "--help"}).code, 0);
}

TEST(Cli, OutputIsByteStable) {
  const std::vector<std::string> args{"verify", "--rule", "42", "--claim", "records", "--n", "500"};
  EXPECT_EQ(run(args).out, run(args).out);
}
