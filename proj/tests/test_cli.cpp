#include <gtest/gtest.h>

#include <json.hpp>

#include <cstdlib>
#include <sstream>

#include "palsym/cli.hpp"

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run(std::vector<std::string> args, const std::string& input = "") {
  std::istringstream in(input);
  std::ostringstream out;
  std::ostringstream err;
  const int code = palsym::cli::run(args, in, out, err);
  return {code, out.str(), err.str()};
}

std::vector<std::string> lines(const std::string& text) {
  std::vector<std::string> out;
  std::istringstream s(text);
  for (std::string line; std::getline(s, line);) out.push_back(line);
  return out;
}

bool contains(const std::string& haystack, const std::string& needle) {
  return haystack.find(needle) != std::string::npos;
}

}  // namespace

TEST(CliSd, Examples) {
  const Result r = run({"sd", "bbabbbbaaa"});
  EXPECT_EQ(r.code, 0);
  EXPECT_TRUE(contains(r.out, "S_d = 4"));

  const Result ab = run({"sd", "ab"});
  EXPECT_EQ(ab.code, 0);
  EXPECT_TRUE(contains(ab.out, "S_d = 0"));
  EXPECT_TRUE(contains(ab.out, "class: Antipalindrome"));

  const Result bad = run({"sd", "axb"});
  EXPECT_EQ(bad.code, 2);
  EXPECT_TRUE(contains(bad.err, "invalid letter 'x' at position 2"));
}

TEST(CliSd, WitnessJsonAndBinary) {
  const Result r = run({"sd", "aab", "--witness", "--format", "json"});
  ASSERT_EQ(r.code, 0);
  const auto j = nlohmann::json::parse(r.out);
  EXPECT_EQ(j["sd"], 1);
  EXPECT_EQ(j["witness"]["deleted"], nlohmann::json::array({3}));
  EXPECT_EQ(j["witness"]["residual"], "aa");
  EXPECT_EQ(run({"sd", "0011"}).code, 2);
  EXPECT_TRUE(contains(run({"sd", "0011", "--binary"}).out, "class: Antipalindrome"));
}

TEST(CliSd, Stdin) {
  const Result r = run({"sd", "--stdin", "--format", "json"}, "ab\nbbabbbbaaa\n");
  ASSERT_EQ(r.code, 0);
  const auto out = lines(r.out);
  ASSERT_EQ(out.size(), 2U);
  EXPECT_EQ(nlohmann::json::parse(out[1])["sd"], 4);
  EXPECT_EQ(run({"sd", "--stdin"}, "ab\nax\n").code, 2);
  EXPECT_EQ(run({"sd"}).code, 2);
}

TEST(CliTable, ComparePublished) {
  const Result r = run({"table", "--from", "1", "--to", "20", "--compare-paper", "--jobs", "2"});
  EXPECT_EQ(r.code, 0);
  EXPECT_TRUE(contains(r.out, "match the published table"));
}

TEST(CliTable, JsonRowAndRoundTrip) {
  const Result r = run({"table", "--from", "10", "--to", "10", "--format", "json"});
  ASSERT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "{\"n\":10,\"sd\":4,\"lower\":4,\"upper\":5,\"extremal\":[\"aaabbbbabb\"]}\n");

  const Result many = run({"table", "--from", "1", "--to", "12", "--format", "json"});
  for (const std::string& line : lines(many.out)) {
    EXPECT_EQ(nlohmann::ordered_json::parse(line).dump(), line);
  }
  EXPECT_TRUE(contains(many.out, "\"lower\":null"));
}

TEST(CliTable, Csv) {
  const Result r = run({"table", "--from", "1", "--to", "3", "--format", "csv"});
  ASSERT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "n,sd,lower,upper,extremal\n1,0,,0,a\n2,0,0,1,aa;ab\n3,1,1,1,aab\n");
}

TEST(CliTable, GuardsAndErrors) {
  EXPECT_EQ(run({"table", "--from", "1", "--to", "64"}).code, 2);
  EXPECT_EQ(run({"table", "--from", "5", "--to", "4"}).code, 2);
  EXPECT_EQ(run({"table", "--format", "xml"}).code, 2);
  EXPECT_EQ(run({"table", "--to", "5", "--kernel", "mmx"}).code, 2);
  EXPECT_EQ(run({"table", "--to", "5", "--jobs", "0"}).code, 2);
}

TEST(CliTable, JobsFromEnvironment) {
  ::setenv("PALSYM_JOBS", "3", 1);
  const Result r = run({"table", "--from", "10", "--to", "10", "--format", "json"});
  ::unsetenv("PALSYM_JOBS");
  EXPECT_EQ(r.code, 0);
  EXPECT_TRUE(contains(r.out, "\"sd\":4"));
}

TEST(CliConstruct, Examples) {
  const Result r = run({"construct", "1", "0", "0"});
  EXPECT_EQ(r.code, 0);
  EXPECT_TRUE(contains(r.out, "word: bbabbbbaaa"));
  EXPECT_TRUE(contains(r.out, "bound: 4"));
  EXPECT_TRUE(contains(r.out, "computed S_d: 4"));

  const Result big = run({"construct", "2", "4", "2", "--format", "json"});
  ASSERT_EQ(big.code, 0);
  const auto j = nlohmann::json::parse(big.out);
  EXPECT_EQ(j["length"], 23);
  EXPECT_EQ(j["bound"], 9);
  EXPECT_EQ(j["sd"], 9);

  EXPECT_EQ(run({"construct", "1", "5", "5"}).code, 2);
}

TEST(CliVerify, Suites) {
  const Result lemma = run({"verify", "--suite", "lemma4", "--max-n", "4"});
  EXPECT_EQ(lemma.code, 0);
  EXPECT_TRUE(contains(lemma.out, "lemma4: 35 passed, 0 failed"));

  const Result game = run({"verify", "--suite", "game", "--max-n", "10"});
  EXPECT_EQ(game.code, 0);
  EXPECT_TRUE(contains(game.out, "g1(10) >= 6"));

  const Result oracle = run({"verify", "--suite", "oracle", "--max-n", "12", "--format", "json"});
  EXPECT_EQ(oracle.code, 0);
  EXPECT_EQ(nlohmann::json::parse(lines(oracle.out).front())["passed"], true);

  EXPECT_EQ(run({"verify", "--suite", "oracle", "--max-n", "23"}).code, 2);
  EXPECT_EQ(run({"verify", "--suite", "unknown"}).code, 2);
  EXPECT_EQ(run({"verify"}).code, 2);
}

TEST(CliGame, SolveAndBest) {
  const Result solve = run({"game", "solve", "aab"});
  EXPECT_EQ(solve.code, 0);
  EXPECT_TRUE(contains(solve.out, "value: 1"));

  const Result json = run({"game", "solve", "aabbbb", "--format", "json"});
  ASSERT_EQ(json.code, 0);
  const auto j = nlohmann::json::parse(json.out);
  EXPECT_EQ(j["value"], 3);
  EXPECT_EQ(j["transcript"]["move_count"], 3);
  EXPECT_EQ(j["transcript"]["moves"][0]["mover"], "second");
  EXPECT_EQ(j["transcript"]["final"], "Palindrome");

  const Result best = run({"game", "best", "6", "--format", "json"});
  ASSERT_EQ(best.code, 0);
  EXPECT_GE(nlohmann::json::parse(best.out)["value"].get<int>(), 2);

  EXPECT_EQ(run({"game", "solve", "abc"}).code, 2);
  EXPECT_EQ(run({"game", "best", "15"}).code, 2);
  EXPECT_EQ(run({"game"}).code, 2);
}

TEST(CliGame, PlayAsSecondPlayerRepromptsOnBadInput) {
  // Human moves first as the second player; "9" and "x" are rejected.
  const Result r = run({"game", "play", "aabbbb", "--side", "second", "--engine", "exact",
                        "--format", "json"},
                       "9\nx\n1\n1\n1\n1\n");
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_TRUE(contains(r.out, "invalid position '9'"));
  EXPECT_TRUE(contains(r.out, "invalid position 'x'"));
  EXPECT_TRUE(contains(r.out, "game over after"));
  const auto j = nlohmann::json::parse(lines(r.out).back());
  EXPECT_EQ(j["initial"], "aabbbb");
  EXPECT_EQ(j["moves"][0]["mover"], "second");
  EXPECT_EQ(j["moves"][0]["position"], 1);
  EXPECT_NE(j["final"], "Neither");
  EXPECT_EQ(j["move_count"], j["moves"].size());
}

TEST(CliGame, PlayAsFirstPlayerAgainstHeuristic) {
  const Result r = run({"game", "play", "aabbbb", "--side", "first", "--engine", "heuristic"},
                       "1\n1\n1\n1\n");
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_TRUE(contains(r.out, "engine (second player) deletes position"));
  EXPECT_TRUE(contains(r.out, "game over after"));
}

TEST(CliGame, PlayEndsWithUsageErrorOnEof) {
  EXPECT_EQ(run({"game", "play", "aabbbb", "--side", "second"}, "").code, 2);
}

TEST(Cli, HelpAndKernels) {
  EXPECT_EQ(run({"--help"}).code, 0);
  EXPECT_EQ(run({}).code, 2);
  const Result k = run({"kernels"});
  EXPECT_EQ(k.code, 0);
  EXPECT_TRUE(contains(k.out, "scalar"));
}
