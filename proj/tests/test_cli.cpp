#include <gtest/gtest.h>

#include <sstream>

#include "gibsum/cli.hpp"
#include "gibsum/json.hpp"

namespace {

struct Outcome {
  int code;
  std::string out;
  std::string err;
};

Outcome run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = gibsum::cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

}  // namespace

TEST(Cli, GcdSumExample) {
  const Outcome r = run({"gcd-sum", "--seed", "1,4", "--k", "5"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "11\n");
}

TEST(Cli, PisanoExample) {
  const Outcome r = run({"pisano", "--seed", "0,1", "--m", "10"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "60\n");
}

TEST(Cli, ClassifyJson) {
  const Outcome r = run({"classify", "--seed", "2,1", "--k", "12", "--format", "json"});
  ASSERT_EQ(r.code, 0) << r.err;
  const auto j = gibsum::json::parse(r.out);
  EXPECT_EQ(j.at("case_row"), "row_048");
  EXPECT_EQ(j.at("predicted"), "40");
}

TEST(Cli, DefaultSeedIsFibonacci) {
  EXPECT_EQ(run({"term", "--n", "30"}).out, "832040\n");
  EXPECT_EQ(run({"sum", "--n", "2", "--k", "20"}).out, "28655\n");
}

TEST(Cli, NegativeSeedsParse) {
  EXPECT_EQ(run({"term", "--seed", "-1,4", "--n", "5"}).out, "17\n");
  EXPECT_EQ(run({"term", "--seed=-1,4", "--n", "-5"}).out, "28\n");
}

TEST(Cli, AllMethodsAgree) {
  const Outcome r = run({"gcd-sum", "--k", "20", "--method", "all", "--format", "json"});
  ASSERT_EQ(r.code, 0);
  const auto j = gibsum::json::parse(r.out);
  EXPECT_TRUE(j.at("agree").get<bool>());
  ASSERT_EQ(j.at("results").size(), 3u);
  for (const auto& e : j.at("results")) EXPECT_EQ(e.at("value"), "55");
}

TEST(Cli, ScanLcmMode) {
  const Outcome r = run({"gcd-sum", "--seed", "1,4", "--k", "5", "--method", "lcm", "--lcm-mode", "scan"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "11\n");
  const Outcome partial =
      run({"gcd-sum", "--k", "60", "--method", "lcm", "--lcm-mode", "scan", "--bound", "50"});
  EXPECT_EQ(partial.code, 0);
  EXPECT_NE(partial.out.find("partial"), std::string::npos);
}

TEST(Cli, DomainErrorsExitOne) {
  EXPECT_EQ(run({"gcd-sum", "--k", "0"}).code, 1);
  EXPECT_EQ(run({"gcd-sum", "--k", "12abc"}).code, 1);
  EXPECT_EQ(run({"gcd-sum", "--seed", "0,0", "--k", "3"}).code, 1);
  EXPECT_EQ(run({"classify", "--seed", "2,4", "--k", "3"}).code, 1);
  EXPECT_EQ(run({"pisano", "--m", "0"}).code, 1);
  EXPECT_EQ(run({"no-such-command"}).code, 1);
  EXPECT_EQ(run({}).code, 1);
  EXPECT_EQ(run({"gcd-sum"}).code, 1);
  EXPECT_EQ(run({"gcd-sum", "--k", "3", "--format", "xml"}).code, 1);
  const Outcome r = run({"lucas-odd", "--j", "4"});
  EXPECT_EQ(r.code, 1);
  EXPECT_NE(r.err.find("odd j"), std::string::npos);
}

TEST(Cli, HelpExitsZero) {
  const Outcome r = run({"--help"});
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("gcd-sum"), std::string::npos);
}

TEST(Cli, ReduceClassifies) {
  const Outcome r = run({"classify", "--seed", "3,9", "--k", "6", "--reduce", "--format", "json"});
  ASSERT_EQ(r.code, 0) << r.err;
  const auto j = gibsum::json::parse(r.out);
  EXPECT_EQ(j.at("reduction").at("d"), "3");
  EXPECT_EQ(j.at("actual"), "4");
}

TEST(Cli, ApplicationsSubcommands) {
  EXPECT_EQ(run({"max-modulus", "--k", "60"}).code, 0);
  EXPECT_EQ(run({"max-modulus", "--k", "20", "--exhaustive"}).code, 0);
  EXPECT_EQ(run({"lucas-odd", "--seed", "1,4", "--j", "5"}).out, "11  = L_j\n");
  EXPECT_EQ(run({"primes-check", "--seed", "1,24", "--k", "7"}).code, 0);
  EXPECT_EQ(run({"lucas-periods"}).code, 0);
  const Outcome sq = run({"squares", "--k", "10", "--format", "json"});
  EXPECT_EQ(gibsum::json::parse(sq.out).at("empirical_value"), "55");
  const Outcome ps = run({"parity-scan", "--seed", "1,4", "--m-max", "100"});
  EXPECT_NE(ps.out.find("m=11 period=5"), std::string::npos);
}

TEST(Cli, PisanoExtras) {
  EXPECT_EQ(run({"window-length", "--m", "10"}).out, "60\n");
  EXPECT_EQ(run({"shift", "--other", "2,1", "--m", "5"}).out, "none\n");
  EXPECT_EQ(run({"period-lcm", "--m1", "2", "--m2", "5"}).out, "60\n");
  EXPECT_EQ(run({"invariants", "--seed", "2,1"}).out, "delta: 5\nD: -5\n");
  EXPECT_EQ(run({"reduce", "--seed", "2,4"}).out, "d: 2\nreduced: 1,2\n");
  EXPECT_EQ(run({"period-lcm", "--m1", "4", "--m2", "6"}).code, 1);
}

TEST(Cli, BiconditionalExperiment) {
  EXPECT_EQ(run({"biconditional", "--seed", "1,4", "--m-max", "30", "--k-max", "20"}).code, 0);
  const Outcome r = run({"biconditional", "--seed", "3,9", "--m-max", "30", "--k-max", "20"});
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("experimental"), std::string::npos);
}

TEST(Cli, IdentitiesSubcommand) {
  EXPECT_EQ(run({"identities", "--grid", "--hi", "20"}).code, 0);
  EXPECT_EQ(run({"identities", "--name", "cassini", "--hi", "100"}).code, 0);
  EXPECT_EQ(run({"identities", "--name", "bogus"}).code, 1);
  EXPECT_NE(run({"identities", "--list"}).out.find("cassini"), std::string::npos);
}

TEST(Cli, VerifySubsetWithoutTimingIsDeterministic) {
  const std::vector<std::string> args{"verify", "--only", "1", "2", "9", "--no-timing"};
  const Outcome a = run(args);
  const Outcome b = run(args);
  EXPECT_EQ(a.code, 0) << a.out;
  EXPECT_EQ(a.out, b.out);
  EXPECT_NE(a.out.find("3/3 criteria passed"), std::string::npos);
  EXPECT_EQ(run({"verify", "--only", "99"}).code, 1);
}

TEST(Cli, JsonOutputIsByteStable) {
  const std::vector<std::string> args{"max-modulus", "--k", "36", "--exhaustive", "--format", "json"};
  EXPECT_EQ(run(args).out, run(args).out);
  const std::vector<std::string> verify{"verify", "--only", "4", "--no-timing", "--format", "json"};
  const Outcome a = run(verify);
  EXPECT_EQ(a.out, run(verify).out);
  EXPECT_FALSE(gibsum::json::parse(a.out).contains("elapsed_seconds"));
}
