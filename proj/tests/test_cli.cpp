#include <gtest/gtest.h>

#include <sstream>

#include "brq/cli.hpp"
#include "brq/verify.hpp"

using namespace brq;

namespace {

struct Outcome {
  int code;
  std::string out, err;
};

Outcome run(std::vector<std::string> args) {
  for (auto& a : args)
    if (!a.empty() && a[0] == '@') a = default_fixture_dir() + "/" + a.substr(1);
  std::ostringstream out, err;
  const int code = run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

}  // namespace

TEST(Cli, RepeatedRunsAreIdentical) {
  const Outcome a = run({"brnr", "grassmannian", "@heisenberg4_correlation.json", "--r", "2", "--json", "--witness"});
  const Outcome b = run({"brnr", "grassmannian", "@heisenberg4_correlation.json", "--r", "2", "--json", "--witness"});
  EXPECT_EQ(a.code, 0);
  EXPECT_EQ(a.out, b.out);
  EXPECT_EQ(a.out.find("generated_at"), std::string::npos);
}

TEST(Cli, StampIsOptIn) {
  const Outcome r = run({"b0", "@klein4.json", "--json", "--stamp"});
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("\"generated_at\""), std::string::npos);
}

TEST(Cli, IncompatibleOptionsAreRejected) {
  EXPECT_EQ(run({"brnr", "linear", "@klein4.json", "--all-subgroups"}).code, 2);
  EXPECT_EQ(run({"b0", "@klein4.json", "--r", "2"}).code, 2);
  EXPECT_EQ(run({"brnr", "grassmannian", "@pauli.json"}).code, 2);
  EXPECT_EQ(run({"brnr", "projective", "@heisenberg4_correlation.json"}).code, 2);
  EXPECT_EQ(run({"brnr", "toric", "@pauli.json"}).code, 2);
  EXPECT_EQ(run({"brnr", "sideways", "@pauli.json"}).code, 2);
}

TEST(Cli, ErrorsAreStructuredUnderJson) {
  const Outcome r = run({"verify", "no-such-suite", "--json"});
  EXPECT_EQ(r.code, 2);
  EXPECT_NE(r.out.find("\"error\""), std::string::npos);
  const Outcome t = run({"h2", "@does-not-exist.json"});
  EXPECT_EQ(t.code, 2);
  EXPECT_TRUE(t.out.empty());
  EXPECT_NE(t.err.find("error:"), std::string::npos);
}

TEST(Cli, SizeLimits) {
  EXPECT_EQ(run({"h2", "@order64.json", "--max-order", "32"}).code, 3);
  EXPECT_EQ(run({"stack", "@m06_pic.json", "--max-rank", "8"}).code, 0);  // H^1 has no rank limit
  EXPECT_EQ(run({"h2", "@order64.json"}).code, 0);
}

TEST(Cli, Help) {
  const Outcome r = run({"--help"});
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("brnr"), std::string::npos);
}

TEST(Cli, VerifyReportsFailuresWithNonzeroExit) {
  const Outcome ok = run({"verify", "toric"});
  EXPECT_EQ(ok.code, 0);
  EXPECT_NE(ok.out.find("toric: 14/14 passed"), std::string::npos);
  const Outcome missing = run({"verify", "fixtures", "--fixture-dir", "/nonexistent"});
  EXPECT_NE(missing.code, 0);
}
