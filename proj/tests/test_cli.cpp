#include <gtest/gtest.h>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <vector>

#include "cli.hpp"

namespace {

struct Outcome {
  int code;
  std::string out;
  std::string err;
};

Outcome run(std::vector<std::string> args) {
  args.insert(args.begin(), "jordan_cone");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  const int code = jordan::cli_dispatch(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

class Cli : public testing::Test {
 protected:
  void SetUp() override {
    path_ = testing::TempDir() + "cli_fixture.json";
    std::ofstream f(path_);
    f << R"({
  "algebra": {"kind": "sym", "n": 2},
  "elements": {"x": [1, -1, 0], "y": [2, 3, 0.5], "p": [1, 0, 0]},
  "operators": {
    "neg": [[-1, 0, 0], [0, -1, 0], [0, 0, -1]],
    "L": [[1, 0, 0], [0, 2, 0], [0, 0, 1.5]]
  },
  "seed": 5
})";
  }
  void TearDown() override { std::remove(path_.c_str()); }
  std::string path_;
};

}  // namespace

TEST_F(Cli, SpectrumText) {
  const Outcome r = run({"--fixture", path_, "spectrum", "--element", "x"});
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("eigenvalues"), std::string::npos);
}

TEST_F(Cli, SpectrumJson) {
  const Outcome r = run({"--fixture", path_, "--json", "spectrum", "--element", "x"});
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("\"eigenvalues\""), std::string::npos);
  EXPECT_NE(r.out.find("-1"), std::string::npos);
}

TEST_F(Cli, UPositiveReportsWitness) {
  const Outcome r = run({"--fixture", path_, "--json", "upositive", "--element", "x"});
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("\"positive\": false"), std::string::npos) << r.out;
}

TEST_F(Cli, PierceRanks) {
  const Outcome r = run({"--fixture", path_, "--json", "pierce", "--element", "p"});
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("\"rank_half\": 1"), std::string::npos) << r.out;
}

TEST_F(Cli, IsotopeOfIndefiniteElement) {
  const Outcome r = run({"--fixture", path_, "--json", "isotope", "--element", "x"});
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("\"isomorphic\": false"), std::string::npos) << r.out;
}

TEST_F(Cli, DecomposeNegation) {
  const Outcome r = run({"--fixture", path_, "--json", "decompose-str", "--operator", "neg"});
  EXPECT_EQ(r.code, 0) << r.err;
  EXPECT_NE(r.out.find("\"involutive\": true"), std::string::npos) << r.out;
}

TEST_F(Cli, NonMemberOperatorExitsOne) {
  const Outcome r = run({"--fixture", path_, "--json", "decompose-str", "--operator", "L"});
  EXPECT_EQ(r.code, 1);
  EXPECT_NE(r.out.find("NotInStr"), std::string::npos) << r.out;
  EXPECT_EQ(run({"--fixture", path_, "decompose-go", "--operator", "neg"}).code, 1);
}

TEST_F(Cli, LiftNeedsHermAlgebra) {
  EXPECT_EQ(run({"--fixture", path_, "lift-aut", "--operator", "neg"}).code, 1);
}

TEST_F(Cli, UsageErrorsExitTwo) {
  EXPECT_EQ(run({}).code, 2);
  EXPECT_EQ(run({"spectrum"}).code, 2);
  EXPECT_EQ(run({"--fixture", path_, "spectrum"}).code, 2);
  EXPECT_EQ(run({"--fixture", path_, "spectrum", "--element", "nope"}).code, 2);
  EXPECT_EQ(run({"--fixture", path_, "--tol", "-1", "spectrum", "--element", "x"}).code, 2);
  EXPECT_EQ(run({"--fixture", "/nonexistent.json", "spectrum", "--element", "x"}).code, 2);
  EXPECT_EQ(run({"verify"}).code, 2);
  EXPECT_EQ(run({"verify", "--algebra", "cube:3"}).code, 2);
  EXPECT_EQ(run({"--trials", "0", "verify", "--algebra", "sym:2"}).code, 2);
  EXPECT_EQ(run({"--help"}).code, 0);
}

TEST_F(Cli, VerifyIsByteIdentical) {
  const Outcome a = run({"--json", "--seed", "3", "--trials", "2", "verify", "--algebra", "herm:2"});
  const Outcome b = run({"--json", "--seed", "3", "--trials", "2", "verify", "--algebra", "herm:2"});
  EXPECT_EQ(a.code, 0);
  EXPECT_EQ(a.out, b.out);
  EXPECT_NE(a.err.find("records"), std::string::npos);
}

TEST_F(Cli, VerifyUsesFixtureAlgebraAndSeed) {
  const Outcome r = run({"--fixture", path_, "--trials", "1", "verify"});
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("PASS sym:2 seed 5"), std::string::npos) << r.out;
}

TEST_F(Cli, ToleranceFromEnvironment) {
  setenv("JORDAN_CONE_TOL", "abc", 1);
  EXPECT_EQ(run({"--trials", "1", "verify", "--algebra", "sym:1"}).code, 2);
  setenv("JORDAN_CONE_TOL", "1e-6", 1);
  const Outcome r = run({"--json", "--trials", "1", "verify", "--algebra", "sym:1"});
  unsetenv("JORDAN_CONE_TOL");
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("\"tolerance\": 1e-06"), std::string::npos) << r.out.substr(0, 300);
}
