#include <gtest/gtest.h>

#include <cstdio>
#include <fstream>

#include "jordan/fixture.hpp"
#include "jordan/sampling.hpp"

using namespace jordan;

namespace {

std::string parse_error(const std::string& text) {
  try {
    parse_fixture(text);
  } catch (const JordanError& e) {
    EXPECT_EQ(e.code(), Errc::ParseError);
    return e.what();
  }
  ADD_FAILURE() << "fixture accepted";
  return {};
}

}  // namespace

TEST(Fixture, ParsesExactCoordinates) {
  const Fixture f = parse_fixture(R"({
  "algebra": {"kind": "sym", "n": 2},
  "elements": {"x": [1, -1, 0]},
  "seed": 17
})");
  EXPECT_EQ(f.algebra.name(), "sym:2");
  EXPECT_EQ(f.seed, 17u);
  const Element& x = f.elements.at("x");
  EXPECT_EQ(x[0], 1.0);
  EXPECT_EQ(x[1], -1.0);
  EXPECT_EQ(x[2], 0.0);
}

TEST(Fixture, DirectSumAndOperators) {
  const Fixture f = parse_fixture(R"({
  "algebra": {"kind": "sum", "summands": [{"kind": "sym", "n": 1}, {"kind": "spin", "n": 2}]},
  "operators": {"neg": [[-1, 0, 0], [0, -1, 0], [0, 0, -1]]}
})");
  EXPECT_EQ(f.algebra.name(), "sym:1+spin:2");
  EXPECT_EQ(f.operators.at("neg").matrix(), -Eigen::Matrix3d::Identity());
}

TEST(Fixture, RoundTripIsBitExact) {
  Sampler s(1);
  Fixture f{Algebra::parse("herm:2+spin:3"), {}, {}, 99};
  for (int i = 0; i < 3; ++i) f.elements.emplace("e" + std::to_string(i), s.element(f.algebra));
  f.operators.emplace("k", s.automorphism(f.algebra));
  const std::string text = serialize_fixture(f);
  const Fixture g = parse_fixture(text);
  EXPECT_EQ(g.algebra, f.algebra);
  EXPECT_EQ(g.seed, f.seed);
  for (const auto& [name, el] : f.elements) EXPECT_EQ(g.elements.at(name).coords(), el.coords()) << name;
  EXPECT_EQ(g.operators.at("k").matrix(), f.operators.at("k").matrix());
  EXPECT_EQ(serialize_fixture(g), text);
}

TEST(Fixture, DescriptorMatchesSerializedForm) {
  EXPECT_EQ(algebra_descriptor(Algebra::herm_complex(3)), R"({"kind":"herm","n":3})");
}

TEST(Fixture, WrongDimensionNamesElement) {
  const std::string msg = parse_error(R"({
  "algebra": {"kind": "sym", "n": 2},
  "elements": {
    "good": [1, 2, 3],
    "bad": [1, 2]
  }
})");
  EXPECT_NE(msg.find("$.elements.bad"), std::string::npos) << msg;
  EXPECT_NE(msg.find("line 5"), std::string::npos) << msg;
}

TEST(Fixture, SyntaxErrorHasLineAndColumn) {
  const std::string msg = parse_error("{\n  \"algebra\": {\"kind\": \"sym\", \"n\": 2},\n  \"elements\": {\"x\": [1, 2,]}\n}");
  EXPECT_NE(msg.find("line 3"), std::string::npos) << msg;
  EXPECT_NE(msg.find("column"), std::string::npos) << msg;
}

TEST(Fixture, SemanticErrors) {
  EXPECT_NE(parse_error(R"({"elements": {}})").find("$.algebra"), std::string::npos);
  EXPECT_NE(parse_error(R"({"algebra": {"kind": "oct", "n": 3}})").find("$.algebra.kind"), std::string::npos);
  EXPECT_NE(parse_error(R"({"algebra": {"kind": "sym", "n": 0}})").find("$.algebra.n"), std::string::npos);
  EXPECT_NE(parse_error(R"({"algebra": {"kind": "sym", "n": 1}, "elements": {"x": ["a"]}})").find("$.elements.x[0]"),
            std::string::npos);
  EXPECT_NE(parse_error(R"({"algebra": {"kind": "sym", "n": 1}, "operators": {"g": [[1], [2]]}})").find("$.operators.g"),
            std::string::npos);
  EXPECT_NE(parse_error(R"({"algebra": {"kind": "sym", "n": 1}, "seed": -3})").find("$.seed"), std::string::npos);
}

TEST(Fixture, LoadFromFile) {
  const std::string path = testing::TempDir() + "fixture_load.json";
  {
    std::ofstream out(path);
    out << R"({"algebra": {"kind": "spin", "n": 3}, "elements": {"u": [1, 0.5, 0]}})";
  }
  const Fixture f = load_fixture(path);
  EXPECT_EQ(f.elements.at("u")[1], 0.5);
  std::remove(path.c_str());
  EXPECT_THROW(load_fixture(path), JordanError);
}
