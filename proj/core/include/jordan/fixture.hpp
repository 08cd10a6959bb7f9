#pragma once

// JSON fixtures:
//   {"algebra": {"kind": "sym"|"herm"|"spin"|"sum", "n": int, "summands": [...]},
//    "elements": {name: [real, ...]},
//    "operators": {name: [[real, ...], ...]},
//    "seed": int}
// Coordinates are in the fixed basis of jordan/algebra.hpp.

#include <cstdint>
#include <map>
#include <string>

#include "jordan/algebra.hpp"

namespace jordan {

struct Fixture {
  Algebra algebra;
  std::map<std::string, Element> elements;
  std::map<std::string, VOperator> operators;
  std::uint64_t seed = 0;
};

// Throws JordanError(ParseError) whose message carries line:column and the
// offending field path.
Fixture parse_fixture(const std::string& text);
Fixture load_fixture(const std::string& path);

// Doubles are written in shortest round-trip form, so parsing the output
// reproduces every coordinate bit for bit.
std::string serialize_fixture(const Fixture& f);

// Descriptor text of an algebra as it appears under "algebra".
std::string algebra_descriptor(const Algebra& a);

}  // namespace jordan
