#include "jordan/fixture.hpp"

#include <fstream>
#include <sstream>

#include "json_io.hpp"

namespace jordan {

using nlohmann::json;

namespace {

struct Position {
  int line = 1;
  int column = 1;
};

Position position_of(const std::string& text, std::size_t offset) {
  Position pos;
  offset = std::min(offset, text.size());
  for (std::size_t i = 0; i < offset; ++i) {
    if (text[i] == '\n') {
      ++pos.line;
      pos.column = 1;
    } else {
      ++pos.column;
    }
  }
  return pos;
}

// nlohmann does not keep source positions, so semantic errors point at the
// first occurrence of the quoted key after its parent key.
std::size_t locate_key(const std::string& text, const std::string& parent, const std::string& key) {
  std::size_t from = 0;
  if (!parent.empty()) {
    const auto p = text.find("\"" + parent + "\"");
    if (p != std::string::npos) from = p;
  }
  const auto k = text.find("\"" + key + "\"", from);
  return k == std::string::npos ? from : k;
}

class FixtureParser {
 public:
  explicit FixtureParser(const std::string& text) : text_(text) {}

  [[noreturn]] void fail(const std::string& path, std::size_t offset, const std::string& what) const {
    const Position pos = position_of(text_, offset);
    throw JordanError(Errc::ParseError, "line " + std::to_string(pos.line) + ", column " +
                                            std::to_string(pos.column) + ": " + path + ": " + what);
  }

  Algebra algebra(const json& node, const std::string& path) const {
    const std::size_t at = locate_key(text_, "", "algebra");
    if (!node.is_object()) fail(path, at, "expected an object");
    if (!node.contains("kind") || !node["kind"].is_string()) fail(path + ".kind", at, "missing or not a string");
    const std::string kind = node["kind"].get<std::string>();
    if (kind == "sum") {
      if (!node.contains("summands") || !node["summands"].is_array() || node["summands"].empty()) {
        fail(path + ".summands", at, "expected a non-empty array");
      }
      std::vector<Algebra> parts;
      for (std::size_t i = 0; i < node["summands"].size(); ++i) {
        parts.push_back(algebra(node["summands"][i], path + ".summands[" + std::to_string(i) + "]"));
      }
      return Algebra::direct_sum(parts);
    }
    if (!node.contains("n") || !node["n"].is_number_integer()) fail(path + ".n", at, "missing or not an integer");
    const int n = node["n"].get<int>();
    try {
      if (kind == "sym") return Algebra::sym_real(n);
      if (kind == "herm") return Algebra::herm_complex(n);
      if (kind == "spin") return Algebra::spin_factor(n);
    } catch (const JordanError& e) {
      fail(path + ".n", at, e.what());
    }
    fail(path + ".kind", at, "unknown algebra kind '" + kind + "'");
  }

  Eigen::VectorXd vector(const json& node, const std::string& path, std::size_t at) const {
    if (!node.is_array()) fail(path, at, "expected an array of numbers");
    Eigen::VectorXd v(static_cast<Eigen::Index>(node.size()));
    for (std::size_t i = 0; i < node.size(); ++i) {
      if (!node[i].is_number()) fail(path + "[" + std::to_string(i) + "]", at, "not a number");
      v[static_cast<Eigen::Index>(i)] = node[i].get<double>();
    }
    return v;
  }

  Fixture parse() const {
    json doc;
    try {
      doc = json::parse(text_);
    } catch (const json::parse_error& e) {
      fail("$", e.byte > 0 ? e.byte - 1 : 0, e.what());
    }
    if (!doc.is_object()) fail("$", 0, "expected a JSON object");
    if (!doc.contains("algebra")) fail("$.algebra", 0, "missing");
    Fixture f{algebra(doc["algebra"], "$.algebra"), {}, {}, 0};
    const int dim = f.algebra.dim();

    if (doc.contains("seed")) {
      const json& s = doc["seed"];
      if (!s.is_number_unsigned()) fail("$.seed", locate_key(text_, "", "seed"), "expected a non-negative integer");
      f.seed = s.get<std::uint64_t>();
    }
    if (doc.contains("elements")) {
      const json& els = doc["elements"];
      if (!els.is_object()) fail("$.elements", locate_key(text_, "", "elements"), "expected an object");
      for (const auto& [name, value] : els.items()) {
        const std::string path = "$.elements." + name;
        const std::size_t at = locate_key(text_, "elements", name);
        Eigen::VectorXd v = vector(value, path, at);
        if (v.size() != dim) {
          fail(path, at, "element '" + name + "' has " + std::to_string(v.size()) + " coordinates, algebra " +
                             f.algebra.name() + " has dimension " + std::to_string(dim));
        }
        try {
          f.elements.emplace(name, Element(f.algebra, std::move(v)));
        } catch (const JordanError& e) {
          fail(path, at, e.what());
        }
      }
    }
    if (doc.contains("operators")) {
      const json& ops = doc["operators"];
      if (!ops.is_object()) fail("$.operators", locate_key(text_, "", "operators"), "expected an object");
      for (const auto& [name, value] : ops.items()) {
        const std::string path = "$.operators." + name;
        const std::size_t at = locate_key(text_, "operators", name);
        if (!value.is_array() || static_cast<int>(value.size()) != dim) {
          fail(path, at, "operator '" + name + "' must have " + std::to_string(dim) + " rows");
        }
        Eigen::MatrixXd m(dim, dim);
        for (int r = 0; r < dim; ++r) {
          const Eigen::VectorXd row = vector(value[r], path + "[" + std::to_string(r) + "]", at);
          if (row.size() != dim) {
            fail(path + "[" + std::to_string(r) + "]", at,
                 "operator '" + name + "' row has " + std::to_string(row.size()) + " entries, expected " +
                     std::to_string(dim));
          }
          m.row(r) = row.transpose();
        }
        if (!m.allFinite()) fail(path, at, "non-finite entry");
        f.operators.emplace(name, VOperator(f.algebra, std::move(m)));
      }
    }
    return f;
  }

 private:
  const std::string& text_;
};

}  // namespace

namespace detail {

json algebra_to_json(const Algebra& a) {
  switch (a.kind()) {
    case AlgebraKind::SymReal:
      return {{"kind", "sym"}, {"n", a.order()}};
    case AlgebraKind::HermComplex:
      return {{"kind", "herm"}, {"n", a.order()}};
    case AlgebraKind::SpinFactor:
      return {{"kind", "spin"}, {"n", a.order()}};
    case AlgebraKind::DirectSum: {
      json parts = json::array();
      for (const auto& b : a.blocks()) parts.push_back(algebra_to_json(b));
      return {{"kind", "sum"}, {"summands", parts}};
    }
  }
  return {};
}

}  // namespace detail

Fixture parse_fixture(const std::string& text) { return FixtureParser(text).parse(); }

Fixture load_fixture(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw JordanError(Errc::ParseError, "cannot open fixture '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse_fixture(ss.str());
}

std::string serialize_fixture(const Fixture& f) {
  json doc;
  doc["algebra"] = detail::algebra_to_json(f.algebra);
  json els = json::object();
  for (const auto& [name, x] : f.elements) {
    els[name] = std::vector<double>(x.coords().data(), x.coords().data() + x.dim());
  }
  json ops = json::object();
  for (const auto& [name, g] : f.operators) {
    json rows = json::array();
    for (int r = 0; r < g.dim(); ++r) {
      const Eigen::VectorXd row = g.matrix().row(r).transpose();
      rows.push_back(std::vector<double>(row.data(), row.data() + row.size()));
    }
    ops[name] = rows;
  }
  doc["elements"] = els;
  doc["operators"] = ops;
  doc["seed"] = f.seed;
  return doc.dump(2) + "\n";
}

std::string algebra_descriptor(const Algebra& a) { return detail::algebra_to_json(a).dump(); }

}  // namespace jordan
