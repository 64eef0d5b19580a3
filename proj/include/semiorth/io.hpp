#pragma once

// JSON documents (algebras, modules, bimodules) and verification reports.
//
// Algebra document:
//   {"name": "...", "field": {"type": "Q"} | {"type": "Fp", "p": 5},
//    "presentation": {"kind": "quiver", "vertices": [...], "arrows": [{"name","from","to"}],
//                     "relations": [[{"coeff": "1/2", "path": ["a","b"]}, ...], ...]}
//                  | {"kind": "structure_constants", "dim": n, "unit": [...], "table": t}}
// t[i][j] is the coefficient vector of b_i b_j. Paths are read left to right.
//
// Module document (right module over a given algebra):
//   {"dim": d, "action": [M_0, ..., M_{n-1}]}, M_i = d x d, row vector m maps to m M_i.
// Bimodule document ({}_B S_A):
//   {"dim": d, "left_action": [one matrix per basis element of B], "right_action": [... of A]}
// Scalars are strings ("3", "-1/2").

#include <cstdint>
#include <cstdio>
#include <fstream>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "semiorth/gluing.hpp"
#include "semiorth/quiver.hpp"

namespace semiorth {

using Json = nlohmann::ordered_json;

class ParseError : public std::runtime_error {
 public:
  ParseError(std::string where, const std::string& what)
      : std::runtime_error(where + ": " + what), where_(std::move(where)) {}
  const std::string& where() const { return where_; }

 private:
  std::string where_;
};

class ValidationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

inline std::uint64_t fnv1a(std::string_view data, std::uint64_t h = 0xcbf29ce484222325ull) {
  for (unsigned char c : data) {
    h ^= c;
    h *= 0x100000001b3ull;
  }
  return h;
}

inline std::string hex64(std::uint64_t x) {
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(x));
  return buf;
}

inline std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError(path, "cannot open file");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

inline Json parse_json_text(const std::string& text, const std::string& where) {
  try {
    return Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw ParseError(where + " (byte " + std::to_string(e.byte) + ")", "malformed JSON");
  }
}

namespace detail {

inline const Json& need(const Json& j, const char* key, const std::string& where) {
  if (!j.is_object() || !j.contains(key)) throw ParseError(where, std::string("missing key '") + key + "'");
  return j.at(key);
}

inline std::string need_string(const Json& j, const std::string& where) {
  if (!j.is_string()) throw ParseError(where, "expected a string");
  return j.get<std::string>();
}

inline std::size_t need_size(const Json& j, const std::string& where) {
  if (!j.is_number_unsigned() && !(j.is_number_integer() && j.get<long long>() >= 0))
    throw ParseError(where, "expected a non-negative integer");
  return j.get<std::size_t>();
}

inline const Json& need_array(const Json& j, const std::string& where) {
  if (!j.is_array()) throw ParseError(where, "expected an array");
  return j;
}

}  // namespace detail

inline Field parse_field(const Json& j, const std::string& where = "field") {
  auto type = detail::need_string(detail::need(j, "type", where), where + ".type");
  if (type == "Q") return Field::rationals();
  if (type == "Fp") {
    auto p = detail::need_size(detail::need(j, "p", where), where + ".p");
    try {
      return Field::prime(static_cast<std::uint32_t>(p));
    } catch (const std::invalid_argument& e) {
      throw ParseError(where + ".p", e.what());
    }
  }
  throw ParseError(where + ".type", "unknown field type '" + type + "'");
}

inline Json field_to_json(const Field& f) {
  if (f.is_finite()) return Json{{"type", "Fp"}, {"p", f.p}};
  return Json{{"type", "Q"}};
}

template <class K>
K parse_scalar(const Field& f, const Json& j, const std::string& where) {
  std::string s;
  if (j.is_string()) s = j.get<std::string>();
  else if (j.is_number_integer()) s = std::to_string(j.get<long long>());
  else throw ParseError(where, "expected a scalar string");
  try {
    return f.parse<K>(s);
  } catch (const std::invalid_argument& e) {
    throw ParseError(where, e.what());
  }
}

template <class K>
Vec<K> parse_vector(const Field& f, const Json& j, std::size_t n, const std::string& where) {
  detail::need_array(j, where);
  if (j.size() != n) throw ParseError(where, "expected " + std::to_string(n) + " entries, got " + std::to_string(j.size()));
  Vec<K> v(n);
  for (std::size_t i = 0; i < n; ++i) v[i] = parse_scalar<K>(f, j[i], where + "[" + std::to_string(i) + "]");
  return v;
}

template <class K>
Matrix<K> parse_matrix(const Field& f, const Json& j, std::size_t rows, std::size_t cols, const std::string& where) {
  detail::need_array(j, where);
  if (j.size() != rows) throw ParseError(where, "expected " + std::to_string(rows) + " rows");
  Matrix<K> m(rows, cols);
  for (std::size_t r = 0; r < rows; ++r) m.set_row(r, parse_vector<K>(f, j[r], cols, where + "[" + std::to_string(r) + "]"));
  return m;
}

template <class K>
std::vector<Matrix<K>> parse_action(const Field& f, const Json& j, std::size_t count, std::size_t dim,
                                    const std::string& where) {
  detail::need_array(j, where);
  if (j.size() != count)
    throw ParseError(where, "expected " + std::to_string(count) + " action matrices, got " + std::to_string(j.size()));
  std::vector<Matrix<K>> out;
  for (std::size_t i = 0; i < count; ++i)
    out.push_back(parse_matrix<K>(f, j[i], dim, dim, where + "[" + std::to_string(i) + "]"));
  return out;
}

template <class K>
Json scalar_to_json(const K& x) {
  return to_string(x);
}

template <class K>
Json vector_to_json(const Vec<K>& v) {
  Json a = Json::array();
  for (const auto& x : v) a.push_back(to_string(x));
  return a;
}

template <class K>
Json matrix_to_json(const Matrix<K>& m) {
  Json a = Json::array();
  for (std::size_t r = 0; r < m.rows(); ++r) a.push_back(vector_to_json(m.row(r)));
  return a;
}

inline Json int_matrix_to_json(const IntMatrix& m) {
  Json a = Json::array();
  for (const auto& row : m) a.push_back(row);
  return a;
}

template <class K>
QuiverPresentation<K> parse_quiver(const Field& f, const Json& p, const std::string& where) {
  QuiverPresentation<K> q;
  const auto& vs = detail::need_array(detail::need(p, "vertices", where), where + ".vertices");
  std::set<std::string> vset, aset;
  for (std::size_t i = 0; i < vs.size(); ++i) {
    q.vertices.push_back(detail::need_string(vs[i], where + ".vertices[" + std::to_string(i) + "]"));
    if (!vset.insert(q.vertices.back()).second) throw ParseError(where + ".vertices", "duplicate vertex '" + q.vertices.back() + "'");
  }
  if (p.contains("arrows")) {
    const auto& as = detail::need_array(p.at("arrows"), where + ".arrows");
    for (std::size_t i = 0; i < as.size(); ++i) {
      std::string w = where + ".arrows[" + std::to_string(i) + "]";
      Arrow a{detail::need_string(detail::need(as[i], "name", w), w + ".name"),
              detail::need_string(detail::need(as[i], "from", w), w + ".from"),
              detail::need_string(detail::need(as[i], "to", w), w + ".to")};
      if (!vset.count(a.source)) throw ParseError(w + ".from", "unknown vertex '" + a.source + "'");
      if (!vset.count(a.target)) throw ParseError(w + ".to", "unknown vertex '" + a.target + "'");
      if (!aset.insert(a.name).second) throw ParseError(w + ".name", "duplicate arrow '" + a.name + "'");
      q.arrows.push_back(std::move(a));
    }
  }
  if (p.contains("relations")) {
    const auto& rs = detail::need_array(p.at("relations"), where + ".relations");
    for (std::size_t r = 0; r < rs.size(); ++r) {
      std::string w = where + ".relations[" + std::to_string(r) + "]";
      std::vector<PathTerm<K>> rel;
      const auto& terms = detail::need_array(rs[r], w);
      for (std::size_t t = 0; t < terms.size(); ++t) {
        std::string tw = w + "[" + std::to_string(t) + "]";
        PathTerm<K> term{parse_scalar<K>(f, detail::need(terms[t], "coeff", tw), tw + ".coeff"), {}};
        const auto& path = detail::need_array(detail::need(terms[t], "path", tw), tw + ".path");
        for (std::size_t k = 0; k < path.size(); ++k) {
          auto name = detail::need_string(path[k], tw + ".path[" + std::to_string(k) + "]");
          if (!aset.count(name)) throw ParseError(tw + ".path[" + std::to_string(k) + "]", "unknown arrow '" + name + "'");
          term.path.push_back(std::move(name));
        }
        rel.push_back(std::move(term));
      }
      q.relations.push_back(std::move(rel));
    }
  }
  return q;
}

/// Parsed but not yet built: the field decides the scalar type.
struct AlgebraDocument {
  std::string name;
  Field field;
  Json presentation;
  std::string source;  // file name or "<text>"
};

inline AlgebraDocument parse_algebra_document(const std::string& text, const std::string& source = "<text>") {
  Json j = parse_json_text(text, source);
  AlgebraDocument d;
  d.source = source;
  d.field = parse_field(detail::need(j, "field", source), source + ".field");
  d.presentation = detail::need(j, "presentation", source);
  if (j.contains("name")) d.name = detail::need_string(j.at("name"), source + ".name");
  return d;
}

template <class K>
Algebra<K> build_algebra(const AlgebraDocument& d) {
  const std::string w = d.source + ".presentation";
  auto kind = detail::need_string(detail::need(d.presentation, "kind", w), w + ".kind");
  try {
    if (kind == "quiver") {
      auto q = parse_quiver<K>(d.field, d.presentation, w);
      std::size_t max_len = kDefaultMaxPathLength;
      if (d.presentation.contains("max_path_length"))
        max_len = detail::need_size(d.presentation.at("max_path_length"), w + ".max_path_length");
      return from_quiver(d.field, q, max_len);
    }
    if (kind == "structure_constants") {
      std::size_t n = detail::need_size(detail::need(d.presentation, "dim", w), w + ".dim");
      Vec<K> unit = parse_vector<K>(d.field, detail::need(d.presentation, "unit", w), n, w + ".unit");
      const auto& t = detail::need_array(detail::need(d.presentation, "table", w), w + ".table");
      if (t.size() != n) throw ParseError(w + ".table", "expected " + std::to_string(n) + " rows");
      std::vector<std::vector<Vec<K>>> table(n);
      for (std::size_t i = 0; i < n; ++i) {
        std::string ti = w + ".table[" + std::to_string(i) + "]";
        detail::need_array(t[i], ti);
        if (t[i].size() != n) throw ParseError(ti, "expected " + std::to_string(n) + " entries");
        for (std::size_t j = 0; j < n; ++j)
          table[i].push_back(parse_vector<K>(d.field, t[i][j], n, ti + "[" + std::to_string(j) + "]"));
      }
      return Algebra<K>::from_structure_constants(d.field, table, unit);
    }
  } catch (const AlgebraError& e) {
    throw ValidationError(d.source + ": " + e.what());
  } catch (const DimensionError& e) {
    throw ValidationError(d.source + ": " + e.what());
  }
  throw ParseError(w + ".kind", "unknown presentation kind '" + kind + "'");
}

template <class K>
Algebra<K> parse_algebra(const std::string& text, const std::string& source = "<text>") {
  auto d = parse_algebra_document(text, source);
  if (d.field.is_finite() != std::is_same_v<K, ModP>)
    throw ParseError(source + ".field", "document field " + d.field.name() + " does not match the requested scalar type");
  return build_algebra<K>(d);
}

template <class K>
Json algebra_to_json(const Algebra<K>& a, const std::string& name = {}) {
  Json j;
  if (!name.empty()) j["name"] = name;
  j["field"] = field_to_json(a.field());
  Json p;
  p["kind"] = "structure_constants";
  p["dim"] = a.dim();
  p["unit"] = vector_to_json(a.unit());
  Json t = Json::array();
  for (std::size_t i = 0; i < a.dim(); ++i) {
    Json row = Json::array();
    for (std::size_t k = 0; k < a.dim(); ++k) row.push_back(vector_to_json(a.mul(a.basis(i), a.basis(k))));
    t.push_back(row);
  }
  p["table"] = t;
  j["presentation"] = p;
  return j;
}

template <class K>
RightModule<K> parse_module(const Algebra<K>& a, const std::string& text, const std::string& source = "<text>") {
  Json j = parse_json_text(text, source);
  std::size_t d = detail::need_size(detail::need(j, "dim", source), source + ".dim");
  auto act = parse_action<K>(a.field(), detail::need(j, "action", source), a.dim(), d, source + ".action");
  try {
    return RightModule<K>(a, d, std::move(act));
  } catch (const AlgebraError& e) {
    throw ValidationError(source + ": " + e.what());
  }
}

template <class K>
Json module_to_json(const RightModule<K>& m) {
  Json a = Json::array();
  for (const auto& x : m.actions()) a.push_back(matrix_to_json(x));
  return Json{{"dim", m.dim()}, {"action", a}};
}

template <class K>
Bimodule<K> parse_bimodule(const Algebra<K>& b, const Algebra<K>& a, const std::string& text,
                           const std::string& source = "<text>") {
  Json j = parse_json_text(text, source);
  Bimodule<K> s;
  s.left_algebra = b;
  s.right_algebra = a;
  s.dim = detail::need_size(detail::need(j, "dim", source), source + ".dim");
  s.left_action = parse_action<K>(b.field(), detail::need(j, "left_action", source), b.dim(), s.dim, source + ".left_action");
  s.right_action =
      parse_action<K>(a.field(), detail::need(j, "right_action", source), a.dim(), s.dim, source + ".right_action");
  try {
    s.validate();
  } catch (const AlgebraError& e) {
    throw ValidationError(source + ": " + e.what());
  }
  return s;
}

template <class K>
Json bimodule_to_json(const Bimodule<K>& s) {
  Json l = Json::array(), r = Json::array();
  for (const auto& x : s.left_action) l.push_back(matrix_to_json(x));
  for (const auto& x : s.right_action) r.push_back(matrix_to_json(x));
  return Json{{"dim", s.dim}, {"left_action", l}, {"right_action", r}};
}

// ---- reports

enum class CheckStatus { Pass, Fail, Inconclusive };

inline const char* status_name(CheckStatus s) {
  switch (s) {
    case CheckStatus::Pass: return "pass";
    case CheckStatus::Fail: return "fail";
    case CheckStatus::Inconclusive: return "inconclusive";
  }
  return "";
}

struct Check {
  std::string name;
  CheckStatus status = CheckStatus::Fail;
  std::string witness;
  std::string anchor;  // key into docs/anchors.md
};

struct Report {
  std::string command;
  std::string digest;
  Json inputs = Json::array();
  std::vector<Check> checks;
  Json tables = Json::object();

  void add(std::string name, bool ok, std::string witness, std::string anchor) {
    checks.push_back({std::move(name), ok ? CheckStatus::Pass : CheckStatus::Fail, std::move(witness), std::move(anchor)});
  }
  void add(std::string name, CheckStatus st, std::string witness, std::string anchor) {
    checks.push_back({std::move(name), st, std::move(witness), std::move(anchor)});
  }
  bool any_failed() const {
    for (const auto& c : checks)
      if (c.status == CheckStatus::Fail) return true;
    return false;
  }

  Json to_json() const {
    Json j;
    j["command"] = command;
    j["digest"] = digest;
    j["inputs"] = inputs;
    Json cs = Json::array();
    for (const auto& c : checks)
      cs.push_back(Json{{"name", c.name}, {"status", status_name(c.status)}, {"witness", c.witness}, {"anchor", c.anchor}});
    j["checks"] = cs;
    j["tables"] = tables;
    j["summary"] = any_failed() ? "fail" : "pass";
    return j;
  }

  std::string to_text() const {
    std::ostringstream o;
    o << command << "  digest " << digest << "\n";
    for (const auto& c : checks) {
      o << "  [" << status_name(c.status) << "] " << c.name << "  (" << c.anchor << ")";
      if (!c.witness.empty()) o << "  " << c.witness;
      o << "\n";
    }
    for (const auto& [k, v] : tables.items()) o << "  " << k << ": " << v.dump() << "\n";
    o << (any_failed() ? "FAIL" : "PASS") << "\n";
    return o.str();
  }
};

}  // namespace semiorth
