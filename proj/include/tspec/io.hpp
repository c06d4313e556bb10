#ifndef TSPEC_IO_HPP
#define TSPEC_IO_HPP

#include <fstream>
#include <memory>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "json.hpp"
#include "tspec/borel.hpp"
#include "tspec/catalog.hpp"
#include "tspec/extensions.hpp"
#include "tspec/spectrum.hpp"

namespace tspec::io {

using json = nlohmann::ordered_json;

inline constexpr int format_version = 1;

inline json to_json(const Rational& q) { return to_string(q); }

inline json to_json(const RatVector& v) {
  json a = json::array();
  for (const auto& q : v) a.push_back(to_string(q));
  return a;
}

inline json to_json(const RatMatrix& m) {
  json rows = json::array();
  for (std::size_t r = 0; r < m.rows(); ++r) rows.push_back(to_json(m.row(r)));
  return rows;
}

inline json to_json(const BettiTable& t) { return t.values; }

namespace detail {

[[noreturn]] inline void schema_error(const std::string& where, const std::string& what) {
  throw Error(Errc::Parse, where + ": " + what);
}

inline const json& field(const json& j, const char* key, const std::string& where) {
  if (!j.is_object()) schema_error(where, "expected an object");
  const auto it = j.find(key);
  if (it == j.end()) schema_error(where, std::string("missing field '") + key + "'");
  return *it;
}

inline void check_version(const json& j, const std::string& where) {
  const json& v = field(j, "format_version", where);
  if (!v.is_number_integer() || v.get<int>() != format_version)
    schema_error(where, "unsupported format_version (expected 1)");
}

inline std::size_t index_from(const json& j, const std::string& where) {
  if (!j.is_number_unsigned() || j.get<std::size_t>() == 0) schema_error(where, "expected a positive integer");
  return j.get<std::size_t>();
}

}  // namespace detail

/// Accepts "p/q" strings and JSON integers.
inline Rational rational_from_json(const json& j, const std::string& where) {
  if (j.is_number_integer()) return Rational(j.get<long>());
  if (!j.is_string()) detail::schema_error(where, "expected a rational string \"p/q\"");
  try {
    return parse_rational(j.get<std::string>());
  } catch (const Error& e) {
    detail::schema_error(where, e.what());
  }
}

inline RatVector vector_from_json(const json& j, const std::string& where) {
  if (!j.is_array()) detail::schema_error(where, "expected an array of rationals");
  RatVector v;
  for (std::size_t i = 0; i < j.size(); ++i)
    v.push_back(rational_from_json(j[i], where + "[" + std::to_string(i) + "]"));
  return v;
}

inline RatMatrix matrix_from_json(const json& j, std::size_t dim, const std::string& where) {
  if (!j.is_array() || j.size() != dim) detail::schema_error(where, "expected " + std::to_string(dim) + " rows");
  RatMatrix m(dim, dim);
  for (std::size_t r = 0; r < dim; ++r) {
    const RatVector row = vector_from_json(j[r], where + "[" + std::to_string(r) + "]");
    if (row.size() != dim) detail::schema_error(where, "row " + std::to_string(r) + " has the wrong length");
    for (std::size_t c = 0; c < dim; ++c) m(r, c) = row[c];
  }
  return m;
}

/// {"format_version":1,"dim":n,"basis":[…],"brackets":[{"i":1,"j":2,"coeffs":{"3":"1"}},…]}, 1-based.
inline json algebra_to_json(const LieAlgebra& g) {
  json j;
  j["format_version"] = format_version;
  j["dim"] = g.dim();
  j["basis"] = g.basis_names();
  json brackets = json::array();
  for (const auto& [key, coeffs] : g.bracket_table()) {
    json c = json::object();
    for (std::size_t k = 0; k < coeffs.size(); ++k)
      if (sgn(coeffs[k]) != 0) c[std::to_string(k + 1)] = to_string(coeffs[k]);
    brackets.push_back({{"i", key.first + 1}, {"j", key.second + 1}, {"coeffs", c}});
  }
  j["brackets"] = brackets;
  return j;
}

inline LieAlgebra algebra_from_json(const json& j, const std::string& where = "algebra") {
  detail::check_version(j, where);
  const json& dim_j = detail::field(j, "dim", where);
  if (!dim_j.is_number_unsigned() || dim_j.get<std::size_t>() == 0 || dim_j.get<std::size_t>() > 20)
    detail::schema_error(where, "dim must be an integer in 1..20");
  const auto n = dim_j.get<std::size_t>();
  std::vector<std::string> names;
  if (const auto it = j.find("basis"); it != j.end()) {
    if (!it->is_array() || it->size() != n) detail::schema_error(where, "basis must list dim names");
    for (const auto& s : *it) {
      if (!s.is_string()) detail::schema_error(where, "basis names must be strings");
      names.push_back(s.get<std::string>());
    }
  } else {
    for (std::size_t i = 0; i < n; ++i) names.push_back("e" + std::to_string(i + 1));
  }
  LieAlgebra::BracketTable table;
  const json& brackets = detail::field(j, "brackets", where);
  if (!brackets.is_array()) detail::schema_error(where, "brackets must be an array");
  for (std::size_t b = 0; b < brackets.size(); ++b) {
    const std::string w = where + ".brackets[" + std::to_string(b) + "]";
    const std::size_t i = detail::index_from(detail::field(brackets[b], "i", w), w + ".i");
    const std::size_t jj = detail::index_from(detail::field(brackets[b], "j", w), w + ".j");
    if (i > n || jj > n || i == jj) detail::schema_error(w, "indices must be distinct and within 1..dim");
    const json& coeffs = detail::field(brackets[b], "coeffs", w);
    if (!coeffs.is_object()) detail::schema_error(w, "coeffs must be an object {\"k\": \"p/q\"}");
    RatVector v(n);
    for (const auto& [k, q] : coeffs.items()) {
      std::size_t kk = 0;
      try {
        std::size_t used = 0;
        kk = std::stoul(k, &used);
        if (used != k.size()) kk = 0;
      } catch (const std::exception&) {
        kk = 0;
      }
      if (kk == 0 || kk > n) detail::schema_error(w, "coefficient index '" + k + "' out of range");
      v[kk - 1] = rational_from_json(q, w + ".coeffs." + k);
    }
    std::pair<std::size_t, std::size_t> key{i - 1, jj - 1};
    if (key.first > key.second) {
      std::swap(key.first, key.second);
      for (auto& x : v) x = -x;
    }
    if (table.count(key)) detail::schema_error(w, "duplicate bracket pair");
    table[key] = std::move(v);
  }
  return LieAlgebra(std::move(names), table);
}

/// {"format_version":1,"algebra":<ref or inline>,"dim":m,"side":"left","action":[…]}.
inline json module_to_json(const Representation& v, const json& algebra_ref) {
  json j;
  j["format_version"] = format_version;
  j["algebra"] = algebra_ref;
  j["dim"] = v.dim();
  j["side"] = std::string(side_name(v.side()));
  json act = json::array();
  for (const auto& a : v.actions()) act.push_back(to_json(a));
  j["action"] = act;
  return j;
}

inline json module_to_json(const Representation& v) { return module_to_json(v, algebra_to_json(v.algebra())); }

/// Reads a module over `g`. An "algebra" field, when present, must describe the same algebra
/// (a catalog reference or an inline algebra object).
inline Representation module_from_json(const json& j, const AlgebraPtr& g, const std::string& where = "module") {
  detail::check_version(j, where);
  if (const auto it = j.find("algebra"); it != j.end()) {
    bool same = false;
    if (it->is_string())
      same = *catalog_lookup(it->get<std::string>()).algebra == *g;
    else
      same = algebra_from_json(*it, where + ".algebra") == *g;
    if (!same) throw Error(Errc::AlgebraMismatch, where + ": module is declared over a different algebra");
  }
  const json& dim_j = detail::field(j, "dim", where);
  if (!dim_j.is_number_unsigned() || dim_j.get<std::size_t>() == 0) detail::schema_error(where, "dim must be positive");
  const auto m = dim_j.get<std::size_t>();
  Side side = Side::Left;
  if (const auto it = j.find("side"); it != j.end()) {
    if (*it == "right")
      side = Side::Right;
    else if (*it != "left")
      detail::schema_error(where, "side must be \"left\" or \"right\"");
  }
  const json& act = detail::field(j, "action", where);
  if (!act.is_array() || act.size() != g->dim())
    detail::schema_error(where, "action must hold one matrix per algebra basis element");
  std::vector<RatMatrix> mats;
  for (std::size_t i = 0; i < act.size(); ++i)
    mats.push_back(matrix_from_json(act[i], m, where + ".action[" + std::to_string(i) + "]"));
  Representation v(g, std::move(mats), side);
  const RepCheck check = check_representation(v);
  if (!check.ok) {
    const auto [a, b] = check.violations.front();
    throw Error(Errc::Parse, where + ": action violates the bracket relation for (" + g->basis_names()[a] + ", " +
                                 g->basis_names()[b] + ")");
  }
  return v;
}

inline json character_to_json(const Character& c) { return to_json(c.values()); }

inline json spectrum_to_json(const SpectrumReport& r) {
  json j;
  j["format_version"] = format_version;
  j["algebra_class"] = std::string(class_name(r.algebra_class));
  j["method"] = std::string(method_name(r.method));
  j["candidates_tested"] = r.candidates_tested;
  json elems = json::array();
  for (const auto& e : r.elements) {
    json x;
    x["label"] = e.label;
    if (e.character) x["character"] = character_to_json(*e.character);
    if (e.evidence) {
      x["evidence"] = to_json(*e.evidence);
      if (auto k = e.evidence->first_nonzero()) x["first_nonzero_degree"] = *k;
    }
    elems.push_back(x);
  }
  j["elements"] = elems;
  j["disagreements"] = r.disagreements;
  return j;
}

inline json complex_to_json(const ChainComplex& c) {
  json j;
  j["cohomological"] = c.cohomological;
  j["lengths"] = c.lengths;
  json ds = json::array();
  for (const auto& d : c.differentials) ds.push_back({{"rows", d.rows()}, {"cols", d.cols()}, {"matrix", to_json(d)}});
  j["differentials"] = ds;
  return j;
}

/// Parses a JSON file; syntax errors carry the file name and the parser's line/column.
inline json load_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(Errc::Parse, path + ": cannot open file");
  try {
    return json::parse(in);
  } catch (const json::parse_error& e) {
    throw Error(Errc::Parse, path + ": " + e.what());
  }
}

}  // namespace tspec::io

#endif  // TSPEC_IO_HPP
