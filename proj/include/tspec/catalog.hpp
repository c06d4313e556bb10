#ifndef TSPEC_CATALOG_HPP
#define TSPEC_CATALOG_HPP

#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "tspec/adjoint.hpp"
#include "tspec/roots.hpp"

namespace tspec {

/// (m+1)-dimensional simple sl2-module on the basis sl2 = (h, e, f):
/// h v_i = (m - 2i) v_i, e v_i = i(m - i + 1) v_{i-1}, f v_i = v_{i+1}.
inline std::vector<RatMatrix> sl2_irrep_matrices(unsigned m) {
  const std::size_t n = m + 1;
  RatMatrix h(n, n), e(n, n), f(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    h(i, i) = static_cast<long>(m) - 2 * static_cast<long>(i);
    if (i > 0) e(i - 1, i) = static_cast<long>(i * (m - i + 1));
    if (i + 1 < n) f(i + 1, i) = 1;
  }
  return {h, e, f};
}

inline AlgebraPtr sl2_algebra() {
  static const AlgebraPtr g = std::make_shared<const LieAlgebra>(LieAlgebra::from_matrices(
      {"h", "e", "f"}, {RatMatrix{{1, 0}, {0, -1}}, RatMatrix{{0, 1}, {0, 0}}, RatMatrix{{0, 0}, {1, 0}}}));
  return g;
}

inline Representation sl2_irrep(unsigned m) { return Representation(sl2_algebra(), sl2_irrep_matrices(m)); }

namespace detail {

inline RatMatrix unit(std::size_t n, std::size_t r, std::size_t c) {
  RatMatrix m(n, n);
  m(r, c) = 1;
  return m;
}

inline AlgebraPtr sl3_algebra() {
  static const AlgebraPtr g = [] {
    auto E = [](std::size_t r, std::size_t c) { return unit(3, r, c); };
    return std::make_shared<const LieAlgebra>(LieAlgebra::from_matrices(
        {"h1", "h2", "e1", "e2", "e3", "f1", "f2", "f3"},
        {E(0, 0) - E(1, 1), E(1, 1) - E(2, 2), E(0, 1), E(1, 2), E(0, 2), E(1, 0), E(2, 1), E(2, 0)}));
  }();
  return g;
}

/// sl2 ⊕ sl2 on the basis (h1, h2, e1, e2, f1, f2).
inline AlgebraPtr a1xa1_algebra() {
  static const AlgebraPtr g = [] {
    const auto s = sl2_irrep_matrices(1);
    const RatMatrix z(2, 2);
    auto first = [&](const RatMatrix& m) { return block_diagonal(m, z); };
    auto second = [&](const RatMatrix& m) { return block_diagonal(z, m); };
    return std::make_shared<const LieAlgebra>(
        LieAlgebra::from_matrices({"h1", "h2", "e1", "e2", "f1", "f2"},
                                  {first(s[0]), second(s[0]), first(s[1]), second(s[1]), first(s[2]),
                                   second(s[2])}));
  }();
  return g;
}

inline Subspace leading_span(std::size_t ambient, std::size_t count) {
  std::vector<RatVector> vecs;
  for (std::size_t i = 0; i < count; ++i) vecs.push_back(LieAlgebra::basis_vector(ambient, i));
  return Subspace::span(ambient, vecs);
}

inline std::vector<std::string> leading_names(const LieAlgebra& g, std::size_t count) {
  return {g.basis_names().begin(), g.basis_names().begin() + static_cast<std::ptrdiff_t>(count)};
}

inline std::optional<unsigned> parse_index(std::string_view s) {
  if (s.empty() || s.size() > 3) return std::nullopt;
  unsigned v = 0;
  for (char ch : s) {
    if (ch < '0' || ch > '9') return std::nullopt;
    v = v * 10 + static_cast<unsigned>(ch - '0');
  }
  return v;
}

}  // namespace detail

/// A built-in algebra with its metadata and named module constructors.
struct CatalogEntry {
  std::string name;
  std::vector<Rational> params;
  AlgebraPtr algebra;
  std::optional<Subspace> cartan;          ///< in the algebra's coordinates
  std::optional<RootSystem> root_system;   ///< coordinates: values on the Cartan basis
  std::optional<std::string> parent;       ///< semisimple algebra this Borel sits in
  std::optional<Subspace> embedding;       ///< the Borel as a subspace of the parent
  std::vector<std::string> module_names;   ///< fixed module names (patterns documented in help)
  std::function<std::optional<Representation>(std::string_view)> module_factory;
  /// Simple module of the given highest weight (restricted, for Borel entries), if shipped.
  std::function<std::optional<Representation>(const RatVector&)> highest_weight;

  [[nodiscard]] std::string full_name() const {
    std::string s = name;
    for (const auto& p : params) s += ":" + to_string(p);
    return s;
  }

  /// Named module: a fixed name, a pattern such as "V3" for sl2, or "char:a,b,…" for a character.
  [[nodiscard]] Representation module(std::string_view id) const {
    if (id.rfind("char:", 0) == 0) {
      RatVector values;
      std::string_view rest = id.substr(5);
      while (true) {
        const auto comma = rest.find(',');
        values.push_back(parse_rational(rest.substr(0, comma)));
        if (comma == std::string_view::npos) break;
        rest.remove_prefix(comma + 1);
      }
      return Representation::character(algebra, Character(*algebra, values));
    }
    if (auto m = module_factory(id)) return *m;
    throw Error(Errc::UnknownName, "no module '" + std::string(id) + "' in catalog entry " + full_name());
  }

  /// Values of a character on the Cartan basis (the root-system coordinates).
  [[nodiscard]] RatVector cartan_coordinates(const Character& c) const {
    if (!cartan) throw Error(Errc::Unsupported, full_name() + " has no Cartan metadata");
    RatVector out(cartan->dim());
    for (std::size_t k = 0; k < cartan->dim(); ++k) out[k] = c(cartan->vector(k));
    return out;
  }
};

namespace detail {

inline CatalogEntry base_entry(std::string name, AlgebraPtr g) {
  CatalogEntry e;
  e.name = std::move(name);
  e.algebra = std::move(g);
  e.module_names = {"trivial", "adjoint"};
  return e;
}

/// trivial/adjoint lookups on top of an entry-specific factory.
inline void set_factory(CatalogEntry& e, std::function<std::optional<Representation>(std::string_view)> extra) {
  AlgebraPtr g = e.algebra;
  e.module_factory = [g, extra = std::move(extra)](std::string_view id) -> std::optional<Representation> {
    if (id == "trivial") return Representation::trivial(g);
    if (id == "adjoint") return adjoint_rep(g);
    return extra ? extra(id) : std::nullopt;
  };
}

inline std::optional<unsigned> nonneg_int(const Rational& q) {
  if (q.get_den() != 1 || sgn(q) < 0 || q.get_num() > 64) return std::nullopt;
  return static_cast<unsigned>(q.get_num().get_ui());
}

inline CatalogEntry make_sl2() {
  CatalogEntry e = base_entry("sl2", sl2_algebra());
  e.cartan = leading_span(3, 1);
  e.root_system = RootSystem::a1();
  e.module_names.push_back("V<m>");
  set_factory(e, [](std::string_view id) -> std::optional<Representation> {
    if (id.size() > 1 && id[0] == 'V')
      if (auto m = parse_index(id.substr(1))) return sl2_irrep(*m);
    return std::nullopt;
  });
  e.highest_weight = [](const RatVector& lam) -> std::optional<Representation> {
    if (lam.size() != 1) return std::nullopt;
    if (auto m = nonneg_int(lam[0])) return sl2_irrep(*m);
    return std::nullopt;
  };
  return e;
}

inline Representation a1xa1_irrep(unsigned a, unsigned b) {
  const auto x = sl2_irrep_matrices(a);
  const auto y = sl2_irrep_matrices(b);
  const RatMatrix ix = RatMatrix::identity(a + 1), iy = RatMatrix::identity(b + 1);
  // basis order (h1, h2, e1, e2, f1, f2)
  std::vector<RatMatrix> act{kronecker(x[0], iy), kronecker(ix, y[0]), kronecker(x[1], iy),
                             kronecker(ix, y[1]), kronecker(x[2], iy), kronecker(ix, y[2])};
  return Representation(a1xa1_algebra(), std::move(act));
}

inline CatalogEntry make_a1xa1() {
  CatalogEntry e = base_entry("a1xa1", a1xa1_algebra());
  e.cartan = leading_span(6, 2);
  e.root_system = RootSystem::a1xa1();
  e.module_names.push_back("V<a>x<b>");
  set_factory(e, [](std::string_view id) -> std::optional<Representation> {
    const auto x = id.find('x');
    if (id.size() > 3 && id[0] == 'V' && x != std::string_view::npos) {
      auto a = parse_index(id.substr(1, x - 1));
      auto b = parse_index(id.substr(x + 1));
      if (a && b) return a1xa1_irrep(*a, *b);
    }
    return std::nullopt;
  });
  e.highest_weight = [](const RatVector& lam) -> std::optional<Representation> {
    if (lam.size() != 2) return std::nullopt;
    auto a = nonneg_int(lam[0]);
    auto b = nonneg_int(lam[1]);
    if (a && b) return a1xa1_irrep(*a, *b);
    return std::nullopt;
  };
  return e;
}

inline CatalogEntry make_sl3() {
  CatalogEntry e = base_entry("sl3", sl3_algebra());
  e.cartan = leading_span(8, 2);
  e.root_system = RootSystem::a2();
  set_factory(e, nullptr);
  e.highest_weight = [](const RatVector& lam) -> std::optional<Representation> {
    if (lam == RatVector{0, 0}) return Representation::trivial(sl3_algebra());
    if (lam == RatVector{1, 1}) return adjoint_rep(sl3_algebra());
    return std::nullopt;
  };
  return e;
}

/// Borel subalgebra spanned by the first `dim` basis vectors of a semisimple entry
/// (Cartan first, then positive root vectors). Module names resolve against the parent and
/// are restricted; "adjoint"/"trivial" refer to the Borel itself; "<parent>_adjoint" restricts.
inline CatalogEntry make_borel(const CatalogEntry& parent, std::size_t dim) {
  const Subspace emb = leading_span(parent.algebra->dim(), dim);
  auto g = std::make_shared<const LieAlgebra>(subalgebra(*parent.algebra, emb, leading_names(*parent.algebra, dim)));
  CatalogEntry e = base_entry("borel_" + parent.name, g);
  const std::size_t r = parent.cartan->dim();
  e.cartan = leading_span(dim, r);
  e.root_system = parent.root_system;
  e.parent = parent.name;
  e.embedding = emb;
  const std::string parent_adjoint = parent.name + "_adjoint";
  e.module_names.push_back(parent_adjoint);
  for (std::size_t i = 2; i < parent.module_names.size(); ++i) e.module_names.push_back(parent.module_names[i]);
  set_factory(e, [parent, emb, g, parent_adjoint](std::string_view id) -> std::optional<Representation> {
    if (id == parent_adjoint) return restrict(parent.module("adjoint"), emb, g);
    if (auto m = parent.module_factory(id); m && id != "trivial" && id != "adjoint") return restrict(*m, emb, g);
    return std::nullopt;
  });
  e.highest_weight = [parent, emb, g](const RatVector& lam) -> std::optional<Representation> {
    if (auto m = parent.highest_weight(lam)) return restrict(*m, emb, g);
    return std::nullopt;
  };
  return e;
}

}  // namespace detail

inline std::vector<std::string> catalog_names() {
  return {"abelian(n)", "heisenberg3", "solvable3(lambda)", "sl2", "borel_sl2",
          "sl3",        "borel_sl3",   "a1xa1",             "borel_a1xa1"};
}

/// Built-in entry by name; `abelian` takes n, `solvable3` takes λ.
inline CatalogEntry catalog_get(std::string_view name, const std::vector<Rational>& params = {}) {
  auto no_params = [&] {
    if (!params.empty()) throw Error(Errc::BadParams, std::string(name) + " takes no parameters");
  };
  if (name == "abelian") {
    if (params.size() != 1 || params[0].get_den() != 1 || sgn(params[0]) <= 0 || params[0] > 12)
      throw Error(Errc::BadParams, "abelian takes one integer 1 <= n <= 12");
    const auto n = static_cast<std::size_t>(params[0].get_num().get_ui());
    CatalogEntry e = detail::base_entry("abelian", std::make_shared<const LieAlgebra>(LieAlgebra::abelian(n)));
    e.params = params;
    detail::set_factory(e, nullptr);
    return e;
  }
  if (name == "heisenberg3") {
    no_params();
    auto g = std::make_shared<const LieAlgebra>(LieAlgebra::from_matrices(
        {"x", "y", "z"}, {detail::unit(3, 0, 1), detail::unit(3, 1, 2), detail::unit(3, 0, 2)}));
    CatalogEntry e = detail::base_entry("heisenberg3", g);
    e.module_names.insert(e.module_names.end(), {"jordan2", "standard3"});
    detail::set_factory(e, [g](std::string_view id) -> std::optional<Representation> {
      if (id == "jordan2")
        return Representation(g, {RatMatrix{{0, 1}, {0, 0}}, RatMatrix(2, 2), RatMatrix(2, 2)});
      if (id == "standard3")
        return Representation(g, {detail::unit(3, 0, 1), detail::unit(3, 1, 2), detail::unit(3, 0, 2)});
      return std::nullopt;
    });
    return e;
  }
  if (name == "solvable3") {
    if (params.size() != 1) throw Error(Errc::BadParams, "solvable3 takes one rational parameter lambda");
    LieAlgebra::BracketTable t;
    t[{0, 1}] = {0, 1, 0};
    t[{0, 2}] = {0, 0, params[0]};
    CatalogEntry e = detail::base_entry("solvable3", std::make_shared<const LieAlgebra>(
                                                         LieAlgebra({"e1", "e2", "e3"}, t)));
    e.params = params;
    detail::set_factory(e, nullptr);
    return e;
  }
  if (name == "sl2") {
    no_params();
    return detail::make_sl2();
  }
  if (name == "borel_sl2") {
    no_params();
    return detail::make_borel(detail::make_sl2(), 2);
  }
  if (name == "sl3") {
    no_params();
    return detail::make_sl3();
  }
  if (name == "borel_sl3") {
    no_params();
    return detail::make_borel(detail::make_sl3(), 5);
  }
  if (name == "a1xa1") {
    no_params();
    return detail::make_a1xa1();
  }
  if (name == "borel_a1xa1") {
    no_params();
    return detail::make_borel(detail::make_a1xa1(), 4);
  }
  throw Error(Errc::UnknownName, "unknown catalog entry '" + std::string(name) + "'");
}

/// Parses "name" or "name:p1:p2" (e.g. "solvable3:5/3").
inline CatalogEntry catalog_lookup(std::string_view ref) {
  std::vector<Rational> params;
  const auto colon = ref.find(':');
  const std::string_view name = ref.substr(0, colon);
  if (colon != std::string_view::npos) {
    std::string_view rest = ref.substr(colon + 1);
    while (true) {
      const auto c = rest.find(':');
      params.push_back(parse_rational(rest.substr(0, c)));
      if (c == std::string_view::npos) break;
      rest.remove_prefix(c + 1);
    }
  }
  return catalog_get(name, params);
}

}  // namespace tspec

#endif  // TSPEC_CATALOG_HPP
