#ifndef TSPEC_SUITE_HPP
#define TSPEC_SUITE_HPP

#include <functional>
#include <string>
#include <string_view>
#include <vector>

#include "tspec/borel.hpp"
#include "tspec/catalog.hpp"
#include "tspec/extensions.hpp"
#include "tspec/homology.hpp"
#include "tspec/spectrum.hpp"

namespace tspec {

struct CatalogPair {
  std::string label;  ///< "entry/module"
  CatalogEntry entry;
  Representation module;
};

/// Fixed list of (catalog algebra, catalog module) pairs small enough for full (co)homology.
inline std::vector<CatalogPair> catalog_pairs() {
  static const std::vector<std::pair<std::string, std::vector<std::string>>> table{
      {"abelian:1", {"trivial", "adjoint", "char:3"}},
      {"abelian:2", {"trivial", "char:1,-2"}},
      {"abelian:3", {"trivial"}},
      {"heisenberg3", {"trivial", "adjoint", "jordan2", "standard3", "char:1,0,0"}},
      {"solvable3:5/3", {"trivial", "adjoint", "char:1,0,0"}},
      {"solvable3:2", {"trivial"}},
      {"solvable3:-1", {"trivial"}},
      {"solvable3:0", {"trivial"}},
      {"sl2", {"trivial", "adjoint", "V1", "V2", "V3"}},
      {"borel_sl2", {"trivial", "adjoint", "V1", "V2", "sl2_adjoint"}},
      {"sl3", {"trivial"}},
      {"borel_sl3", {"trivial", "adjoint", "sl3_adjoint"}},
      {"a1xa1", {"trivial", "V1x0", "V1x1"}},
      {"borel_a1xa1", {"trivial", "V1x0", "V1x1"}},
  };
  std::vector<CatalogPair> out;
  for (const auto& [ref, modules] : table) {
    const CatalogEntry e = catalog_lookup(ref);
    for (const auto& m : modules) out.push_back({ref + "/" + m, e, e.module(m)});
  }
  return out;
}

struct CheckResult {
  std::string suite;
  std::string name;
  bool ok = false;
  std::string detail;
};

namespace detail {

inline std::string render(const std::vector<Character>& cs) {
  std::string s = "{";
  for (std::size_t i = 0; i < cs.size(); ++i) s += (i ? ", " : "") + to_string(cs[i]);
  return s + "}";
}

inline std::string render(const std::vector<RatVector>& vs) {
  std::string s = "{";
  for (std::size_t i = 0; i < vs.size(); ++i) s += (i ? ", " : "") + to_string(vs[i]);
  return s + "}";
}

inline std::string render(const std::vector<std::size_t>& xs) {
  std::string s = "[";
  for (std::size_t i = 0; i < xs.size(); ++i) s += (i ? "," : "") + std::to_string(xs[i]);
  return s + "]";
}

/// Runs `body`, turning exceptions into failures.
inline void record(std::vector<CheckResult>& out, const std::string& suite, const std::string& name,
                   const std::function<bool(std::string&)>& body) {
  CheckResult r{suite, name, false, ""};
  try {
    r.ok = body(r.detail);
  } catch (const std::exception& e) {
    r.ok = false;
    r.detail = std::string("exception: ") + e.what();
  }
  out.push_back(std::move(r));
}

inline void duality_suite(std::vector<CheckResult>& out) {
  for (const auto& p : catalog_pairs()) {
    record(out, "duality", "poincare " + p.label, [&](std::string& d) {
      const PoincareReport r = check_poincare(p.module);
      d = "H^* " + render(r.cohomology.values) + " vs H_{n-*} " + render(r.twisted_homology.values);
      return r.ok;
    });
    record(out, "duality", "dual-betti " + p.label, [&](std::string& d) {
      const BettiTable co = betti_cohomology(dual(p.module));
      const BettiTable ho = betti_homology(p.module);
      d = render(co.values) + " vs " + render(ho.values);
      return co == ho;
    });
  }
}

inline std::vector<NamedModule> sl2_candidates(unsigned up_to) {
  std::vector<NamedModule> out;
  for (unsigned m = 0; m <= up_to; ++m) out.push_back({"V" + std::to_string(m), sl2_irrep(m)});
  return out;
}

inline void spectra_suite(std::vector<CheckResult>& out) {
  for (const auto& p : catalog_pairs()) {
    const LieAlgebra& g = *p.entry.algebra;
    if (is_nilpotent(g)) {
      record(out, "spectra", "nilpotent both-methods " + p.label, [&](std::string& d) {
        const SpectrumReport r = spectrum_nilpotent(p.module, Method::Both);
        const auto hom = spectrum_solvable(p.module).characters();
        d = render(r.characters()) + " vs homology " + render(hom);
        return r.disagreements.empty() && r.characters() == hom;
      });
    } else if (is_solvable(g)) {
      record(out, "spectra", "dual spectrum " + p.label, [&](std::string& d) {
        for (const auto& c : solvable_candidates(p.module))
          if (!check_dual_spectrum(p.module, Representation::character(p.entry.algebra, c)).ok) {
            d = "mismatch at " + to_string(c);
            return false;
          }
        return true;
      });
    }
  }
  for (unsigned a = 0; a <= 4; ++a)
    for (unsigned b = a + 1; b <= 4; ++b)
      record(out, "spectra", "sl2 V" + std::to_string(a) + "+V" + std::to_string(b), [&](std::string& d) {
        const SpectrumReport r =
            spectrum_semisimple(direct_sum(sl2_irrep(a), sl2_irrep(b)), sl2_candidates(5), Method::Both);
        std::vector<std::string> want{"V" + std::to_string(a), "V" + std::to_string(b)};
        d = std::to_string(r.elements.size()) + " members, " + std::to_string(r.disagreements.size()) +
            " disagreements";
        return r.labels() == want && r.disagreements.empty();
      });
  for (const char* lam : {"5/3", "2", "-1", "0"})
    record(out, "spectra", std::string("solvable3:") + lam + " trivial", [&](std::string& d) {
      const CatalogEntry e = catalog_lookup(std::string("solvable3:") + lam);
      const Rational l = parse_rational(lam);
      std::set<RatVector, LexLess> want;
      for (const Rational& x : {Rational(0), Rational(1), l, Rational(l + 1)}) want.insert({x, 0, 0});
      std::vector<Character> expected;
      for (const auto& w : want) expected.emplace_back(*e.algebra, w);
      const auto got = spectrum_solvable(e.module("trivial")).characters();
      d = render(got);
      return got == expected;
    });
  for (const char* ref : {"abelian:2", "heisenberg3", "solvable3:5/3", "solvable3:0", "borel_sl2", "borel_sl3",
                          "borel_a1xa1"})
    record(out, "spectra", std::string("2rho symmetry ") + ref, [&](std::string& d) {
      const SymmetryReport r = check_two_rho_symmetry(catalog_lookup(ref).algebra);
      d = "2rho " + to_string(r.two_rho) + ", spectrum " + render(r.spectrum);
      return r.ok;
    });
  const std::vector<std::pair<std::string, std::vector<RatVector>>> borel_cases{
      {"borel_sl2", {{0}, {1}, {2}, {3}, {4}}},
      {"borel_a1xa1", {{0, 0}, {1, 0}, {0, 1}, {1, 1}}},
      {"borel_sl3", {{0, 0}, {1, 1}}}};
  for (const auto& [ref, lambdas] : borel_cases)
    for (const auto& lam : lambdas)
      record(out, "spectra", "borel formula " + ref + " " + to_string(lam), [&](std::string& d) {
        const BorelSpectrumReport r = check_borel_spectrum(catalog_lookup(ref), lam);
        d = "formula " + render(r.formula) + ", homology " + render(r.computed);
        return r.ok;
      });
}

inline void kostant_suite(std::vector<CheckResult>& out) {
  const std::vector<std::pair<std::string, std::vector<RatVector>>> cases{
      {"borel_sl2", {{0}, {1}, {2}, {3}, {4}}},
      {"borel_a1xa1", {{0, 0}, {1, 0}, {0, 1}, {1, 1}}},
      {"borel_sl3", {{0, 0}, {1, 1}}}};
  for (const auto& [ref, lambdas] : cases) {
    const CatalogEntry e = catalog_lookup(ref);
    for (const auto& lam : lambdas) {
      record(out, "kostant", "kostant " + ref + " " + to_string(lam), [&](std::string& d) {
        const KostantReport r = check_kostant(e, lam);
        for (std::size_t k = 0; k < r.computed.size(); ++k)
          d += (k ? "; " : "") + std::string("H^") + std::to_string(k) + " " + render(r.computed[k]);
        return r.ok;
      });
      record(out, "kostant", "semidirect " + ref + " " + to_string(lam), [&](std::string& d) {
        const SemidirectReport r = check_semidirect_formula(e, *e.highest_weight(lam));
        d = render(r.direct.values) + " vs " + render(r.formula);
        return r.ok;
      });
    }
    for (const auto& m : e.module_names) {
      if (m.find('<') != std::string::npos) continue;
      record(out, "kostant", "semidirect " + ref + "/" + m, [&](std::string& d) {
        const SemidirectReport r = check_semidirect_formula(e, e.module(m));
        d = render(r.direct.values) + " vs " + render(r.formula);
        return r.ok;
      });
    }
  }
  record(out, "kostant", "semidirect borel_sl2 V2 twisted by -2", [&](std::string& d) {
    const CatalogEntry e = catalog_lookup("borel_sl2");
    const Representation v = twist(e.module("V2"), e.module("char:2,0"));
    const SemidirectReport r = check_semidirect_formula(e, v);
    d = render(r.direct.values) + " vs " + render(r.formula);
    return r.ok && r.direct.nonzero();
  });
}

/// Extension fixtures used by the extensions suite and the tests.
struct ExtensionFixture {
  std::string label;
  ExtensionSpec spec;
};

inline std::vector<ExtensionFixture> extension_fixtures() {
  std::vector<ExtensionFixture> out;
  auto add = [&](std::string label, AlgebraPtr base, RatVector lambda,
                 std::map<std::pair<std::size_t, std::size_t>, Rational> xi, std::string gen) {
    ExtensionSpec spec;
    spec.lambda = Character(*base, std::move(lambda));
    spec.base = std::move(base);
    spec.cocycle = std::move(xi);
    spec.new_generator = std::move(gen);
    out.push_back({std::move(label), std::move(spec)});
  };
  auto ab1 = catalog_lookup("abelian:1").algebra;
  auto ab2 = catalog_lookup("abelian:2").algebra;
  add("heisenberg3 from abelian:2", ab2, {0, 0}, {{{0, 1}, Rational(1)}}, "z");
  add("abelian:2 plus center", ab2, {0, 0}, {}, "c");
  add("[e,c]=c from abelian:1", ab1, {1}, {}, "c");
  add("[e,c]=-2c from abelian:1", ab1, {-2}, {}, "c");
  add("abelian:2 with lambda=(1,0)", ab2, {1, 0}, {}, "c");
  // solvable3(λ) over the 2-dim algebra [e1,e2]=e2 with λ(e1) = 5/3
  LieAlgebra::BracketTable t;
  t[{0, 1}] = {0, 1};
  auto r2 = std::make_shared<const LieAlgebra>(std::vector<std::string>{"e1", "e2"}, t);
  add("solvable3:5/3 from [e1,e2]=e2", r2, {Rational(5, 3), 0}, {}, "e3");
  add("central over [e1,e2]=e2", r2, {0, 0}, {}, "c");
  add("central over heisenberg3", catalog_lookup("heisenberg3").algebra, {0, 0, 0}, {{{0, 2}, Rational(1)}}, "w");
  return out;
}

/// Modules over the base of an extension fixture: trivial, adjoint, and one character.
inline std::vector<std::pair<std::string, Representation>> extension_modules(const AlgebraPtr& base) {
  std::vector<std::pair<std::string, Representation>> out;
  out.emplace_back("trivial", Representation::trivial(base));
  out.emplace_back("adjoint", adjoint_rep(base));
  RatVector c(base->dim());
  const Subspace chars = character_space(*base);
  if (chars.dim() > 0) {
    c = chars.vector(0);
    out.emplace_back("char" + to_string(c), Representation::character(base, Character(*base, c)));
  }
  return out;
}

inline void extensions_suite(std::vector<CheckResult>& out) {
  for (const auto& f : extension_fixtures())
    for (const auto& [mname, v] : extension_modules(f.spec.base))
      record(out, "extensions", f.label + " / " + mname, [&](std::string& d) {
        const ExtensionSpectrumReport r = check_extension_spectrum(f.spec, v);
        d = "base " + render(r.base_spectrum) + ", extension " + render(r.extension_spectrum);
        return r.ok;
      });
  record(out, "extensions", "heisenberg3 extension equals catalog heisenberg3", [&](std::string& d) {
    const Extension e = build_extension(extension_fixtures()[0].spec);
    d = "dim " + std::to_string(e.algebra->dim());
    return *e.algebra == *catalog_lookup("heisenberg3").algebra;
  });
  record(out, "extensions", "solvable3 extension spectrum", [&](std::string& d) {
    const Extension e = build_extension(extension_fixtures()[5].spec);
    const auto got = spectrum_solvable(Representation::trivial(e.algebra)).characters();
    d = render(got);
    std::vector<Character> want;
    for (const Rational& x : {Rational(0), Rational(1), Rational(5, 3), Rational(8, 3)})
      want.emplace_back(*e.algebra, RatVector{x, 0, 0});
    return got == want;
  });
  for (const auto& f : extension_fixtures())
    record(out, "extensions", "cohomologous cocycle " + f.label, [&](std::string& d) {
      RatVector phi(f.spec.base->dim());
      for (std::size_t i = 0; i < phi.size(); ++i) phi[i] = Rational(static_cast<long>(i) + 1) / 2;
      const Extension a = build_extension(f.spec);
      const Extension b = build_extension(add_coboundary(f.spec, phi));
      const auto ta = Representation::trivial(a.algebra);
      const auto tb = Representation::trivial(b.algebra);
      const bool betti = betti_homology(ta) == betti_homology(tb) &&
                         betti_homology(adjoint_rep(a.algebra)) == betti_homology(adjoint_rep(b.algebra));
      const bool spec = spectrum_solvable(ta).characters() == spectrum_solvable(tb).characters();
      d = betti ? (spec ? "Betti tables and spectra agree" : "spectra differ") : "Betti tables differ";
      return betti && spec;
    });
}

}  // namespace detail

inline std::vector<std::string> suite_names() { return {"all", "duality", "spectra", "kostant", "extensions"}; }

inline std::vector<CheckResult> run_suite(std::string_view name) {
  std::vector<CheckResult> out;
  const bool all = name == "all";
  if (!all && name != "duality" && name != "spectra" && name != "kostant" && name != "extensions")
    throw Error(Errc::UnknownName, "unknown suite '" + std::string(name) + "'");
  if (all || name == "duality") detail::duality_suite(out);
  if (all || name == "spectra") detail::spectra_suite(out);
  if (all || name == "kostant") detail::kostant_suite(out);
  if (all || name == "extensions") detail::extensions_suite(out);
  return out;
}

}  // namespace tspec

#endif  // TSPEC_SUITE_HPP
