#ifndef TSPEC_SPECTRUM_HPP
#define TSPEC_SPECTRUM_HPP

#include <algorithm>
#include <atomic>
#include <cstddef>
#include <optional>
#include <set>
#include <string>
#include <thread>
#include <vector>

#include "tspec/homology.hpp"

namespace tspec {

enum class AlgebraClass { Solvable, Nilpotent, Semisimple };
enum class Method { Homological, Shortcut, Both };

inline std::string_view class_name(AlgebraClass c) {
  switch (c) {
    case AlgebraClass::Solvable: return "solvable";
    case AlgebraClass::Nilpotent: return "nilpotent";
    case AlgebraClass::Semisimple: return "semisimple";
  }
  return "?";
}

inline std::string_view method_name(Method m) {
  switch (m) {
    case Method::Homological: return "homological";
    case Method::Shortcut: return "shortcut";
    case Method::Both: return "both";
  }
  return "?";
}

/// nilpotent is checked before solvable, then semisimple.
inline std::optional<AlgebraClass> classify(const LieAlgebra& g) {
  if (is_nilpotent(g)) return AlgebraClass::Nilpotent;
  if (is_solvable(g)) return AlgebraClass::Solvable;
  if (is_semisimple(g)) return AlgebraClass::Semisimple;
  return std::nullopt;
}

/// A simple module with a display label, used as a semisimple spectrum candidate.
struct NamedModule {
  std::string label;
  Representation module;
};

struct SpectrumElement {
  std::optional<Character> character;  ///< set for solvable algebras
  std::string label;                   ///< character rendering or module label
  std::optional<BettiTable> evidence;  ///< H_*(g, V_{-S}); absent for shortcut-only runs
};

struct SpectrumReport {
  AlgebraClass algebra_class = AlgebraClass::Solvable;
  Method method = Method::Homological;
  std::vector<SpectrumElement> elements;
  std::size_t candidates_tested = 0;
  /// Labels where the shortcut and homological memberships differ (method = both).
  std::vector<std::string> disagreements;

  [[nodiscard]] std::vector<Character> characters() const {
    std::vector<Character> out;
    for (const auto& e : elements)
      if (e.character) out.push_back(*e.character);
    return out;
  }
  [[nodiscard]] std::vector<std::string> labels() const {
    std::vector<std::string> out;
    for (const auto& e : elements) out.push_back(e.label);
    return out;
  }
};

struct Membership {
  bool member = false;
  BettiTable evidence;
};

/// S ∈ σ(V) iff H_k(g, V_{-S}) ≠ 0 for some k.
inline Membership in_spectrum(const Representation& v, const Representation& s) {
  require_same_algebra(v, s);
  Membership m;
  m.evidence = betti_homology(twist(v, s));
  m.member = m.evidence.nonzero();
  return m;
}

inline Membership in_spectrum(const Representation& v, const Character& lambda) {
  return in_spectrum(v, Representation::character(v.algebra_ptr(), lambda));
}

namespace detail {

/// Runs `task(i)` for i in [0, count) on up to `jobs` threads.
template <typename Task>
void parallel_for(std::size_t count, unsigned jobs, Task task) {
  if (jobs <= 1 || count < 2) {
    for (std::size_t i = 0; i < count; ++i) task(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::vector<std::thread> pool;
  const unsigned workers = std::min<std::size_t>(jobs, count);
  for (unsigned w = 0; w < workers; ++w)
    pool.emplace_back([&] {
      for (std::size_t i = next++; i < count; i = next++) task(i);
    });
  for (auto& t : pool) t.join();
}

}  // namespace detail

/// The finite candidate set weights(V) + {sums over subsets of the Jordan-Hölder multiset}.
inline std::vector<Character> solvable_candidates(const Representation& v) {
  const LieAlgebra& g = v.algebra();
  std::set<RatVector, LexLess> sums{RatVector(g.dim())};
  for (const auto& alpha : jordan_holder_values(v.algebra_ptr())) {
    std::vector<RatVector> added;
    for (const auto& s : sums) {
      RatVector t = s;
      for (std::size_t i = 0; i < t.size(); ++i) t[i] += alpha[i];
      added.push_back(std::move(t));
    }
    sums.insert(added.begin(), added.end());
  }
  std::set<RatVector, LexLess> cands;
  for (const auto& [mu, mult] : weights(v).entries)
    for (const auto& s : sums) {
      RatVector t = mu.values();
      for (std::size_t i = 0; i < t.size(); ++i) t[i] += s[i];
      cands.insert(std::move(t));
    }
  std::vector<Character> out;
  for (const auto& c : cands) out.emplace_back(g, c);
  return out;
}

inline SpectrumReport spectrum_solvable(const Representation& v, unsigned jobs = 1) {
  const LieAlgebra& g = v.algebra();
  if (!is_solvable(g)) throw Error(Errc::NotSolvable, "spectrum_solvable needs a solvable algebra");
  SpectrumReport report;
  report.algebra_class = is_nilpotent(g) ? AlgebraClass::Nilpotent : AlgebraClass::Solvable;
  report.method = Method::Homological;
  const std::vector<Character> cands = solvable_candidates(v);
  std::vector<Membership> results(cands.size());
  detail::parallel_for(cands.size(), jobs, [&](std::size_t i) { results[i] = in_spectrum(v, cands[i]); });
  report.candidates_tested = cands.size();
  for (std::size_t i = 0; i < cands.size(); ++i)
    if (results[i].member) report.elements.push_back({cands[i], to_string(cands[i]), results[i].evidence});
  return report;
}

/// σ(V) for nilpotent g: the characters of one-dimensional submodules.
inline SpectrumReport spectrum_nilpotent(const Representation& v, Method method = Method::Both) {
  const LieAlgebra& g = v.algebra();
  if (!is_nilpotent(g)) throw Error(Errc::NotNilpotent, "spectrum_nilpotent needs a nilpotent algebra");
  SpectrumReport report;
  report.algebra_class = AlgebraClass::Nilpotent;
  report.method = method;
  for (const auto& [mu, mult] : weights(v).entries) {
    ++report.candidates_tested;
    std::optional<bool> shortcut;
    std::optional<Membership> homological;
    if (method != Method::Homological) shortcut = has_one_dim_submodule_with_character(v, mu);
    if (method != Method::Shortcut) homological = in_spectrum(v, mu);
    if (shortcut && homological && *shortcut != homological->member)
      report.disagreements.push_back(to_string(mu));
    const bool member = homological ? homological->member : *shortcut;
    if (member)
      report.elements.push_back(
          {mu, to_string(mu), homological ? std::optional(homological->evidence) : std::nullopt});
  }
  return report;
}

/// σ(V) for semisimple g: candidates S with Hom_g(S, V) ≠ 0.
inline SpectrumReport spectrum_semisimple(const Representation& v, const std::vector<NamedModule>& candidates,
                                          Method method = Method::Both) {
  const LieAlgebra& g = v.algebra();
  if (!is_semisimple(g)) throw Error(Errc::NotSemisimple, "spectrum_semisimple needs a semisimple algebra");
  SpectrumReport report;
  report.algebra_class = AlgebraClass::Semisimple;
  report.method = method;
  for (const auto& cand : candidates) {
    require_same_algebra(v, cand.module);
    ++report.candidates_tested;
    std::optional<bool> shortcut;
    std::optional<Membership> homological;
    if (method != Method::Homological) shortcut = hom_dim(cand.module, v) > 0;
    if (method != Method::Shortcut) homological = in_spectrum(v, cand.module);
    if (shortcut && homological && *shortcut != homological->member) report.disagreements.push_back(cand.label);
    const bool member = homological ? homological->member : *shortcut;
    if (member)
      report.elements.push_back(
          {std::nullopt, cand.label, homological ? std::optional(homological->evidence) : std::nullopt});
  }
  std::sort(report.elements.begin(), report.elements.end(),
            [](const auto& a, const auto& b) { return a.label < b.label; });
  return report;
}

inline bool contains_character(const std::vector<Character>& set, const Character& c) {
  return std::find(set.begin(), set.end(), c) != set.end();
}

struct SymmetryReport {
  bool ok = true;
  Character two_rho;
  std::vector<Character> spectrum;
  std::vector<Character> unmatched;  ///< λ in σ(C) with 2ρ − λ missing
};

/// λ ∈ σ(C) ⟺ 2ρ − λ ∈ σ(C).
inline SymmetryReport check_two_rho_symmetry(const AlgebraPtr& g) {
  if (!is_solvable(*g)) throw Error(Errc::NotSolvable, "2rho symmetry needs a solvable algebra");
  SymmetryReport r;
  r.two_rho = two_rho(*g);
  r.spectrum = spectrum_solvable(Representation::trivial(g)).characters();
  for (const auto& lam : r.spectrum)
    if (!contains_character(r.spectrum, r.two_rho - lam)) {
      r.ok = false;
      r.unmatched.push_back(lam);
    }
  return r;
}

struct DualSpectrumReport {
  bool ok = false;
  bool direct = false;  ///< S ∈ σ(V)
  bool dual = false;    ///< S* ⊗ Λⁿg ∈ σ(V*)
};

inline DualSpectrumReport check_dual_spectrum(const Representation& v, const Representation& s) {
  DualSpectrumReport r;
  const Representation top = top_exterior_module(v.algebra_ptr());
  r.direct = in_spectrum(v, s).member;
  r.dual = in_spectrum(dual(v), tensor(dual(s), top)).member;
  r.ok = r.direct == r.dual;
  return r;
}

}  // namespace tspec

#endif  // TSPEC_SPECTRUM_HPP
