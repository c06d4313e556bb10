#ifndef TSPEC_WEIGHTS_HPP
#define TSPEC_WEIGHTS_HPP

#include <algorithm>
#include <cstddef>
#include <set>
#include <utility>
#include <vector>

#include "tspec/eigenvalues.hpp"
#include "tspec/representation.hpp"

namespace tspec {

/// Weights of a module over a solvable algebra with multiplicities, sorted by character.
struct WeightTable {
  std::vector<std::pair<Character, std::size_t>> entries;

  [[nodiscard]] std::size_t total() const {
    std::size_t t = 0;
    for (const auto& [mu, m] : entries) t += m;
    return t;
  }

  [[nodiscard]] std::size_t multiplicity(const Character& mu) const {
    for (const auto& [c, m] : entries)
      if (c == mu) return m;
    return 0;
  }

  /// The weights as a multiset, each repeated by multiplicity.
  [[nodiscard]] std::vector<Character> expanded() const {
    std::vector<Character> out;
    for (const auto& [c, m] : entries) out.insert(out.end(), m, c);
    return out;
  }
};

namespace detail {

/// Multiplicity of `root` in a polynomial given in ascending coefficients.
inline std::size_t root_multiplicity(Polynomial p, const Rational& root) {
  std::size_t mult = 0;
  while (p.size() > 1) {
    // Synthetic division by (x - root).
    const std::size_t deg = p.size() - 1;
    Polynomial q(deg);
    Rational carry = 0;
    for (std::size_t i = deg; i-- > 0;) {
      carry = p[i + 1] + carry * root;
      q[i] = carry;
    }
    const Rational rem = p[0] + carry * root;
    if (sgn(rem) != 0) break;
    p = std::move(q);
    ++mult;
  }
  return mult;
}

}  // namespace detail

/// Jordan-Hölder weights: the diagonal of any triangular basis.
///
/// Candidate characters come from the per-generator rational eigenvalues; the
/// multiplicity of a candidate mu is the multiplicity of mu(x) as an eigenvalue of
/// x = sum N^i g_i, where N is chosen so that x separates all candidates. Because the
/// action is simultaneously triangularizable, the eigenvalues of x are exactly the
/// values of the weights at x.
inline WeightTable weights(const Representation& v) {
  const LieAlgebra& g = v.algebra();
  if (!is_solvable(g)) throw Error(Errc::NotSolvable, "weights need a solvable algebra");
  WeightTable table;
  if (v.dim() == 0) return table;

  std::vector<std::vector<Rational>> per_generator;
  for (std::size_t i = 0; i < g.dim(); ++i) {
    const RationalEigenvalues ev = rational_eigenvalues(v.action(i));
    if (!ev.split)
      throw Error(Errc::NonSplit, "action of " + g.basis_names()[i] + " has irrational eigenvalues");
    std::vector<Rational> vals;
    for (const auto& [val, mult] : ev.values) vals.push_back(val);
    per_generator.push_back(std::move(vals));
  }

  // Cartesian product, keeping only functionals that vanish on [g, g].
  const Subspace derived = derived_subalgebra(g);
  std::vector<RatVector> candidates{RatVector{}};
  for (const auto& vals : per_generator) {
    std::vector<RatVector> next;
    for (const auto& prefix : candidates)
      for (const auto& val : vals) {
        RatVector c = prefix;
        c.push_back(val);
        next.push_back(std::move(c));
      }
    candidates = std::move(next);
    if (candidates.size() > 2000000) throw Error(Errc::Unsupported, "too many weight candidates");
  }
  std::vector<RatVector> chars;
  for (auto& c : candidates) {
    bool ok = true;
    for (std::size_t k = 0; k < derived.dim() && ok; ++k) {
      Rational s = 0;
      for (std::size_t i = 0; i < g.dim(); ++i) s += c[i] * derived.basis()(i, k);
      ok = sgn(s) == 0;
    }
    if (ok) chars.push_back(std::move(c));
  }

  RatVector x(g.dim());
  std::vector<Rational> values;
  for (unsigned long base = 2;; ++base) {
    Rational coeff = 1;
    for (std::size_t i = 0; i < g.dim(); ++i) {
      x[i] = coeff;
      coeff *= base;
    }
    values.clear();
    for (const auto& c : chars) {
      Rational s = 0;
      for (std::size_t i = 0; i < g.dim(); ++i) s += c[i] * x[i];
      values.push_back(s);
    }
    std::vector<Rational> sorted = values;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) == sorted.end()) break;
  }

  const Polynomial cp = characteristic_polynomial(v.action_of(x));
  for (std::size_t k = 0; k < chars.size(); ++k) {
    const std::size_t mult = detail::root_multiplicity(cp, values[k]);
    if (mult) table.entries.emplace_back(Character(g, chars[k]), mult);
  }
  std::sort(table.entries.begin(), table.entries.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });
  if (table.total() != v.dim())
    throw Error(Errc::NonSplit, "weights do not account for the whole module");
  return table;
}

/// Generalized weight spaces V^mu = intersection over i of ker (rho(g_i) - mu(g_i))^dim.
/// Only valid (and only allowed) for nilpotent algebras, where V is their direct sum.
inline std::vector<std::pair<Character, Subspace>> weight_spaces(const Representation& v) {
  const LieAlgebra& g = v.algebra();
  if (!is_nilpotent(g)) throw Error(Errc::NotNilpotent, "weight space decomposition needs a nilpotent algebra");
  std::vector<std::pair<Character, Subspace>> out;
  const RatMatrix id = RatMatrix::identity(v.dim());
  for (const auto& [mu, mult] : weights(v).entries) {
    Subspace s = Subspace::full(v.dim());
    for (std::size_t i = 0; i < g.dim() && s.dim() > 0; ++i)
      s = intersect(s, generalized_kernel(v.action(i) - id * mu[i], static_cast<unsigned>(v.dim())));
    out.emplace_back(mu, std::move(s));
  }
  return out;
}

}  // namespace tspec

#endif  // TSPEC_WEIGHTS_HPP
