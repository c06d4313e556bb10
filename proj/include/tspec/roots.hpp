#ifndef TSPEC_ROOTS_HPP
#define TSPEC_ROOTS_HPP

#include <algorithm>
#include <cstddef>
#include <deque>
#include <set>
#include <string>
#include <vector>

#include "tspec/matrix.hpp"

namespace tspec {

/// A root system in the coordinates of a fixed Cartan basis: a weight is the
/// vector of its values on that basis, and the coroot of a simple root is an
/// element of the Cartan subalgebra in the same basis.
struct RootSystem {
  std::string name;
  std::size_t rank = 0;
  std::vector<RatVector> simple_roots;
  std::vector<RatVector> simple_coroots;
  std::vector<RatVector> positive_roots;

  /// <λ, α_i^∨>
  [[nodiscard]] Rational pairing(const RatVector& lambda, std::size_t i) const {
    Rational s = 0;
    for (std::size_t j = 0; j < rank; ++j) s += lambda[j] * simple_coroots[i][j];
    return s;
  }

  /// Matrix of s_i(λ) = λ - <λ, α_i^∨> α_i.
  [[nodiscard]] RatMatrix reflection(std::size_t i) const {
    RatMatrix m = RatMatrix::identity(rank);
    for (std::size_t r = 0; r < rank; ++r)
      for (std::size_t c = 0; c < rank; ++c) m(r, c) -= simple_roots[i][r] * simple_coroots[i][c];
    return m;
  }

  static RootSystem a1() {
    return {"A1", 1, {{Rational(2)}}, {{Rational(1)}}, {{Rational(2)}}};
  }

  /// Chevalley coordinates: values on h1 = E11 - E22, h2 = E22 - E33.
  static RootSystem a2() {
    return {"A2", 2, {{2, -1}, {-1, 2}}, {{1, 0}, {0, 1}}, {{2, -1}, {-1, 2}, {1, 1}}};
  }

  static RootSystem a1xa1() {
    return {"A1xA1", 2, {{2, 0}, {0, 2}}, {{1, 0}, {0, 1}}, {{2, 0}, {0, 2}}};
  }
};

struct WeylElement {
  RatMatrix matrix;
  std::size_t length = 0;
  std::vector<std::size_t> word;  ///< simple reflection indices, leftmost applied last
};

/// Whole Weyl group by breadth-first closure under left multiplication by simple
/// reflections; the BFS depth of first discovery is the length.
inline std::vector<WeylElement> weyl_group(const RootSystem& rs) {
  if (rs.rank > 3) throw Error(Errc::RankTooLarge, "Weyl group generation limited to rank <= 3");
  std::vector<RatMatrix> gens;
  for (std::size_t i = 0; i < rs.rank; ++i) gens.push_back(rs.reflection(i));
  std::vector<WeylElement> group{{RatMatrix::identity(rs.rank), 0, {}}};
  std::set<RatVector, LexLess> seen{group.front().matrix.entries()};
  std::deque<std::size_t> queue{0};
  while (!queue.empty()) {
    const std::size_t cur = queue.front();
    queue.pop_front();
    for (std::size_t i = 0; i < gens.size(); ++i) {
      RatMatrix next = gens[i] * group[cur].matrix;
      if (!seen.insert(next.entries()).second) continue;
      std::vector<std::size_t> word{i};
      word.insert(word.end(), group[cur].word.begin(), group[cur].word.end());
      group.push_back({std::move(next), group[cur].length + 1, std::move(word)});
      queue.push_back(group.size() - 1);
    }
  }
  return group;
}

inline RatVector rho(const RootSystem& rs) {
  RatVector r(rs.rank);
  for (const auto& a : rs.positive_roots)
    for (std::size_t i = 0; i < rs.rank; ++i) r[i] += a[i];
  for (auto& x : r) x /= 2;
  return r;
}

namespace detail {
inline RatVector add(RatVector a, const RatVector& b, int sign = 1) {
  for (std::size_t i = 0; i < a.size(); ++i) a[i] += sign * b[i];
  return a;
}
}  // namespace detail

/// {w(λ + ρ) - ρ : l(w) = k}, as a sorted multiset.
inline std::vector<RatVector> kostant_weights(const RootSystem& rs, const RatVector& lambda, std::size_t k) {
  const RatVector r = rho(rs);
  const RatVector shifted = detail::add(lambda, r);
  std::vector<RatVector> out;
  for (const auto& w : weyl_group(rs))
    if (w.length == k) out.push_back(detail::add(w.matrix * shifted, r, -1));
  std::sort(out.begin(), out.end(), LexLess{});
  return out;
}

/// {ρ + w(λ + ρ) : w ∈ W}, deduplicated and sorted.
inline std::vector<RatVector> borel_spectrum_formula(const RootSystem& rs, const RatVector& lambda) {
  const RatVector r = rho(rs);
  const RatVector shifted = detail::add(lambda, r);
  std::set<RatVector, LexLess> out;
  for (const auto& w : weyl_group(rs)) out.insert(detail::add(w.matrix * shifted, r));
  return {out.begin(), out.end()};
}

/// True iff λ is dominant integral: <λ, α_i^∨> is a nonnegative integer for all i.
inline bool is_dominant_integral(const RootSystem& rs, const RatVector& lambda) {
  if (lambda.size() != rs.rank) return false;
  for (std::size_t i = 0; i < rs.rank; ++i) {
    const Rational p = rs.pairing(lambda, i);
    if (p.get_den() != 1 || sgn(p) < 0) return false;
  }
  return true;
}

}  // namespace tspec

#endif  // TSPEC_ROOTS_HPP
