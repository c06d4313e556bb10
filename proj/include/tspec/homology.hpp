#ifndef TSPEC_HOMOLOGY_HPP
#define TSPEC_HOMOLOGY_HPP

#include <bit>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "tspec/adjoint.hpp"

namespace tspec {

/// Basis of the k-th exterior power of an n-dimensional space: strictly
/// increasing index tuples in lexicographic order, stored as bit masks.
class ExteriorBasis {
 public:
  ExteriorBasis(std::size_t n, std::size_t k) : n_(n), k_(k) {
    if (n > 20) throw Error(Errc::Unsupported, "exterior powers limited to dim <= 20");
    index_.assign(std::size_t{1} << n, -1);
    std::vector<std::size_t> tuple(k);
    enumerate(tuple, 0, 0);
  }

  [[nodiscard]] std::size_t size() const noexcept { return masks_.size(); }
  [[nodiscard]] std::uint32_t mask(std::size_t idx) const { return masks_[idx]; }
  [[nodiscard]] std::size_t index(std::uint32_t mask) const {
    return static_cast<std::size_t>(index_[mask]);
  }
  [[nodiscard]] std::vector<std::size_t> elements(std::size_t idx) const {
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i < n_; ++i)
      if (masks_[idx] >> i & 1U) out.push_back(i);
    return out;
  }

 private:
  void enumerate(std::vector<std::size_t>& tuple, std::size_t pos, std::size_t start) {
    if (pos == k_) {
      std::uint32_t m = 0;
      for (auto t : tuple) m |= 1U << t;
      index_[m] = static_cast<int>(masks_.size());
      masks_.push_back(m);
      return;
    }
    for (std::size_t i = start; i < n_; ++i) {
      tuple[pos] = i;
      enumerate(tuple, pos + 1, i + 1);
    }
  }

  std::size_t n_;
  std::size_t k_;
  std::vector<std::uint32_t> masks_;
  std::vector<int> index_;
};

namespace detail {

inline int parity_sign(std::size_t n) { return (n & 1U) ? -1 : 1; }

/// Number of elements of `mask` strictly below bit l.
inline std::size_t count_below(std::uint32_t mask, std::size_t l) {
  return static_cast<std::size_t>(std::popcount(mask & ((1U << l) - 1U)));
}

}  // namespace detail

/// Graded complex of Q-vector spaces. `differentials[k]` is d_k : C_k -> C_{k-1}
/// (homological) or d^{k-1} : C^{k-1} -> C^k stored at index k (cohomological);
/// index 0 and n+1 hold the zero maps to and from 0.
struct ChainComplex {
  std::vector<std::size_t> lengths;
  std::vector<RatMatrix> differentials;
  bool cohomological = false;
};

struct BettiTable {
  std::vector<std::size_t> values;

  [[nodiscard]] bool nonzero() const {
    for (auto v : values)
      if (v) return true;
    return false;
  }
  [[nodiscard]] std::size_t size() const noexcept { return values.size(); }
  [[nodiscard]] std::optional<std::size_t> first_nonzero() const {
    for (std::size_t k = 0; k < values.size(); ++k)
      if (values[k]) return k;
    return std::nullopt;
  }
  std::size_t operator[](std::size_t k) const { return values.at(k); }
  friend bool operator==(const BettiTable&, const BettiTable&) = default;
};

inline void require_module_over(const LieAlgebra& g, const Representation& v) {
  if (!(v.algebra() == g)) throw Error(Errc::AlgebraMismatch, "module is not over this algebra");
  if (v.side() != Side::Left) throw Error(Errc::SideMismatch, "(co)homology expects a left module");
}

namespace detail {

inline void check_square_zero(const ChainComplex& c) {
  for (std::size_t k = 1; k + 1 < c.differentials.size(); ++k) {
    const RatMatrix& a = c.differentials[k];
    const RatMatrix& b = c.differentials[k + 1];
    const RatMatrix prod = c.cohomological ? b * a : a * b;
    if (!prod.is_zero())
      throw Error(Errc::DifferentialSquareNonzero,
                  "d o d != 0 at degree " + std::to_string(k) + "; the module is not a representation");
  }
}

}  // namespace detail

/// Chevalley-Eilenberg chain complex C_k = Λ^k g ⊗ V, basis (S, a) with S in
/// lexicographic order and the module index innermost. The module enters through
/// its antipode right action x.g = -g.x:
///   d(g_S ⊗ x) = Σ_p (-1)^{p+1} g_{S∖s_p} ⊗ x.g_{s_p} + Σ_{p<q} (-1)^{p+q} [g_{s_p}, g_{s_q}] ∧ g_{S∖{s_p,s_q}} ⊗ x
inline ChainComplex chain_complex(const Representation& v) {
  if (v.side() != Side::Left) throw Error(Errc::SideMismatch, "chain complex expects a left module");
  const LieAlgebra& g = v.algebra();
  const std::size_t n = g.dim();
  const std::size_t m = v.dim();
  std::vector<ExteriorBasis> ext;
  for (std::size_t k = 0; k <= n; ++k) ext.emplace_back(n, k);

  ChainComplex c;
  for (std::size_t k = 0; k <= n; ++k) c.lengths.push_back(ext[k].size() * m);
  c.differentials.emplace_back(0, c.lengths[0]);
  for (std::size_t k = 1; k <= n; ++k) {
    RatMatrix d(c.lengths[k - 1], c.lengths[k]);
    for (std::size_t s = 0; s < ext[k].size(); ++s) {
      const std::uint32_t mask = ext[k].mask(s);
      const auto elems = ext[k].elements(s);
      for (std::size_t p = 0; p < k; ++p) {
        // 1-based position p+1; the antipode contributes an extra sign.
        const int sign = detail::parity_sign(p + 1 + 1) * -1;
        const std::size_t row_set = ext[k - 1].index(mask & ~(1U << elems[p]));
        const RatMatrix& act = v.action(elems[p]);
        for (std::size_t a = 0; a < m; ++a)
          for (std::size_t b = 0; b < m; ++b)
            if (sgn(act(b, a)) != 0) d(row_set * m + b, s * m + a) += act(b, a) * sign;
      }
      for (std::size_t p = 0; p < k; ++p)
        for (std::size_t q = p + 1; q < k; ++q) {
          const int sign_pq = detail::parity_sign(p + q + 2);
          const std::uint32_t rest = mask & ~(1U << elems[p]) & ~(1U << elems[q]);
          for (std::size_t l = 0; l < n; ++l) {
            const Rational& coeff = g.constant(elems[p], elems[q], l);
            if (sgn(coeff) == 0 || (rest >> l & 1U)) continue;
            const int sign = sign_pq * detail::parity_sign(detail::count_below(rest, l));
            const std::size_t row_set = ext[k - 1].index(rest | (1U << l));
            for (std::size_t a = 0; a < m; ++a) d(row_set * m + a, s * m + a) += coeff * sign;
          }
        }
    }
    c.differentials.push_back(std::move(d));
  }
  c.differentials.emplace_back(c.lengths[n], 0);
  detail::check_square_zero(c);
  return c;
}

/// Cochain complex C^k = Hom(Λ^k g, V) with
///   (dφ)(x_0..x_k) = Σ_i (-1)^i x_i.φ(..x̂_i..) + Σ_{i<j} (-1)^{i+j} φ([x_i,x_j], ..x̂_i..x̂_j..)
/// Basis (S, a): the cochain sending g_S to e_a and other basis wedges to 0.
inline ChainComplex cochain_complex(const Representation& v) {
  if (v.side() != Side::Left) throw Error(Errc::SideMismatch, "cochain complex expects a left module");
  const LieAlgebra& g = v.algebra();
  const std::size_t n = g.dim();
  const std::size_t m = v.dim();
  std::vector<ExteriorBasis> ext;
  for (std::size_t k = 0; k <= n; ++k) ext.emplace_back(n, k);

  ChainComplex c;
  c.cohomological = true;
  for (std::size_t k = 0; k <= n; ++k) c.lengths.push_back(ext[k].size() * m);
  c.differentials.emplace_back(c.lengths[0], 0);
  for (std::size_t k = 1; k <= n; ++k) {
    // d^{k-1} : C^{k-1} -> C^k
    RatMatrix d(c.lengths[k], c.lengths[k - 1]);
    for (std::size_t t = 0; t < ext[k].size(); ++t) {
      const std::uint32_t mask = ext[k].mask(t);
      const auto elems = ext[k].elements(t);
      for (std::size_t i = 0; i < k; ++i) {
        const int sign = detail::parity_sign(i);
        const std::size_t col_set = ext[k - 1].index(mask & ~(1U << elems[i]));
        const RatMatrix& act = v.action(elems[i]);
        for (std::size_t a = 0; a < m; ++a)
          for (std::size_t b = 0; b < m; ++b)
            if (sgn(act(b, a)) != 0) d(t * m + b, col_set * m + a) += act(b, a) * sign;
      }
      for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = i + 1; j < k; ++j) {
          const int sign_ij = detail::parity_sign(i + j);
          const std::uint32_t rest = mask & ~(1U << elems[i]) & ~(1U << elems[j]);
          for (std::size_t l = 0; l < n; ++l) {
            const Rational& coeff = g.constant(elems[i], elems[j], l);
            if (sgn(coeff) == 0 || (rest >> l & 1U)) continue;
            const int sign = sign_ij * detail::parity_sign(detail::count_below(rest, l));
            const std::size_t col_set = ext[k - 1].index(rest | (1U << l));
            for (std::size_t a = 0; a < m; ++a) d(t * m + a, col_set * m + a) += coeff * sign;
          }
        }
    }
    c.differentials.push_back(std::move(d));
  }
  c.differentials.emplace_back(0, c.lengths[n]);
  detail::check_square_zero(c);
  return c;
}

/// values[k] = dim C_k - rank(out of C_k) - rank(into C_k).
inline BettiTable betti_numbers(const ChainComplex& c) {
  BettiTable t;
  const std::size_t n = c.lengths.size();
  std::vector<std::size_t> ranks;
  for (const auto& d : c.differentials) ranks.push_back(rank(d));
  for (std::size_t k = 0; k < n; ++k) t.values.push_back(c.lengths[k] - ranks[k] - ranks[k + 1]);
  return t;
}

inline BettiTable betti_homology(const Representation& v) { return betti_numbers(chain_complex(v)); }
inline BettiTable betti_cohomology(const Representation& v) { return betti_numbers(cochain_complex(v)); }

inline BettiTable betti_homology(const LieAlgebra& g, const Representation& v) {
  require_module_over(g, v);
  return betti_homology(v);
}

inline BettiTable betti_cohomology(const LieAlgebra& g, const Representation& v) {
  require_module_over(g, v);
  return betti_cohomology(v);
}

struct PoincareReport {
  bool ok = false;
  BettiTable cohomology;         ///< H^k(g, V)
  BettiTable twisted_homology;   ///< H_k(g, (Λ^n g)* ⊗ V)
};

/// H^k(g, V) ≅ H_{n-k}(g, (Λ^n g)* ⊗ V), compared dimension by dimension.
inline PoincareReport check_poincare(const Representation& v) {
  PoincareReport r;
  const AlgebraPtr& g = v.algebra_ptr();
  const Representation top = top_exterior_module(g);
  r.cohomology = betti_cohomology(v);
  r.twisted_homology = betti_homology(twist(v, top));
  const std::size_t n = g->dim();
  r.ok = true;
  for (std::size_t k = 0; k <= n; ++k)
    if (r.cohomology[k] != r.twisted_homology[n - k]) r.ok = false;
  return r;
}

/// Action of an outer element on C^k(g, V) = Hom(Λ^k g, V), given its action D on g
/// (a derivation, D(l, t) = coefficient of g_l in D g_t) and A on V:
///   φ ↦ A ∘ φ - φ ∘ D_Λ,   D_Λ(g_{t_1} ∧ … ∧ g_{t_k}) = Σ_p g_{t_1} ∧ … ∧ D g_{t_p} ∧ … ∧ g_{t_k}.
/// This commutes with the cochain differential whenever D and A come from an
/// algebra containing g as an ideal and acting on V.
inline RatMatrix cochain_outer_action(std::size_t n, std::size_t k, const RatMatrix& derivation,
                                      const RatMatrix& module_op) {
  const ExteriorBasis ext(n, k);
  const std::size_t m = module_op.rows();
  RatMatrix out(ext.size() * m, ext.size() * m);
  for (std::size_t s = 0; s < ext.size(); ++s)
    for (std::size_t a = 0; a < m; ++a)
      for (std::size_t b = 0; b < m; ++b)
        if (sgn(module_op(b, a)) != 0) out(s * m + b, s * m + a) += module_op(b, a);
  for (std::size_t t = 0; t < ext.size(); ++t) {
    const std::uint32_t mask = ext.mask(t);
    const auto elems = ext.elements(t);
    for (std::size_t p = 0; p < k; ++p) {
      const std::uint32_t rest = mask & ~(1U << elems[p]);
      for (std::size_t l = 0; l < n; ++l) {
        const Rational& coeff = derivation(l, elems[p]);
        if (sgn(coeff) == 0) continue;
        if (l != elems[p] && (rest >> l & 1U)) continue;
        const std::size_t r = detail::count_below(rest, l);
        const std::size_t moves = r > p ? r - p : p - r;
        const int sign = detail::parity_sign(moves);
        const std::size_t u = ext.index(rest | (1U << l));
        // (φ∘D_Λ)(g_T) picks up coeff*sign from the cochain supported on g_U.
        for (std::size_t a = 0; a < m; ++a) out(t * m + a, u * m + a) -= coeff * sign;
      }
    }
  }
  return out;
}

}  // namespace tspec

#endif  // TSPEC_HOMOLOGY_HPP
