#ifndef TSPEC_LIE_ALGEBRA_HPP
#define TSPEC_LIE_ALGEBRA_HPP

#include <cstddef>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "tspec/matrix.hpp"

namespace tspec {

/// A finite-dimensional Lie algebra over Q given by structure constants
/// [g_i, g_j] = sum_k c_ij^k g_k. Immutable; Jacobi is checked on construction.
class LieAlgebra {
 public:
  /// Brackets keyed by 0-based (i, j) with i < j; missing pairs are zero.
  using BracketTable = std::map<std::pair<std::size_t, std::size_t>, RatVector>;

  LieAlgebra(std::vector<std::string> basis_names, const BracketTable& brackets)
      : names_(std::move(basis_names)), dim_(names_.size()), c_(dim_ * dim_ * dim_) {
    if (dim_ == 0) throw Error(Errc::DimensionMismatch, "Lie algebra must have positive dimension");
    for (const auto& [key, coeffs] : brackets) {
      const auto [i, j] = key;
      if (i >= j || j >= dim_)
        throw Error(Errc::DimensionMismatch, "bracket key must satisfy i < j < dim");
      if (coeffs.size() != dim_) throw Error(Errc::DimensionMismatch, "bracket vector length != dim");
      for (std::size_t k = 0; k < dim_; ++k) {
        at(i, j, k) = coeffs[k];
        at(j, i, k) = -coeffs[k];
      }
    }
    for (std::size_t i = 0; i < dim_; ++i)
      ad_.push_back(build_ad(i));
    check_jacobi();
  }

  static LieAlgebra abelian(std::size_t n) {
    std::vector<std::string> names;
    for (std::size_t i = 0; i < n; ++i) names.push_back("x" + std::to_string(i + 1));
    return LieAlgebra(std::move(names), {});
  }

  /// The Lie algebra spanned by linearly independent square matrices closed under
  /// the commutator; structure constants are read off in that basis.
  static LieAlgebra from_matrices(std::vector<std::string> names, const std::vector<RatMatrix>& mats) {
    if (mats.empty() || names.size() != mats.size())
      throw Error(Errc::DimensionMismatch, "need one name per matrix");
    const std::size_t n = mats.front().rows();
    std::vector<RatVector> flat;
    for (const auto& m : mats) {
      if (m.rows() != n || m.cols() != n) throw Error(Errc::DimensionMismatch, "matrix sizes differ");
      flat.push_back(m.entries());
    }
    const RatMatrix basis = RatMatrix::from_columns(n * n, flat);
    const Subspace span = Subspace::span(basis);
    if (span.dim() != mats.size()) throw Error(Errc::BadParams, "matrices are linearly dependent");
    BracketTable table;
    for (std::size_t i = 0; i < mats.size(); ++i)
      for (std::size_t j = i + 1; j < mats.size(); ++j) {
        const RatMatrix br = commutator(mats[i], mats[j]);
        auto coords = solve_columns(basis, br.entries());
        if (!coords) throw Error(Errc::NotASubalgebra, "matrix span is not closed under commutator");
        if (!is_zero(*coords)) table[{i, j}] = std::move(*coords);
      }
    return LieAlgebra(std::move(names), table);
  }

  [[nodiscard]] std::size_t dim() const noexcept { return dim_; }
  [[nodiscard]] const std::vector<std::string>& basis_names() const noexcept { return names_; }

  [[nodiscard]] const Rational& constant(std::size_t i, std::size_t j, std::size_t k) const {
    return c_[(i * dim_ + j) * dim_ + k];
  }

  /// [g_i, g_j] as a coordinate vector.
  [[nodiscard]] RatVector bracket_basis(std::size_t i, std::size_t j) const {
    RatVector v(dim_);
    for (std::size_t k = 0; k < dim_; ++k) v[k] = constant(i, j, k);
    return v;
  }

  [[nodiscard]] RatVector bracket(const RatVector& x, const RatVector& y) const {
    if (x.size() != dim_ || y.size() != dim_)
      throw Error(Errc::DimensionMismatch, "bracket arguments must have length dim");
    RatVector out(dim_);
    for (std::size_t i = 0; i < dim_; ++i) {
      if (sgn(x[i]) == 0) continue;
      for (std::size_t j = 0; j < dim_; ++j) {
        if (i == j || sgn(y[j]) == 0) continue;
        const Rational s = x[i] * y[j];
        for (std::size_t k = 0; k < dim_; ++k)
          if (sgn(constant(i, j, k)) != 0) out[k] += s * constant(i, j, k);
      }
    }
    return out;
  }

  /// Matrix of ad g_i; column k holds [g_i, g_k].
  [[nodiscard]] const RatMatrix& ad(std::size_t i) const { return ad_.at(i); }

  [[nodiscard]] RatMatrix ad(const RatVector& x) const {
    RatMatrix m(dim_, dim_);
    for (std::size_t i = 0; i < dim_; ++i)
      if (sgn(x[i]) != 0) m += ad_[i] * x[i];
    return m;
  }

  /// Structural equality (basis names are labels only).
  friend bool operator==(const LieAlgebra& a, const LieAlgebra& b) {
    return a.dim_ == b.dim_ && a.c_ == b.c_;
  }

  [[nodiscard]] BracketTable bracket_table() const {
    BracketTable t;
    for (std::size_t i = 0; i < dim_; ++i)
      for (std::size_t j = i + 1; j < dim_; ++j) {
        RatVector v = bracket_basis(i, j);
        if (!is_zero(v)) t[{i, j}] = std::move(v);
      }
    return t;
  }

  static RatVector basis_vector(std::size_t n, std::size_t i) {
    RatVector v(n);
    v[i] = 1;
    return v;
  }

 private:
  Rational& at(std::size_t i, std::size_t j, std::size_t k) { return c_[(i * dim_ + j) * dim_ + k]; }

  RatMatrix build_ad(std::size_t i) const {
    RatMatrix m(dim_, dim_);
    for (std::size_t k = 0; k < dim_; ++k)
      for (std::size_t l = 0; l < dim_; ++l) m(l, k) = constant(i, k, l);
    return m;
  }

  void check_jacobi() const {
    for (std::size_t i = 0; i < dim_; ++i)
      for (std::size_t j = i + 1; j < dim_; ++j)
        for (std::size_t k = j + 1; k < dim_; ++k) {
          const RatVector a = ad_[i] * bracket_basis(j, k);
          const RatVector b = ad_[j] * bracket_basis(k, i);
          const RatVector c = ad_[k] * bracket_basis(i, j);
          for (std::size_t l = 0; l < dim_; ++l) {
            if (sgn(Rational(a[l] + b[l] + c[l])) != 0)
              throw Error(Errc::JacobiViolation, "Jacobi identity fails for (" + names_[i] + ", " +
                                                     names_[j] + ", " + names_[k] + ")");
          }
        }
  }

  static std::optional<RatVector> solve_columns(const RatMatrix& basis, const RatVector& v) {
    const std::size_t k = basis.cols();
    RatMatrix aug = hstack({basis, RatMatrix::column(v)}, basis.rows());
    const Echelon e = row_reduce(aug);
    if (!e.pivots.empty() && e.pivots.back() == k) return std::nullopt;
    RatVector coords(k);
    for (std::size_t r = 0; r < e.pivots.size(); ++r) coords[e.pivots[r]] = e.reduced(r, k);
    return coords;
  }

  std::vector<std::string> names_;
  std::size_t dim_;
  std::vector<Rational> c_;
  std::vector<RatMatrix> ad_;
};

/// A linear functional on g vanishing on [g, g], stored by its values on the basis.
class Character {
 public:
  Character() = default;

  Character(const LieAlgebra& g, RatVector values) : values_(std::move(values)) {
    if (values_.size() != g.dim())
      throw Error(Errc::DimensionMismatch, "character length must equal algebra dimension");
    for (std::size_t i = 0; i < g.dim(); ++i)
      for (std::size_t j = i + 1; j < g.dim(); ++j) {
        Rational v = 0;
        for (std::size_t k = 0; k < g.dim(); ++k) v += values_[k] * g.constant(i, j, k);
        if (sgn(v) != 0)
          throw Error(Errc::NotACharacter, "functional " + to_string(values_) +
                                               " does not vanish on [" + g.basis_names()[i] + ", " +
                                               g.basis_names()[j] + "]");
      }
  }

  static Character zero(const LieAlgebra& g) { return Character(g, RatVector(g.dim())); }

  [[nodiscard]] const RatVector& values() const noexcept { return values_; }
  [[nodiscard]] std::size_t size() const noexcept { return values_.size(); }
  [[nodiscard]] const Rational& operator[](std::size_t i) const { return values_[i]; }

  [[nodiscard]] Rational operator()(const RatVector& x) const {
    Rational s = 0;
    for (std::size_t i = 0; i < values_.size(); ++i) s += values_[i] * x[i];
    return s;
  }

  friend Character operator+(const Character& a, const Character& b) {
    Character c = a;
    for (std::size_t i = 0; i < c.values_.size(); ++i) c.values_[i] += b.values_[i];
    return c;
  }
  friend Character operator-(const Character& a, const Character& b) {
    Character c = a;
    for (std::size_t i = 0; i < c.values_.size(); ++i) c.values_[i] -= b.values_[i];
    return c;
  }
  friend Character operator-(Character a) {
    for (auto& v : a.values_) v = -v;
    return a;
  }

  friend bool operator==(const Character& a, const Character& b) { return a.values_ == b.values_; }
  friend bool operator<(const Character& a, const Character& b) { return LexLess{}(a.values_, b.values_); }

 private:
  RatVector values_;
};

inline std::string to_string(const Character& c) { return to_string(c.values()); }

inline Subspace derived_subalgebra(const LieAlgebra& g) {
  std::vector<RatVector> vecs;
  for (std::size_t i = 0; i < g.dim(); ++i)
    for (std::size_t j = i + 1; j < g.dim(); ++j) vecs.push_back(g.bracket_basis(i, j));
  return Subspace::span(g.dim(), vecs);
}

/// [a, b] for subspaces a, b of g.
inline Subspace bracket_span(const LieAlgebra& g, const Subspace& a, const Subspace& b) {
  std::vector<RatVector> vecs;
  for (std::size_t i = 0; i < a.dim(); ++i)
    for (std::size_t j = 0; j < b.dim(); ++j) vecs.push_back(g.bracket(a.vector(i), b.vector(j)));
  return Subspace::span(g.dim(), vecs);
}

inline bool is_solvable(const LieAlgebra& g) {
  Subspace d = Subspace::full(g.dim());
  while (d.dim() > 0) {
    Subspace next = bracket_span(g, d, d);
    if (next.dim() == d.dim()) return false;
    d = std::move(next);
  }
  return true;
}

inline bool is_nilpotent(const LieAlgebra& g) {
  const Subspace all = Subspace::full(g.dim());
  Subspace l = all;
  while (l.dim() > 0) {
    Subspace next = bracket_span(g, all, l);
    if (next.dim() == l.dim()) return false;
    l = std::move(next);
  }
  return true;
}

inline RatMatrix killing_form(const LieAlgebra& g) {
  const std::size_t n = g.dim();
  RatMatrix k(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i; j < n; ++j) {
      k(i, j) = (g.ad(i) * g.ad(j)).trace();
      k(j, i) = k(i, j);
    }
  return k;
}

/// Cartan's criterion.
inline bool is_semisimple(const LieAlgebra& g) { return rank(killing_form(g)) == g.dim(); }

/// The annihilator of [g, g]: every character is a vector in this space.
inline Subspace character_space(const LieAlgebra& g) {
  const Subspace d = derived_subalgebra(g);
  if (d.dim() == 0) return Subspace::full(g.dim());
  return kernel(d.basis().transpose());
}

/// The subalgebra spanned by `sub`, in the coordinates of sub's basis columns.
inline LieAlgebra subalgebra(const LieAlgebra& g, const Subspace& sub, std::vector<std::string> names) {
  if (sub.ambient_dim() != g.dim()) throw Error(Errc::AmbientMismatch, "subspace is not in this algebra");
  if (names.size() != sub.dim()) throw Error(Errc::DimensionMismatch, "need one name per basis vector");
  LieAlgebra::BracketTable table;
  for (std::size_t i = 0; i < sub.dim(); ++i)
    for (std::size_t j = i + 1; j < sub.dim(); ++j) {
      auto coords = sub.coordinates(g.bracket(sub.vector(i), sub.vector(j)));
      if (!coords)
        throw Error(Errc::NotASubalgebra, "[" + names[i] + ", " + names[j] + "] leaves the subspace");
      if (!is_zero(*coords)) table[{i, j}] = std::move(*coords);
    }
  return LieAlgebra(std::move(names), table);
}

}  // namespace tspec

#endif  // TSPEC_LIE_ALGEBRA_HPP
