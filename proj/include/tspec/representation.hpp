#ifndef TSPEC_REPRESENTATION_HPP
#define TSPEC_REPRESENTATION_HPP

#include <cstddef>
#include <memory>
#include <string>
#include <utility>
#include <vector>

#include "tspec/lie_algebra.hpp"

namespace tspec {

enum class Side { Left, Right };

inline std::string_view side_name(Side s) { return s == Side::Left ? "left" : "right"; }

using AlgebraPtr = std::shared_ptr<const LieAlgebra>;

/// A finite-dimensional module: one action matrix per basis element of the algebra.
/// For a right module the matrix of g sends v to v.g.
class Representation {
 public:
  Representation(AlgebraPtr algebra, std::vector<RatMatrix> action, Side side = Side::Left)
      : algebra_(std::move(algebra)), action_(std::move(action)), side_(side) {
    if (!algebra_) throw Error(Errc::AlgebraMismatch, "representation needs an algebra");
    if (action_.size() != algebra_->dim())
      throw Error(Errc::DimensionMismatch, "need one action matrix per algebra basis element");
    dim_ = action_.front().rows();
    for (const auto& a : action_)
      if (a.rows() != dim_ || a.cols() != dim_)
        throw Error(Errc::DimensionMismatch, "action matrices must all be dim x dim");
  }

  static Representation trivial(AlgebraPtr g, std::size_t dim = 1) {
    std::vector<RatMatrix> act(g->dim(), RatMatrix(dim, dim));
    return Representation(std::move(g), std::move(act));
  }

  /// The one-dimensional module C_lambda.
  static Representation character(AlgebraPtr g, const Character& lambda) {
    if (lambda.size() != g->dim()) throw Error(Errc::DimensionMismatch, "character length mismatch");
    std::vector<RatMatrix> act;
    for (std::size_t i = 0; i < g->dim(); ++i) act.push_back(RatMatrix{{lambda[i]}});
    return Representation(std::move(g), std::move(act));
  }

  [[nodiscard]] const LieAlgebra& algebra() const noexcept { return *algebra_; }
  [[nodiscard]] const AlgebraPtr& algebra_ptr() const noexcept { return algebra_; }
  [[nodiscard]] std::size_t dim() const noexcept { return dim_; }
  [[nodiscard]] Side side() const noexcept { return side_; }
  [[nodiscard]] const RatMatrix& action(std::size_t i) const { return action_.at(i); }
  [[nodiscard]] const std::vector<RatMatrix>& actions() const noexcept { return action_; }

  /// Action matrix of an arbitrary element x = sum x_i g_i.
  [[nodiscard]] RatMatrix action_of(const RatVector& x) const {
    RatMatrix m(dim_, dim_);
    for (std::size_t i = 0; i < x.size(); ++i)
      if (sgn(x[i]) != 0) m += action_[i] * x[i];
    return m;
  }

  friend bool operator==(const Representation& a, const Representation& b) {
    return a.side_ == b.side_ && *a.algebra_ == *b.algebra_ && a.action_ == b.action_;
  }

 private:
  AlgebraPtr algebra_;
  std::vector<RatMatrix> action_;
  Side side_;
  std::size_t dim_ = 0;
};

inline bool same_algebra(const Representation& a, const Representation& b) {
  return a.algebra_ptr() == b.algebra_ptr() || a.algebra() == b.algebra();
}

inline void require_same_algebra(const Representation& a, const Representation& b) {
  if (!same_algebra(a, b)) throw Error(Errc::AlgebraMismatch, "modules are over different algebras");
}

struct RepCheck {
  bool ok = true;
  /// 0-based basis pairs (i, j), i < j, where the homomorphism law fails.
  std::vector<std::pair<std::size_t, std::size_t>> violations;
};

/// Left: rho([x, y]) = [rho(x), rho(y)]. Right: rho([x, y]) = -[rho(x), rho(y)].
inline RepCheck check_representation(const Representation& v) {
  RepCheck report;
  const LieAlgebra& g = v.algebra();
  for (std::size_t i = 0; i < g.dim(); ++i)
    for (std::size_t j = i + 1; j < g.dim(); ++j) {
      RatMatrix lhs = v.action_of(g.bracket_basis(i, j));
      RatMatrix rhs = commutator(v.action(i), v.action(j));
      if (v.side() == Side::Right) rhs = -rhs;
      if (!(lhs == rhs)) {
        report.ok = false;
        report.violations.emplace_back(i, j);
      }
    }
  return report;
}

/// (g.f)(v) = -f(g.v): negated transposes.
inline Representation dual(const Representation& v) {
  std::vector<RatMatrix> act;
  for (const auto& a : v.actions()) act.push_back(-a.transpose());
  return Representation(v.algebra_ptr(), std::move(act), v.side());
}

/// v.g = -g.v; flips the side.
inline Representation antipode(const Representation& v) {
  std::vector<RatMatrix> act;
  for (const auto& a : v.actions()) act.push_back(-a);
  return Representation(v.algebra_ptr(), std::move(act),
                        v.side() == Side::Left ? Side::Right : Side::Left);
}

/// Tensor product with the first factor as the outer Kronecker index.
/// right x left -> left, by g.(v (x) w) = v (x) g.w - v.g (x) w;
/// left x left means V° (x) W (left); right x right is the antipode of that (right).
inline Representation tensor(const Representation& v, const Representation& w) {
  require_same_algebra(v, w);
  if (v.side() == Side::Left && w.side() == Side::Right)
    throw Error(Errc::SideMismatch, "tensor of a left module with a right module is not defined");
  const RatMatrix iv = RatMatrix::identity(v.dim());
  const RatMatrix iw = RatMatrix::identity(w.dim());
  // As left actions, v contributes +L_v = -R_v when v is right.
  const bool flip_v = v.side() == Side::Right && w.side() == Side::Left;
  std::vector<RatMatrix> act;
  for (std::size_t i = 0; i < v.algebra().dim(); ++i) {
    RatMatrix left = kronecker(v.action(i), iw);
    if (flip_v) left = -left;
    act.push_back(left + kronecker(iv, w.action(i)));
  }
  return Representation(v.algebra_ptr(), std::move(act), w.side());
}

/// V_{-S} = S* (x) V. For a one-dimensional S of character lambda this shifts weights by -lambda.
inline Representation twist(const Representation& v, const Representation& s) {
  return tensor(dual(s), v);
}

/// V_S = S (x) V, with the antipode sign carried by S (weight shift +lambda for C_lambda).
inline Representation shift(const Representation& v, const Representation& s) { return tensor(s, v); }

inline Representation direct_sum(const Representation& v, const Representation& w) {
  require_same_algebra(v, w);
  if (v.side() != w.side()) throw Error(Errc::SideMismatch, "direct sum of modules on different sides");
  std::vector<RatMatrix> act;
  for (std::size_t i = 0; i < v.algebra().dim(); ++i)
    act.push_back(block_diagonal(v.action(i), w.action(i)));
  return Representation(v.algebra_ptr(), std::move(act), v.side());
}

inline std::size_t invariants_dim(const Representation& v) {
  if (v.dim() == 0) return 0;
  return v.dim() - rank(vstack(v.actions(), v.dim()));
}

inline std::size_t coinvariants_dim(const Representation& v) {
  if (v.dim() == 0) return 0;
  return v.dim() - rank(hstack(v.actions(), v.dim()));
}

/// dim Hom_g(v, w) = dim of the invariants of v* (x) w.
inline std::size_t hom_dim(const Representation& v, const Representation& w) {
  return invariants_dim(twist(w, v));
}

/// True iff some nonzero vector spans a submodule isomorphic to C_mu.
inline bool has_one_dim_submodule_with_character(const Representation& v, const Character& mu) {
  if (mu.size() != v.algebra().dim()) throw Error(Errc::DimensionMismatch, "character length mismatch");
  if (v.dim() == 0) return false;
  std::vector<RatMatrix> shifted;
  const RatMatrix id = RatMatrix::identity(v.dim());
  for (std::size_t i = 0; i < v.algebra().dim(); ++i) shifted.push_back(v.action(i) - id * mu[i]);
  return rank(vstack(shifted, v.dim())) < v.dim();
}

/// Restriction of v to a subalgebra spanned by the columns of `sub`; `sub_algebra`
/// must be that subalgebra in sub's basis (as produced by tspec::subalgebra).
inline Representation restrict(const Representation& v, const Subspace& sub, AlgebraPtr sub_algebra) {
  if (sub.ambient_dim() != v.algebra().dim())
    throw Error(Errc::AmbientMismatch, "subspace is not in the module's algebra");
  const LieAlgebra expected = subalgebra(v.algebra(), sub, sub_algebra->basis_names());
  if (!(expected == *sub_algebra))
    throw Error(Errc::NotASubalgebra, "given subalgebra does not match the subspace");
  std::vector<RatMatrix> act;
  for (std::size_t k = 0; k < sub.dim(); ++k) act.push_back(v.action_of(sub.vector(k)));
  return Representation(std::move(sub_algebra), std::move(act), v.side());
}

inline Representation restrict(const Representation& v, const Subspace& sub) {
  std::vector<std::string> names;
  for (std::size_t k = 0; k < sub.dim(); ++k) names.push_back("b" + std::to_string(k + 1));
  auto algebra = std::make_shared<const LieAlgebra>(subalgebra(v.algebra(), sub, std::move(names)));
  return restrict(v, sub, std::move(algebra));
}

}  // namespace tspec

#endif  // TSPEC_REPRESENTATION_HPP
