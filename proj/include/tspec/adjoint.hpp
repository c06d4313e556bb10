#ifndef TSPEC_ADJOINT_HPP
#define TSPEC_ADJOINT_HPP

#include <vector>

#include "tspec/weights.hpp"

namespace tspec {

inline Representation adjoint_rep(AlgebraPtr g) {
  std::vector<RatMatrix> act;
  for (std::size_t i = 0; i < g->dim(); ++i) act.push_back(g->ad(i));
  return Representation(std::move(g), std::move(act));
}

/// Weights of the adjoint representation, with multiplicity (dim g values in total).
inline std::vector<Character> jordan_holder_values(const AlgebraPtr& g) {
  if (!is_solvable(*g)) throw Error(Errc::NotSolvable, "Jordan-Hölder values need a solvable algebra");
  return weights(adjoint_rep(g)).expanded();
}

/// g -> trace(ad g); the sum of the Jordan-Hölder values.
inline Character two_rho(const LieAlgebra& g) {
  if (!is_solvable(g)) throw Error(Errc::NotSolvable, "2rho needs a solvable algebra");
  RatVector values(g.dim());
  for (std::size_t i = 0; i < g.dim(); ++i) values[i] = g.ad(i).trace();
  return Character(g, std::move(values));
}

/// Character of the top exterior power of the adjoint module: 2rho for solvable
/// algebras, zero for semisimple ones.
inline Character top_exterior_character(const LieAlgebra& g) {
  if (is_solvable(g)) return two_rho(g);
  if (is_semisimple(g)) return Character::zero(g);
  throw Error(Errc::Unsupported, "top exterior character for an algebra that is neither solvable nor semisimple");
}

inline Representation top_exterior_module(const AlgebraPtr& g) {
  return Representation::character(g, top_exterior_character(*g));
}

}  // namespace tspec

#endif  // TSPEC_ADJOINT_HPP
