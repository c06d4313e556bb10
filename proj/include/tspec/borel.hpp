#ifndef TSPEC_BOREL_HPP
#define TSPEC_BOREL_HPP

#include <map>
#include <memory>
#include <string>
#include <vector>

#include "tspec/catalog.hpp"
#include "tspec/homology.hpp"
#include "tspec/spectrum.hpp"
#include "tspec/weights.hpp"

namespace tspec {

/// Cohomology of the nilradical of a Borel subalgebra, graded by Cartan weight.
struct NilradicalCohomology {
  std::size_t cartan_rank = 0;
  /// degrees[q]: Cartan weight (values on the Cartan basis) -> dim H^q(n, V)_weight
  std::vector<std::map<RatVector, std::size_t, LexLess>> degrees;

  [[nodiscard]] std::vector<RatVector> weight_multiset(std::size_t q) const {
    std::vector<RatVector> out;
    for (const auto& [mu, mult] : degrees.at(q))
      for (std::size_t i = 0; i < mult; ++i) out.push_back(mu);
    return out;
  }
  [[nodiscard]] std::size_t zero_weight_dim(std::size_t q) const {
    const auto it = degrees.at(q).find(RatVector(cartan_rank));
    return it == degrees.at(q).end() ? 0 : it->second;
  }
};

namespace detail {

inline const CatalogEntry& require_borel(const CatalogEntry& borel) {
  if (!borel.cartan || !borel.root_system || !borel.parent)
    throw Error(Errc::Unsupported, borel.full_name() + " is not a Borel catalog entry");
  return borel;
}

inline RatMatrix restrict_columns(const RatMatrix& d, const RatMatrix& basis) { return d * basis; }

}  // namespace detail

/// H^q(n, V) split into Cartan weight blocks; the Cartan action on cochains commutes with
/// the differential, so each block is a subcomplex.
inline NilradicalCohomology nilradical_cohomology(const CatalogEntry& borel, const Representation& v) {
  detail::require_borel(borel);
  const LieAlgebra& b = *borel.algebra;
  if (!(v.algebra() == b)) throw Error(Errc::AlgebraMismatch, "module is not over " + borel.full_name());
  const Subspace nil = derived_subalgebra(b);
  const std::size_t nd = nil.dim();
  std::vector<std::string> names;
  for (std::size_t t = 0; t < nd; ++t) names.push_back("n" + std::to_string(t + 1));
  auto n_alg = std::make_shared<const LieAlgebra>(subalgebra(b, nil, names));
  const Representation vn = restrict(v, nil, n_alg);
  const ChainComplex cc = cochain_complex(vn);

  const Subspace& cartan = *borel.cartan;
  const std::size_t r = cartan.dim();
  auto abelian = std::make_shared<const LieAlgebra>(LieAlgebra::abelian(r));

  // blocks[q]: weight -> basis matrix (columns) of the weight block of C^q
  std::vector<std::map<RatVector, RatMatrix, LexLess>> blocks(nd + 1);
  for (std::size_t q = 0; q <= nd; ++q) {
    if (cc.lengths[q] == 0) continue;
    std::vector<RatMatrix> ops;
    for (std::size_t i = 0; i < r; ++i) {
      const RatVector h = cartan.vector(i);
      RatMatrix der(nd, nd);
      for (std::size_t t = 0; t < nd; ++t) {
        const auto coords = nil.coordinates(b.bracket(h, nil.vector(t)));
        if (!coords) throw Error(Errc::NotASubalgebra, "derived algebra is not an ideal");
        for (std::size_t l = 0; l < nd; ++l) der(l, t) = (*coords)[l];
      }
      ops.push_back(cochain_outer_action(nd, q, der, v.action_of(h)));
    }
    const Representation cartan_on_cochains(abelian, std::move(ops));
    for (const auto& [mu, space] : weight_spaces(cartan_on_cochains)) blocks[q].emplace(mu.values(), space.basis());
  }

  NilradicalCohomology out;
  out.cartan_rank = r;
  out.degrees.resize(nd + 1);
  for (std::size_t q = 0; q <= nd; ++q)
    for (const auto& [mu, basis] : blocks[q]) {
      const std::size_t cycles = basis.cols() - rank(detail::restrict_columns(cc.differentials[q + 1], basis));
      std::size_t boundaries = 0;
      if (q > 0) {
        const auto prev = blocks[q - 1].find(mu);
        if (prev != blocks[q - 1].end())
          boundaries = rank(detail::restrict_columns(cc.differentials[q], prev->second));
      }
      if (cycles > boundaries) out.degrees[q][mu] = cycles - boundaries;
    }
  return out;
}

struct KostantReport {
  bool ok = false;
  std::vector<std::vector<RatVector>> computed;  ///< per degree, sorted multiset
  std::vector<std::vector<RatVector>> expected;  ///< w(λ+ρ) - ρ over l(w) = k
};

/// Compares the Cartan weights of H^k(n, V) with {w(λ+ρ) - ρ : l(w) = k} for every k.
inline KostantReport check_kostant(const CatalogEntry& borel, const Representation& v, const RatVector& lambda) {
  const NilradicalCohomology h = nilradical_cohomology(borel, v);
  KostantReport rep;
  rep.ok = true;
  for (std::size_t k = 0; k < h.degrees.size(); ++k) {
    rep.computed.push_back(h.weight_multiset(k));
    rep.expected.push_back(kostant_weights(*borel.root_system, lambda, k));
    if (rep.computed.back() != rep.expected.back()) rep.ok = false;
  }
  return rep;
}

/// Same, with V the shipped simple module of highest weight λ restricted to the Borel.
inline KostantReport check_kostant(const CatalogEntry& borel, const RatVector& lambda) {
  detail::require_borel(borel);
  auto v = borel.highest_weight(lambda);
  if (!v) throw Error(Errc::Unsupported, "no shipped module of highest weight " + to_string(lambda));
  return check_kostant(borel, *v, lambda);
}

struct SemidirectReport {
  bool ok = false;
  BettiTable direct;                 ///< dim H^k(b, V)
  std::vector<std::size_t> formula;  ///< Σ_{p+q=k} C(r, p) · dim H^q(n, V)_0
};

/// dim H^k(b, V) = Σ_{p+q=k} C(dim h, p) · dim H^q(n, V)^h, both sides computed separately.
inline SemidirectReport check_semidirect_formula(const CatalogEntry& borel, const Representation& v) {
  const NilradicalCohomology h = nilradical_cohomology(borel, v);
  SemidirectReport rep;
  rep.direct = betti_cohomology(*borel.algebra, v);
  const std::size_t r = h.cartan_rank;
  const std::size_t nd = h.degrees.size() - 1;
  rep.formula.assign(r + nd + 1, 0);
  std::vector<std::size_t> binom(r + 1, 1);
  for (std::size_t p = 1; p <= r; ++p) binom[p] = binom[p - 1] * (r - p + 1) / p;
  for (std::size_t p = 0; p <= r; ++p)
    for (std::size_t q = 0; q <= nd; ++q) rep.formula[p + q] += binom[p] * h.zero_weight_dim(q);
  rep.ok = rep.formula == rep.direct.values;
  return rep;
}

struct BorelSpectrumReport {
  bool ok = false;
  std::vector<RatVector> formula;   ///< {ρ + w(λ+ρ)}
  std::vector<RatVector> computed;  ///< spectrum_solvable restricted to the Cartan, sorted
};

/// Closed-form Borel spectrum against the homology-computed one, for the shipped
/// simple module of highest weight λ.
inline BorelSpectrumReport check_borel_spectrum(const CatalogEntry& borel, const RatVector& lambda,
                                                unsigned jobs = 1) {
  detail::require_borel(borel);
  auto v = borel.highest_weight(lambda);
  if (!v) throw Error(Errc::Unsupported, "no shipped module of highest weight " + to_string(lambda));
  BorelSpectrumReport rep;
  rep.formula = borel_spectrum_formula(*borel.root_system, lambda);
  for (const auto& c : spectrum_solvable(*v, jobs).characters()) rep.computed.push_back(borel.cartan_coordinates(c));
  std::sort(rep.computed.begin(), rep.computed.end(), LexLess{});
  rep.ok = rep.formula == rep.computed;
  return rep;
}

/// Borel entry for a semisimple catalog name ("sl2" -> "borel_sl2"); Borel names pass through.
inline CatalogEntry borel_of(std::string_view name) {
  if (name.rfind("borel_", 0) == 0) return catalog_get(name, {});
  return catalog_get("borel_" + std::string(name), {});
}

}  // namespace tspec

#endif  // TSPEC_BOREL_HPP
