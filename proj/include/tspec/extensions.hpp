#ifndef TSPEC_EXTENSIONS_HPP
#define TSPEC_EXTENSIONS_HPP

#include <map>
#include <memory>
#include <string>
#include <utility>
#include <vector>

#include "tspec/spectrum.hpp"

namespace tspec {

/// Data of a one-dimensional extension 0 -> C_λ -> g -> h -> 0.
struct ExtensionSpec {
  AlgebraPtr base;
  Character lambda;
  /// ξ on basis pairs (i < j) of the base; missing pairs are zero.
  std::map<std::pair<std::size_t, std::size_t>, Rational> cocycle;
  std::string new_generator = "c";
};

struct Extension {
  AlgebraPtr algebra;  ///< basis: the base basis followed by the new generator
  AlgebraPtr base;
  /// π: g -> h as a (dim h) x (dim g) matrix; drops the last coordinate.
  RatMatrix projection;
};

/// [(h1, c1), (h2, c2)] = ([h1, h2], λ(h1) c2 - λ(h2) c1 + ξ(h1 ∧ h2)).
inline Extension build_extension(const ExtensionSpec& spec) {
  if (!spec.base) throw Error(Errc::BadParams, "extension needs a base algebra");
  const LieAlgebra& h = *spec.base;
  const std::size_t n = h.dim();
  if (spec.lambda.size() != n) throw Error(Errc::DimensionMismatch, "λ has the wrong length");
  (void)Character(h, spec.lambda.values());
  for (const auto& [key, value] : spec.cocycle)
    if (key.first >= key.second || key.second >= n)
      throw Error(Errc::BadParams, "cocycle keys must be basis pairs i < j");

  LieAlgebra::BracketTable table;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      RatVector v = h.bracket_basis(i, j);
      v.push_back(0);
      if (auto it = spec.cocycle.find({i, j}); it != spec.cocycle.end()) v[n] = it->second;
      if (!is_zero(v)) table[{i, j}] = std::move(v);
    }
  for (std::size_t i = 0; i < n; ++i)
    if (sgn(spec.lambda[i]) != 0) {
      RatVector v(n + 1);
      v[n] = spec.lambda[i];
      table[{i, n}] = std::move(v);
    }
  std::vector<std::string> names = h.basis_names();
  names.push_back(spec.new_generator);

  Extension ext;
  ext.base = spec.base;
  try {
    ext.algebra = std::make_shared<const LieAlgebra>(std::move(names), table);
  } catch (const Error& e) {
    if (e.code() != Errc::JacobiViolation) throw;
    throw Error(Errc::NotACocycle, std::string(e.what()));
  }
  ext.projection = RatMatrix(n, n + 1);
  for (std::size_t i = 0; i < n; ++i) ext.projection(i, i) = 1;
  return ext;
}

/// V^π: the base generators act as on V, the new generator acts by zero.
inline Representation pullback(const Representation& v, const Extension& ext) {
  if (!(v.algebra() == *ext.base)) throw Error(Errc::BaseMismatch, "module is not over the extension's base");
  std::vector<RatMatrix> act = v.actions();
  act.emplace_back(v.dim(), v.dim());
  return Representation(ext.algebra, std::move(act), v.side());
}

/// μ ∘ π for a character of the base.
inline Character pullback(const Character& mu, const Extension& ext) {
  RatVector values = mu.values();
  values.push_back(0);
  return Character(*ext.algebra, std::move(values));
}

/// Cocycle ξ + dφ for a linear functional φ on the base:
///   (dφ)(h1, h2) = λ(h1) φ(h2) - λ(h2) φ(h1) - φ([h1, h2]).
inline ExtensionSpec add_coboundary(ExtensionSpec spec, const RatVector& phi) {
  const LieAlgebra& h = *spec.base;
  if (phi.size() != h.dim()) throw Error(Errc::DimensionMismatch, "φ has the wrong length");
  for (std::size_t i = 0; i < h.dim(); ++i)
    for (std::size_t j = i + 1; j < h.dim(); ++j) {
      Rational d = spec.lambda[i] * phi[j] - spec.lambda[j] * phi[i];
      const RatVector br = h.bracket_basis(i, j);
      for (std::size_t k = 0; k < h.dim(); ++k) d -= phi[k] * br[k];
      if (sgn(d) == 0) continue;
      Rational& slot = spec.cocycle[{i, j}];
      slot += d;
      if (sgn(slot) == 0) spec.cocycle.erase({i, j});
    }
  return spec;
}

struct ExtensionSpectrumReport {
  bool ok = false;
  bool vanish_on_new = false;    ///< every element of σ_g(V^π) kills the new generator
  bool shifted_in_base = false;  ///< μ|h ∈ σ_h(V) or μ|h - λ ∈ σ_h(V)
  bool central_equality = true;  ///< σ_g(V^π) = σ_h(V) when λ = 0 (vacuous otherwise)
  std::vector<Character> base_spectrum;
  std::vector<Character> extension_spectrum;
};

inline ExtensionSpectrumReport check_extension_spectrum(const ExtensionSpec& spec, const Representation& v,
                                                        unsigned jobs = 1) {
  if (!is_solvable(*spec.base)) throw Error(Errc::NotSolvable, "extension checks need a solvable base");
  const Extension ext = build_extension(spec);
  ExtensionSpectrumReport rep;
  rep.base_spectrum = spectrum_solvable(v, jobs).characters();
  rep.extension_spectrum = spectrum_solvable(pullback(v, ext), jobs).characters();
  const std::size_t n = spec.base->dim();
  rep.vanish_on_new = true;
  rep.shifted_in_base = true;
  std::vector<Character> restricted;
  for (const auto& mu : rep.extension_spectrum) {
    if (sgn(mu[n]) != 0) {
      rep.vanish_on_new = false;
      continue;
    }
    const Character r(*spec.base, RatVector(mu.values().begin(), mu.values().end() - 1));
    restricted.push_back(r);
    if (!contains_character(rep.base_spectrum, r) && !contains_character(rep.base_spectrum, r - spec.lambda))
      rep.shifted_in_base = false;
  }
  if (is_zero(spec.lambda.values())) {
    std::sort(restricted.begin(), restricted.end());
    rep.central_equality = rep.vanish_on_new && restricted == rep.base_spectrum;
  }
  rep.ok = rep.vanish_on_new && rep.shifted_in_base && rep.central_equality;
  return rep;
}

}  // namespace tspec

#endif  // TSPEC_EXTENSIONS_HPP
