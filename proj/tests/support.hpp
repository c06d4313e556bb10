#ifndef TSPEC_TESTS_SUPPORT_HPP
#define TSPEC_TESTS_SUPPORT_HPP

#include <random>
#include <string>
#include <vector>

#include "oracles.hpp"
#include "tspec/io.hpp"
#include "tspec/tspec.hpp"

namespace support {

using namespace tspec;

inline oracle::Data to_oracle(const Representation& v) {
  const LieAlgebra& g = v.algebra();
  oracle::Data d;
  d.n = g.dim();
  d.m = v.dim();
  d.c.assign(d.n, std::vector<std::vector<mpq_class>>(d.n, std::vector<mpq_class>(d.n)));
  for (std::size_t i = 0; i < d.n; ++i)
    for (std::size_t j = 0; j < d.n; ++j)
      for (std::size_t k = 0; k < d.n; ++k) d.c[i][j][k] = g.constant(i, j, k);
  for (std::size_t i = 0; i < d.n; ++i) {
    oracle::QMatrix a(d.m, std::vector<mpq_class>(d.m));
    for (std::size_t r = 0; r < d.m; ++r)
      for (std::size_t c = 0; c < d.m; ++c) a[r][c] = v.action(i)(r, c);
    d.act.push_back(std::move(a));
  }
  return d;
}

inline oracle::QMatrix to_oracle(const RatMatrix& m) {
  oracle::QMatrix out(m.rows(), std::vector<mpq_class>(m.cols()));
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (std::size_t c = 0; c < m.cols(); ++c) out[r][c] = m(r, c);
  return out;
}

inline Rational small_rational(std::mt19937& rng, int range = 3) {
  std::uniform_int_distribution<int> num(-range, range), den(1, 3);
  Rational q(num(rng), den(rng));
  q.canonicalize();
  return q;
}

inline RatMatrix random_matrix(std::mt19937& rng, std::size_t rows, std::size_t cols, double density = 0.5) {
  std::bernoulli_distribution keep(density);
  RatMatrix m(rows, cols);
  for (std::size_t r = 0; r < rows; ++r)
    for (std::size_t c = 0; c < cols; ++c)
      if (keep(rng)) m(r, c) = small_rational(rng);
  return m;
}

/// A random solvable matrix Lie algebra: the span of random upper-triangular matrices,
/// closed under commutators, with its defining module.
inline Representation random_triangular_module(std::mt19937& rng, std::size_t size, std::size_t generators,
                                               bool strictly = false) {
  std::vector<RatMatrix> mats;
  std::vector<RatVector> flat;
  auto try_add = [&](const RatMatrix& m) {
    if (m.is_zero()) return;
    std::vector<RatVector> trial = flat;
    trial.push_back(m.entries());
    if (Subspace::span(size * size, trial).dim() == trial.size()) {
      flat = std::move(trial);
      mats.push_back(m);
    }
  };
  std::uniform_int_distribution<int> val(-2, 2);
  for (std::size_t g = 0; g < generators; ++g) {
    RatMatrix m(size, size);
    for (std::size_t r = 0; r < size; ++r)
      for (std::size_t c = strictly ? r + 1 : r; c < size; ++c) m(r, c) = val(rng);
    try_add(m);
  }
  for (std::size_t i = 0; i < mats.size(); ++i)
    for (std::size_t j = 0; j < i; ++j) try_add(commutator(mats[i], mats[j]));
  if (mats.empty()) {
    RatMatrix m(size, size);
    m(0, 0) = 1;
    mats.push_back(m);
  }
  std::vector<std::string> names;
  for (std::size_t i = 0; i < mats.size(); ++i) names.push_back("t" + std::to_string(i + 1));
  auto g = std::make_shared<const LieAlgebra>(LieAlgebra::from_matrices(names, mats));
  return Representation(g, mats);
}

}  // namespace support

#endif  // TSPEC_TESTS_SUPPORT_HPP
