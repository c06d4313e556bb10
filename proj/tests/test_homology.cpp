#include <gtest/gtest.h>

#include "support.hpp"

using namespace tspec;

namespace {

CatalogEntry entry(const char* ref) { return catalog_lookup(ref); }

std::vector<std::size_t> binomials(std::size_t n) {
  std::vector<std::size_t> out;
  for (std::size_t k = 0; k <= n; ++k) out.push_back(static_cast<std::size_t>(oracle::binomial(static_cast<long>(n), static_cast<long>(k))));
  return out;
}

}  // namespace

TEST(ChainComplex, AbelianTrivialHasZeroDifferentials) {
  const ChainComplex c = chain_complex(entry("abelian:4").module("trivial"));
  for (const auto& d : c.differentials) EXPECT_TRUE(d.is_zero());
}

TEST(ChainComplex, LengthsAreBinomialTimesDim) {
  for (const auto& p : catalog_pairs()) {
    const ChainComplex c = chain_complex(p.module);
    const std::size_t n = p.module.algebra().dim();
    ASSERT_EQ(c.lengths.size(), n + 1);
    for (std::size_t k = 0; k <= n; ++k) EXPECT_EQ(c.lengths[k], binomials(n)[k] * p.module.dim()) << p.label;
    ASSERT_EQ(c.differentials.size(), n + 2);
    for (std::size_t k = 1; k <= n; ++k) {
      EXPECT_EQ(c.differentials[k].rows(), c.lengths[k - 1]);
      EXPECT_EQ(c.differentials[k].cols(), c.lengths[k]);
    }
  }
}

TEST(ChainComplex, HeisenbergD2HasRankOne) {
  const ChainComplex c = chain_complex(entry("heisenberg3").module("trivial"));
  EXPECT_EQ(rank(c.differentials[2]), 1U);
  EXPECT_EQ(rank(c.differentials[1]), 0U);
}

TEST(ChainComplex, SquareIsZeroOnEveryCatalogPair) {
  for (const auto& p : catalog_pairs()) {
    for (const ChainComplex& c : {chain_complex(p.module), cochain_complex(p.module)}) {
      for (std::size_t k = 1; k + 1 < c.differentials.size(); ++k) {
        const RatMatrix& a = c.differentials[k];
        const RatMatrix& b = c.differentials[k + 1];
        const RatMatrix prod = c.cohomological ? b * a : a * b;
        EXPECT_TRUE(prod.is_zero()) << p.label << " k=" << k;
      }
    }
  }
}

TEST(ChainComplex, RightModuleRejected) {
  try {
    (void)chain_complex(antipode(sl2_irrep(1)));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::SideMismatch);
  }
}

TEST(ChainComplex, InvalidModuleDetected) {
  auto m = sl2_irrep_matrices(1);
  std::swap(m[1], m[2]);
  try {
    (void)chain_complex(Representation(sl2_algebra(), m));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::DifferentialSquareNonzero);
  }
}

TEST(Betti, Fixtures) {
  for (std::size_t n = 1; n <= 5; ++n) {
    const auto e = catalog_lookup("abelian:" + std::to_string(n));
    EXPECT_EQ(betti_homology(e.module("trivial")).values, binomials(n));
  }
  EXPECT_EQ(betti_homology(entry("sl2").module("trivial")).values, (std::vector<std::size_t>{1, 0, 0, 1}));
  EXPECT_EQ(betti_homology(entry("heisenberg3").module("trivial")).values, (std::vector<std::size_t>{1, 2, 2, 1}));
}

TEST(Betti, CohomologyExamples) {
  EXPECT_EQ(betti_cohomology(entry("sl2").module("adjoint")).values, (std::vector<std::size_t>(4, 0)));
  const auto g = entry("abelian:1");
  EXPECT_EQ(betti_cohomology(g.module("char:2")).values, (std::vector<std::size_t>{0, 0}));
  EXPECT_EQ(betti_cohomology(entry("borel_sl2").module("trivial")).values, (std::vector<std::size_t>{1, 1, 0}));
}

TEST(Betti, AlgebraMismatchThrows) {
  try {
    (void)betti_homology(*entry("heisenberg3").algebra, sl2_irrep(1));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::AlgebraMismatch);
  }
}

TEST(Betti, DualityOnCatalogPairs) {
  for (const auto& p : catalog_pairs())
    EXPECT_EQ(betti_cohomology(dual(p.module)), betti_homology(p.module)) << p.label;
}

TEST(Betti, EulerCharacteristicVanishes) {
  for (const auto& p : catalog_pairs()) {
    long chi_h = 0, chi_c = 0;
    const auto h = betti_homology(p.module), c = betti_cohomology(p.module);
    for (std::size_t k = 0; k < h.size(); ++k) {
      chi_h += (k % 2 ? -1 : 1) * static_cast<long>(h[k]);
      chi_c += (k % 2 ? -1 : 1) * static_cast<long>(c[k]);
    }
    EXPECT_EQ(chi_h, 0) << p.label;
    EXPECT_EQ(chi_c, 0) << p.label;
  }
}

TEST(Betti, AdditiveInDirectSums) {
  const auto b = entry("borel_sl2");
  const Representation v = b.module("trivial"), w = b.module("char:2,0");
  const auto s = betti_homology(direct_sum(v, w));
  const auto a = betti_homology(v), c = betti_homology(w);
  for (std::size_t k = 0; k < s.size(); ++k) EXPECT_EQ(s[k], a[k] + c[k]);
}

TEST(Poincare, Examples) {
  EXPECT_TRUE(check_poincare(entry("sl2").module("trivial")).ok);
  const PoincareReport r = check_poincare(entry("borel_sl2").module("trivial"));
  EXPECT_TRUE(r.ok);
  EXPECT_EQ(r.cohomology.values, (std::vector<std::size_t>{1, 1, 0}));
  EXPECT_EQ(r.twisted_homology.values, (std::vector<std::size_t>{0, 1, 1}));
  EXPECT_TRUE(check_poincare(entry("solvable3:5/3").module("char:1,0,0")).ok);
}

TEST(Poincare, WrongTwistWouldFail) {
  // The untwisted homology of borel_sl2 with trivial coefficients is not the reversed cohomology.
  const auto v = entry("borel_sl2").module("trivial");
  auto h = betti_homology(v).values;
  std::reverse(h.begin(), h.end());
  EXPECT_NE(h, betti_cohomology(v).values);
}

TEST(Poincare, AllCatalogPairs) {
  const auto pairs = catalog_pairs();
  EXPECT_GE(pairs.size(), 20U);
  for (const auto& p : pairs) EXPECT_TRUE(check_poincare(p.module).ok) << p.label;
}

TEST(Whitehead, Sl2IrrepsHaveNoCohomology) {
  EXPECT_EQ(betti_cohomology(sl2_irrep(0)).values, (std::vector<std::size_t>{1, 0, 0, 1}));
  for (unsigned m = 1; m <= 4; ++m)
    EXPECT_EQ(betti_cohomology(sl2_irrep(m)).values, (std::vector<std::size_t>(4, 0))) << m;
}

TEST(CochainOuterAction, CommutesWithDifferential) {
  const auto b = entry("borel_sl3");
  const LieAlgebra& g = *b.algebra;
  const Subspace nil = derived_subalgebra(g);
  auto n_alg = std::make_shared<const LieAlgebra>(subalgebra(g, nil, {"n1", "n2", "n3"}));
  const Representation v = b.module("sl3_adjoint");
  const ChainComplex cc = cochain_complex(restrict(v, nil, n_alg));
  for (std::size_t i = 0; i < 2; ++i) {
    const RatVector h = LieAlgebra::basis_vector(g.dim(), i);
    RatMatrix der(3, 3);
    for (std::size_t t = 0; t < 3; ++t) {
      const auto c = nil.coordinates(g.bracket(h, nil.vector(t)));
      for (std::size_t l = 0; l < 3; ++l) der(l, t) = (*c)[l];
    }
    for (std::size_t q = 0; q < 3; ++q) {
      const RatMatrix a = cochain_outer_action(3, q, der, v.action_of(h));
      const RatMatrix a1 = cochain_outer_action(3, q + 1, der, v.action_of(h));
      EXPECT_EQ(cc.differentials[q + 1] * a, a1 * cc.differentials[q + 1]);
    }
  }
}
