#include <gtest/gtest.h>

#include "support.hpp"

using namespace tspec;

namespace {

CatalogEntry entry(const char* ref) { return catalog_lookup(ref); }

Representation chr(const AlgebraPtr& g, RatVector v) { return Representation::character(g, Character(*g, std::move(v))); }

std::vector<std::pair<RatVector, std::size_t>> table(const WeightTable& t) {
  std::vector<std::pair<RatVector, std::size_t>> out;
  for (const auto& [mu, m] : t.entries) out.emplace_back(mu.values(), m);
  return out;
}

}  // namespace

TEST(CheckRepresentation, AdjointAndTrivialPass) {
  const auto sl2 = entry("sl2");
  EXPECT_TRUE(check_representation(sl2.module("adjoint")).ok);
  EXPECT_TRUE(check_representation(Representation::trivial(sl2.algebra, 3)).ok);
}

TEST(CheckRepresentation, SwappedEFFailsAtPairEF) {
  auto m = sl2_irrep_matrices(1);
  std::swap(m[1], m[2]);
  const RepCheck r = check_representation(Representation(sl2_algebra(), m));
  EXPECT_FALSE(r.ok);
  bool ef = false;
  for (const auto& [i, j] : r.violations) ef = ef || (i == 1 && j == 2);
  EXPECT_TRUE(ef);
}

TEST(CheckRepresentation, EveryShippedModulePasses) {
  for (const auto& p : catalog_pairs()) EXPECT_TRUE(check_representation(p.module).ok) << p.label;
}

TEST(Dual, Examples) {
  const auto g = entry("abelian:2").algebra;
  EXPECT_EQ(dual(chr(g, {1, 2})), chr(g, {-1, -2}));
  EXPECT_EQ(dual(Representation::trivial(g)), Representation::trivial(g));
  const Representation v = sl2_irrep(3);
  EXPECT_EQ(dual(dual(v)), v);
}

TEST(Antipode, Examples) {
  const auto g = entry("abelian:2").algebra;
  const Representation v = sl2_irrep(2);
  EXPECT_EQ(antipode(antipode(v)), v);
  EXPECT_EQ(antipode(Representation::trivial(g)).side(), Side::Right);
  const Representation a = antipode(chr(g, {3, 0}));
  EXPECT_EQ(a.side(), Side::Right);
  EXPECT_EQ(a.action(0)(0, 0), -3);
  EXPECT_TRUE(check_representation(antipode(v)).ok);
}

TEST(Tensor, Examples) {
  const auto g = entry("abelian:2").algebra;
  EXPECT_EQ(tensor(chr(g, {1, 2}), chr(g, {3, -1})), chr(g, {4, 1}));
  const Representation v = sl2_irrep(2);
  EXPECT_EQ(tensor(Representation::trivial(v.algebra_ptr()), v), v);
  const Representation vv = tensor(sl2_irrep(1), sl2_irrep(1));
  EXPECT_EQ(vv.dim(), 4U);
  EXPECT_TRUE(check_representation(vv).ok);
  const auto ev = rational_eigenvalues(vv.action(0));
  ASSERT_EQ(ev.values.size(), 3U);
  EXPECT_EQ(ev.values[0], std::make_pair(Rational(-2), std::size_t{1}));
  EXPECT_EQ(ev.values[1], std::make_pair(Rational(0), std::size_t{2}));
  EXPECT_EQ(ev.values[2], std::make_pair(Rational(2), std::size_t{1}));
}

TEST(Tensor, AlgebraMismatchThrows) {
  try {
    (void)tensor(sl2_irrep(1), entry("heisenberg3").module("trivial"));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::AlgebraMismatch);
  }
}

TEST(Tensor, RightTimesLeftUsesAntipodeSign) {
  const Representation v = sl2_irrep(1);
  EXPECT_EQ(tensor(antipode(v), v), tensor(v, v));
  EXPECT_TRUE(check_representation(tensor(antipode(v), antipode(v))).ok);
}

TEST(Twist, Examples) {
  const Representation v = sl2_irrep(2);
  EXPECT_EQ(twist(v, Representation::trivial(v.algebra_ptr())), v);
  const auto g = entry("abelian:2").algebra;
  EXPECT_EQ(twist(chr(g, {1, 2}), chr(g, {1, 2})), Representation::trivial(g));
  EXPECT_EQ(shift(chr(g, {1, 2}), chr(g, {1, 1})), chr(g, {2, 3}));
}

TEST(InvariantsCoinvariants, Examples) {
  const auto sl2 = entry("sl2");
  EXPECT_EQ(invariants_dim(sl2.module("trivial")), 1U);
  EXPECT_EQ(coinvariants_dim(sl2.module("trivial")), 1U);
  EXPECT_EQ(invariants_dim(sl2.module("adjoint")), 0U);
  EXPECT_EQ(coinvariants_dim(sl2.module("adjoint")), 0U);
  const auto g = entry("abelian:1").algebra;
  EXPECT_EQ(invariants_dim(chr(g, {5})), 0U);
  EXPECT_EQ(coinvariants_dim(chr(g, {5})), 0U);
}

TEST(InvariantsCoinvariants, MatchDegreeZeroHomology) {
  for (const auto& p : catalog_pairs()) {
    EXPECT_EQ(invariants_dim(p.module), betti_cohomology(p.module)[0]) << p.label;
    EXPECT_EQ(coinvariants_dim(p.module), betti_homology(p.module)[0]) << p.label;
  }
}

TEST(Weights, Character) {
  const auto g = entry("solvable3:5/3").algebra;
  EXPECT_EQ(table(weights(chr(g, {7, 0, 0}))), (std::vector<std::pair<RatVector, std::size_t>>{{{7, 0, 0}, 1}}));
}

TEST(Weights, AdjointOfSolvable3) {
  const auto g = entry("solvable3:5/3").algebra;
  EXPECT_EQ(table(weights(adjoint_rep(g))),
            (std::vector<std::pair<RatVector, std::size_t>>{
                {{0, 0, 0}, 1}, {{1, 0, 0}, 1}, {{Rational(5, 3), 0, 0}, 1}}));
}

TEST(Weights, RestrictedIrrepOnBorel) {
  const auto b = entry("borel_sl2");
  for (unsigned m = 0; m <= 4; ++m) {
    const auto t = weights(b.module("V" + std::to_string(m)));
    ASSERT_EQ(t.entries.size(), m + 1);
    for (std::size_t i = 0; i <= m; ++i) {
      EXPECT_EQ(t.entries[i].first[0], 2 * static_cast<long>(i) - static_cast<long>(m));
      EXPECT_EQ(t.entries[i].second, 1U);
    }
  }
}

TEST(Weights, NotSolvableAndNonSplit) {
  try {
    (void)weights(sl2_irrep(1));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::NotSolvable);
  }
  const auto g = entry("abelian:1").algebra;
  try {
    (void)weights(Representation(g, {RatMatrix{{0, -1}, {1, 0}}}));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::NonSplit);
  }
}

TEST(Weights, NonCommutingActionsCountedCorrectly) {
  // [x1,x2] = n, [x1,n] = n, [x2,n] = -n; x1 = [[1,1],[0,0]], x2 = diag(0,1)
  LieAlgebra::BracketTable t;
  t[{0, 1}] = {0, 0, 1};
  t[{0, 2}] = {0, 0, 1};
  t[{1, 2}] = {0, 0, -1};
  auto g = std::make_shared<const LieAlgebra>(std::vector<std::string>{"x1", "x2", "n"}, t);
  const Representation v(g, {RatMatrix{{1, 1}, {0, 0}}, RatMatrix{{0, 0}, {0, 1}}, RatMatrix{{0, 1}, {0, 0}}});
  ASSERT_TRUE(check_representation(v).ok);
  EXPECT_EQ(table(weights(v)),
            (std::vector<std::pair<RatVector, std::size_t>>{{{0, 1, 0}, 1}, {{1, 0, 0}, 1}}));
}

TEST(Weights, TwistShiftsPointwise) {
  const auto b = entry("borel_sl3");
  const Representation v = b.module("sl3_adjoint");
  const Character lam(*b.algebra, {2, -1, 0, 0, 0});
  const auto before = weights(v);
  const auto after = weights(twist(v, Representation::character(b.algebra, lam)));
  ASSERT_EQ(before.entries.size(), after.entries.size());
  for (std::size_t i = 0; i < before.entries.size(); ++i) {
    EXPECT_EQ(after.entries[i].first, before.entries[i].first - lam);
    EXPECT_EQ(after.entries[i].second, before.entries[i].second);
  }
}

TEST(WeightSpaces, NilpotentOnly) {
  const auto h = entry("heisenberg3");
  const auto ws = weight_spaces(h.module("jordan2"));
  ASSERT_EQ(ws.size(), 1U);
  EXPECT_EQ(ws[0].second.dim(), 2U);
  try {
    (void)weight_spaces(entry("borel_sl2").module("V1"));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::NotNilpotent);
  }
}

TEST(HomDim, Examples) {
  for (unsigned m = 0; m <= 4; ++m) EXPECT_EQ(hom_dim(sl2_irrep(m), sl2_irrep(m)), 1U);
  EXPECT_EQ(hom_dim(sl2_irrep(1), sl2_irrep(2)), 0U);
  EXPECT_EQ(hom_dim(sl2_irrep(2), entry("sl2").module("adjoint")), 1U);
  const auto g = entry("heisenberg3").algebra;
  EXPECT_EQ(hom_dim(Representation::trivial(g), Representation::trivial(g)), 1U);
}

TEST(HomDim, AdditiveInDirectSums) {
  const Representation a = sl2_irrep(1), b = sl2_irrep(2), c = sl2_irrep(1);
  EXPECT_EQ(hom_dim(direct_sum(a, b), c), hom_dim(a, c) + hom_dim(b, c));
  EXPECT_EQ(hom_dim(c, direct_sum(a, c)), hom_dim(c, a) + hom_dim(c, c));
}

TEST(DirectSum, DimensionAndWeights) {
  const auto b = entry("borel_sl2");
  const Representation v = direct_sum(b.module("V1"), b.module("V2"));
  EXPECT_EQ(v.dim(), 5U);
  EXPECT_EQ(weights(v).total(), 5U);
  EXPECT_EQ(weights(v).multiplicity(Character(*b.algebra, {0, 0})), 1U);
  EXPECT_EQ(weights(v).multiplicity(Character(*b.algebra, {1, 0})), 1U);
  try {
    (void)direct_sum(sl2_irrep(1), antipode(sl2_irrep(1)));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::SideMismatch);
  }
}

TEST(OneDimSubmodule, Examples) {
  const auto h = entry("heisenberg3");
  EXPECT_TRUE(has_one_dim_submodule_with_character(h.module("trivial"), Character::zero(*h.algebra)));
  EXPECT_TRUE(has_one_dim_submodule_with_character(h.module("jordan2"), Character::zero(*h.algebra)));
  const auto g = entry("abelian:1").algebra;
  EXPECT_FALSE(has_one_dim_submodule_with_character(chr(g, {2}), Character(*g, {3})));
}

TEST(Restrict, Examples) {
  const auto b = entry("borel_sl3");
  const Representation v = b.module("sl3_adjoint");
  EXPECT_EQ(v.dim(), 8U);
  EXPECT_EQ(v.algebra().dim(), 5U);
  EXPECT_TRUE(check_representation(v).ok);
  const auto sl2 = entry("sl2");
  const Subspace he = Subspace::span(3, {LieAlgebra::basis_vector(3, 0), LieAlgebra::basis_vector(3, 1)});
  EXPECT_EQ(restrict(sl2.module("trivial"), he), Representation::trivial(restrict(sl2.module("trivial"), he).algebra_ptr()));
  const Subspace ef = Subspace::span(3, {LieAlgebra::basis_vector(3, 1), LieAlgebra::basis_vector(3, 2)});
  try {
    (void)restrict(sl2_irrep(1), ef);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::NotASubalgebra);
  }
}

TEST(Functors, ResultsPassValidation) {
  const auto b = entry("borel_sl2");
  const Representation v = b.module("V2"), w = b.module("adjoint");
  for (const Representation& r : {dual(v), tensor(v, w), twist(v, w), direct_sum(v, w), shift(v, w)})
    EXPECT_TRUE(check_representation(r).ok);
}
