#include <gtest/gtest.h>

#include "support.hpp"

using namespace tspec;

namespace {

AlgebraPtr algebra(const char* ref) { return catalog_lookup(ref).algebra; }

RatVector basis(const LieAlgebra& g, std::size_t i) { return LieAlgebra::basis_vector(g.dim(), i); }

}  // namespace

TEST(Bracket, HeisenbergXYIsZ) {
  const auto g = algebra("heisenberg3");
  EXPECT_EQ(g->bracket(basis(*g, 0), basis(*g, 1)), basis(*g, 2));
  EXPECT_EQ(g->bracket(basis(*g, 1), basis(*g, 0)), (RatVector{0, 0, -1}));
}

TEST(Bracket, SelfBracketVanishes) {
  for (const char* ref : {"sl2", "solvable3:5/3", "borel_sl3", "a1xa1"}) {
    const auto g = algebra(ref);
    RatVector v(g->dim());
    for (std::size_t i = 0; i < v.size(); ++i) v[i] = Rational(static_cast<long>(i) * 3 - 2, 7);
    for (auto& q : v) q.canonicalize();
    EXPECT_TRUE(is_zero(g->bracket(v, v))) << ref;
  }
}

TEST(Bracket, Solvable3E1E3IsLambdaE3) {
  const auto g = algebra("solvable3:5/3");
  EXPECT_EQ(g->bracket(basis(*g, 0), basis(*g, 2)), (RatVector{0, 0, Rational(5, 3)}));
  EXPECT_EQ(g->bracket(basis(*g, 0), basis(*g, 1)), (RatVector{0, 1, 0}));
}

TEST(Bracket, LengthMismatchThrows) {
  const auto g = algebra("sl2");
  try {
    (void)g->bracket(RatVector{1, 0}, RatVector{0, 1, 0});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::DimensionMismatch);
  }
}

TEST(LieAlgebra, JacobiViolationNamesTriple) {
  LieAlgebra::BracketTable t;
  t[{0, 1}] = {0, 0, 1};
  t[{0, 2}] = {0, 0, 1};
  t[{1, 2}] = {1, 0, 0};
  try {
    LieAlgebra({"a", "b", "c"}, t);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::JacobiViolation);
    const std::string what = e.what();
    EXPECT_NE(what.find("a"), std::string::npos);
    EXPECT_NE(what.find("c"), std::string::npos);
  }
}

TEST(DerivedSubalgebra, Examples) {
  EXPECT_EQ(derived_subalgebra(*algebra("abelian:3")).dim(), 0U);
  EXPECT_EQ(derived_subalgebra(*algebra("sl2")).dim(), 3U);
  const auto b = algebra("borel_sl2");
  EXPECT_EQ(derived_subalgebra(*b), Subspace::span(2, {basis(*b, 1)}));
}

TEST(Classification, Predicates) {
  EXPECT_TRUE(is_solvable(*algebra("heisenberg3")));
  EXPECT_TRUE(is_nilpotent(*algebra("heisenberg3")));
  EXPECT_TRUE(is_solvable(*algebra("borel_sl2")));
  EXPECT_FALSE(is_nilpotent(*algebra("borel_sl2")));
  EXPECT_FALSE(is_solvable(*algebra("sl2")));
  EXPECT_FALSE(is_nilpotent(*algebra("sl2")));
  EXPECT_TRUE(is_semisimple(*algebra("sl2")));
  EXPECT_TRUE(is_semisimple(*algebra("sl3")));
  EXPECT_TRUE(is_semisimple(*algebra("a1xa1")));
  EXPECT_FALSE(is_semisimple(*algebra("abelian:2")));
  EXPECT_FALSE(is_semisimple(*algebra("heisenberg3")));
  for (const char* ref : {"solvable3:5/3", "solvable3:0", "solvable3:-1", "borel_sl3", "borel_a1xa1"}) {
    EXPECT_TRUE(is_solvable(*algebra(ref))) << ref;
    EXPECT_FALSE(is_nilpotent(*algebra(ref))) << ref;
  }
}

TEST(KillingForm, Examples) {
  const RatMatrix k = killing_form(*algebra("sl2"));
  EXPECT_EQ(k, (RatMatrix{{8, 0, 0}, {0, 0, 4}, {0, 4, 0}}));
  EXPECT_TRUE(killing_form(*algebra("abelian:2")).is_zero());
  EXPECT_LT(rank(killing_form(*algebra("heisenberg3"))), 3U);
}

TEST(KillingForm, VanishesOnDerivedOfSolvableEntries) {
  for (const char* ref : {"heisenberg3", "solvable3:5/3", "borel_sl2", "borel_sl3", "borel_a1xa1"}) {
    const auto g = algebra(ref);
    const Subspace d = derived_subalgebra(*g);
    const RatMatrix k = killing_form(*g);
    EXPECT_TRUE((d.basis().transpose() * k * d.basis()).is_zero()) << ref;
  }
}

TEST(Character, ValidatesVanishingOnBrackets) {
  const auto g = algebra("borel_sl2");
  EXPECT_NO_THROW(Character(*g, {5, 0}));
  try {
    Character(*g, {0, 1});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::NotACharacter);
  }
  EXPECT_EQ(character_space(*g).dim(), 1U);
  EXPECT_EQ(character_space(*algebra("abelian:3")).dim(), 3U);
  EXPECT_EQ(character_space(*algebra("sl2")).dim(), 0U);
}

TEST(Adjoint, AbelianIsZero) {
  const Representation ad = adjoint_rep(algebra("abelian:3"));
  for (const auto& a : ad.actions()) EXPECT_TRUE(a.is_zero());
}

TEST(Adjoint, PassesValidation) {
  for (const char* ref : {"sl2", "sl3", "heisenberg3", "solvable3:5/3", "borel_sl3", "a1xa1"})
    EXPECT_TRUE(check_representation(adjoint_rep(algebra(ref))).ok) << ref;
}

TEST(Adjoint, Solvable3E1Eigenvalues) {
  const auto ev = rational_eigenvalues(adjoint_rep(algebra("solvable3:5/3")).action(0));
  EXPECT_TRUE(ev.split);
  ASSERT_EQ(ev.values.size(), 3U);
  EXPECT_EQ(ev.values[0].first, 0);
  EXPECT_EQ(ev.values[1].first, 1);
  EXPECT_EQ(ev.values[2].first, Rational(5, 3));
}

TEST(JordanHolder, Examples) {
  auto values = [](const char* ref) {
    std::vector<RatVector> out;
    for (const auto& c : jordan_holder_values(algebra(ref))) out.push_back(c.values());
    return out;
  };
  EXPECT_EQ(values("borel_sl2"), (std::vector<RatVector>{{0, 0}, {2, 0}}));
  EXPECT_EQ(values("solvable3:5/3"), (std::vector<RatVector>{{0, 0, 0}, {1, 0, 0}, {Rational(5, 3), 0, 0}}));
  EXPECT_EQ(values("abelian:3"), (std::vector<RatVector>(3, RatVector(3))));
  try {
    (void)jordan_holder_values(algebra("sl2"));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::NotSolvable);
  }
}

TEST(TwoRho, Examples) {
  EXPECT_EQ(two_rho(*algebra("solvable3:5/3")).values(), (RatVector{Rational(8, 3), 0, 0}));
  EXPECT_EQ(two_rho(*algebra("heisenberg3")).values(), RatVector(3));
  EXPECT_EQ(two_rho(*algebra("borel_sl2")).values(), (RatVector{2, 0}));
}

TEST(TwoRho, IsSumOfJordanHolderValues) {
  for (const char* ref : {"solvable3:5/3", "solvable3:-1", "borel_sl2", "borel_sl3", "borel_a1xa1", "heisenberg3"}) {
    const auto g = algebra(ref);
    Character s = Character::zero(*g);
    for (const auto& c : jordan_holder_values(g)) s = s + c;
    EXPECT_EQ(s, two_rho(*g)) << ref;
  }
}

TEST(TopExterior, Examples) {
  EXPECT_EQ(top_exterior_character(*algebra("sl2")), Character::zero(*algebra("sl2")));
  EXPECT_EQ(top_exterior_character(*algebra("solvable3:5/3")).values(), (RatVector{Rational(8, 3), 0, 0}));
  EXPECT_EQ(top_exterior_character(*algebra("abelian:2")).values(), RatVector(2));
}

TEST(TopExterior, MixedAlgebraUnsupported) {
  // sl2 ⊕ C: neither solvable nor semisimple
  const auto s = algebra("sl2");
  LieAlgebra::BracketTable t;
  for (const auto& [key, v] : s->bracket_table()) {
    RatVector w = v;
    w.push_back(0);
    t[key] = w;
  }
  const LieAlgebra mixed({"h", "e", "f", "z"}, t);
  try {
    (void)top_exterior_character(mixed);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::Unsupported);
  }
}

TEST(Subalgebra, RejectsNonClosedSubspace) {
  const auto g = algebra("sl2");
  const Subspace ef = Subspace::span(3, {basis(*g, 1), basis(*g, 2)});
  try {
    (void)subalgebra(*g, ef, {"e", "f"});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::NotASubalgebra);
  }
}

TEST(FromMatrices, RecoversSl2Constants) {
  const auto g = algebra("sl2");
  // [h,e] = 2e, [h,f] = -2f, [e,f] = h
  EXPECT_EQ(g->bracket_basis(0, 1), (RatVector{0, 2, 0}));
  EXPECT_EQ(g->bracket_basis(0, 2), (RatVector{0, 0, -2}));
  EXPECT_EQ(g->bracket_basis(1, 2), (RatVector{1, 0, 0}));
}
