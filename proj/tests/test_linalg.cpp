#include <gtest/gtest.h>

#include <random>

#include "support.hpp"

using namespace tspec;

namespace {

RatVector e(std::size_t n, std::size_t i) { return LieAlgebra::basis_vector(n, i); }

}  // namespace

TEST(Rational, ParsesAndPrintsCanonically) {
  EXPECT_EQ(to_string(parse_rational("6/4")), "3/2");
  EXPECT_EQ(to_string(parse_rational("-4/2")), "-2");
  EXPECT_EQ(to_string(parse_rational("+7")), "7");
  EXPECT_EQ(to_string(parse_rational("0/5")), "0");
}

TEST(Rational, RejectsMalformedText) {
  for (const char* bad : {"", "1/0", "a", "1/", "/2", "1.5", "1//2", "--1", " 1"}) {
    EXPECT_THROW(parse_rational(bad), Error) << bad;
  }
}

TEST(Rational, StringRoundTripIsIdentity) {
  std::mt19937 rng(7);
  std::uniform_int_distribution<long> num(-100000, 100000), den(1, 9999);
  for (int i = 0; i < 500; ++i) {
    Rational q(num(rng), den(rng));
    q.canonicalize();
    EXPECT_EQ(parse_rational(to_string(q)), q);
  }
}

TEST(Kernel, ZeroMatrixHasFullKernel) { EXPECT_EQ(kernel(RatMatrix(2, 3)).dim(), 3U); }

TEST(Kernel, OneRelation) {
  const Subspace k = kernel(RatMatrix{{1, 1}});
  ASSERT_EQ(k.dim(), 1U);
  EXPECT_TRUE(k.contains(RatVector{1, -1}));
}

TEST(Kernel, IdentityHasZeroKernel) { EXPECT_EQ(kernel(RatMatrix::identity(4)).dim(), 0U); }

TEST(Intersect, CoordinatePlanes) {
  const Subspace a = Subspace::span(3, {e(3, 0), e(3, 1)});
  const Subspace b = Subspace::span(3, {e(3, 1), e(3, 2)});
  const Subspace c = intersect(a, b);
  EXPECT_EQ(c, Subspace::span(3, {e(3, 1)}));
  EXPECT_EQ(intersect(a, a), a);
  EXPECT_EQ(intersect(Subspace::span(3, {e(3, 0)}), Subspace::span(3, {e(3, 1)})).dim(), 0U);
}

TEST(Intersect, AmbientMismatchThrows) {
  try {
    (void)intersect(Subspace::full(2), Subspace::full(3));
    FAIL();
  } catch (const Error& err) {
    EXPECT_EQ(err.code(), Errc::AmbientMismatch);
  }
}

TEST(GeneralizedKernel, Examples) {
  EXPECT_EQ(generalized_kernel(RatMatrix{{0, 1}, {0, 0}}, 2).dim(), 2U);
  EXPECT_EQ(generalized_kernel(RatMatrix{{0, 1}, {0, 0}}, 1).dim(), 1U);
  EXPECT_EQ(generalized_kernel(RatMatrix::identity(3), 5).dim(), 0U);
  EXPECT_EQ(generalized_kernel(RatMatrix::diagonal({0, 1}), 3), Subspace::span(2, {e(2, 0)}));
  try {
    (void)generalized_kernel(RatMatrix(2, 3), 1);
    FAIL();
  } catch (const Error& err) {
    EXPECT_EQ(err.code(), Errc::NotSquare);
  }
}

TEST(Eigenvalues, DiagonalSplits) {
  const auto r = rational_eigenvalues(RatMatrix::diagonal({Rational(1, 2), Rational(1, 2), -3}));
  EXPECT_TRUE(r.split);
  ASSERT_EQ(r.values.size(), 2U);
  EXPECT_EQ(r.values[0], std::make_pair(Rational(-3), std::size_t{1}));
  EXPECT_EQ(r.values[1], std::make_pair(Rational(1, 2), std::size_t{2}));
}

TEST(Eigenvalues, RotationDoesNotSplit) {
  const auto r = rational_eigenvalues(RatMatrix{{0, -1}, {1, 0}});
  EXPECT_FALSE(r.split);
  EXPECT_TRUE(r.values.empty());
}

TEST(Eigenvalues, ZeroMatrix) {
  const auto r = rational_eigenvalues(RatMatrix(4, 4));
  EXPECT_TRUE(r.split);
  ASSERT_EQ(r.values.size(), 1U);
  EXPECT_EQ(r.values[0], std::make_pair(Rational(0), std::size_t{4}));
}

TEST(Eigenvalues, NonSquareThrows) {
  try {
    (void)rational_eigenvalues(RatMatrix(2, 3));
    FAIL();
  } catch (const Error& err) {
    EXPECT_EQ(err.code(), Errc::NotSquare);
  }
}

TEST(Eigenvalues, TriangularMatricesSplitWithDiagonal) {
  std::mt19937 rng(11);
  for (int trial = 0; trial < 40; ++trial) {
    const std::size_t n = 1 + trial % 5;
    RatMatrix m = support::random_matrix(rng, n, n);
    for (std::size_t r = 0; r < n; ++r)
      for (std::size_t c = 0; c < r; ++c) m(r, c) = 0;
    const auto res = rational_eigenvalues(m);
    EXPECT_TRUE(res.split);
    std::size_t total = 0;
    for (const auto& [value, mult] : res.values) {
      std::size_t count = 0;
      for (std::size_t i = 0; i < n; ++i) count += m(i, i) == value ? 1 : 0;
      EXPECT_EQ(count, mult);
      total += mult;
    }
    EXPECT_EQ(total, n);
  }
}

TEST(Eigenvalues, MultiplicitiesSumToDimensionIffSplit) {
  std::mt19937 rng(12);
  for (int trial = 0; trial < 40; ++trial) {
    const std::size_t n = 1 + trial % 4;
    const auto res = rational_eigenvalues(support::random_matrix(rng, n, n));
    std::size_t total = 0;
    for (const auto& [value, mult] : res.values) total += mult;
    EXPECT_EQ(total == n, res.split);
  }
}

TEST(CharacteristicPolynomial, CompanionCoefficients) {
  // x^2 - 3x + 2 for diag(1, 2)
  const Polynomial p = characteristic_polynomial(RatMatrix::diagonal({1, 2}));
  ASSERT_EQ(p.size(), 3U);
  EXPECT_EQ(p[0], 2);
  EXPECT_EQ(p[1], -3);
  EXPECT_EQ(p[2], 1);
}

TEST(Rank, RankNullityOnRandomMatrices) {
  std::mt19937 rng(3);
  for (int trial = 0; trial < 60; ++trial) {
    const std::size_t rows = 1 + trial % 6, cols = 1 + (trial / 6) % 7;
    const RatMatrix m = support::random_matrix(rng, rows, cols, 0.4);
    EXPECT_EQ(rank(m) + kernel(m).dim(), cols);
    EXPECT_EQ(rank(m), rank(m.transpose()));
    EXPECT_EQ(rank(m), oracle::rank(support::to_oracle(m)));
  }
}

TEST(Intersect, CommutativeAndAssociative) {
  std::mt19937 rng(5);
  for (int trial = 0; trial < 30; ++trial) {
    const Subspace a = image(support::random_matrix(rng, 5, 3, 0.6));
    const Subspace b = image(support::random_matrix(rng, 5, 3, 0.6));
    const Subspace c = image(support::random_matrix(rng, 5, 4, 0.6));
    EXPECT_EQ(intersect(a, b), intersect(b, a));
    EXPECT_EQ(intersect(intersect(a, b), c), intersect(a, intersect(b, c)));
    EXPECT_EQ(intersect(a, b).dim() + sum(a, b).dim(), a.dim() + b.dim());
  }
}

TEST(Subspace, EqualityIsMutualContainment) {
  const Subspace a = Subspace::span(2, {RatVector{1, 1}});
  const Subspace b = Subspace::span(2, {RatVector{2, 2}});
  EXPECT_EQ(a, b);
  EXPECT_FALSE(a == Subspace::full(2));
  const auto coords = Subspace::full(2).coordinates(RatVector{3, 4});
  ASSERT_TRUE(coords.has_value());
}

TEST(Matrix, KroneckerAndBlocks) {
  const RatMatrix a{{1, 2}, {3, 4}};
  const RatMatrix k = kronecker(a, RatMatrix::identity(2));
  EXPECT_EQ(k.rows(), 4U);
  EXPECT_EQ(k(2, 0), 3);
  EXPECT_EQ(k(3, 1), 3);
  EXPECT_EQ(block_diagonal(a, a)(3, 3), 4);
  EXPECT_EQ(commutator(a, a), RatMatrix(2, 2));
  EXPECT_EQ(power(RatMatrix{{0, 1}, {0, 0}}, 2), RatMatrix(2, 2));
}
