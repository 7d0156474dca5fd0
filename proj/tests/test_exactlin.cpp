#include <gtest/gtest.h>

#include <limits>

#include "ncx/exactlin.hpp"
#include "ncx/random.hpp"
#include "oracles.hpp"

using namespace ncx;

namespace {

const Ring F5 = Ring::prime_field(5);
const Ring F7 = Ring::prime_field(7);
const Ring Z = Ring::integers();

Matrix m(Ring r, std::size_t rows, std::size_t cols, std::vector<Scalar> e) {
  return Matrix(r, rows, cols, std::move(e));
}

} // namespace

TEST(Ring, RejectsNonPrimeModulus) {
  EXPECT_THROW(Ring::prime_field(4), PreconditionError);
  EXPECT_THROW(Ring::prime_field(1), PreconditionError);
  EXPECT_NO_THROW(Ring::prime_field(97));
}

TEST(Ring, ReducesToCanonicalRepresentatives) {
  EXPECT_EQ(F5.reduce(-1), 4);
  EXPECT_EQ(F5.add(3, 4), 2);
  EXPECT_EQ(F5.mul(3, 4), 2);
  EXPECT_EQ(F5.inverse(2), 3);
  EXPECT_THROW(F5.inverse(0), PreconditionError);
  EXPECT_EQ(Z.reduce(-7), -7);
}

TEST(Ring, IntegerOverflowIsReported) {
  const Scalar big = std::numeric_limits<Scalar>::max();
  EXPECT_THROW(Z.add(big, 1), OverflowError);
  EXPECT_THROW(Z.mul(big, 2), OverflowError);
  EXPECT_THROW(Z.neg(std::numeric_limits<Scalar>::min()), OverflowError);
}

TEST(Matrix, IdentityTimesIdentity) {
  EXPECT_EQ(Matrix::identity(F5, 2) * Matrix::identity(F5, 2), Matrix::identity(F5, 2));
}

TEST(Matrix, ProductMatchesSchoolbookOracle) {
  const auto a = m(F5, 2, 2, {1, 1, 0, 1});
  const auto b = m(F5, 2, 2, {1, 0, 1, 1});
  const auto expected = oracle::mul(oracle::to_mat(a), oracle::to_mat(b), 2, 2, 5);
  EXPECT_EQ(oracle::to_mat(a * b), expected);
  EXPECT_EQ(a * b, m(F5, 2, 2, {2, 1, 1, 1}));
}

TEST(Matrix, RandomProductsMatchOracle) {
  Rng rng(11);
  for (int t = 0; t < 50; ++t) {
    const auto r = rng.uniform(0, 4), k = rng.uniform(0, 4), c = rng.uniform(0, 4);
    const auto a = random_matrix(rng, F7, r, k);
    const auto b = random_matrix(rng, F7, k, c);
    EXPECT_EQ(oracle::to_mat(a * b), oracle::mul(oracle::to_mat(a), oracle::to_mat(b), k, c, 7));
  }
}

TEST(Matrix, ZeroAnnihilates) {
  Rng rng(3);
  const auto big = random_matrix(rng, F5, 3, 4);
  EXPECT_EQ(Matrix::zero(F5, 2, 3) * big, Matrix::zero(F5, 2, 4));
}

TEST(Matrix, AdditiveLaws) {
  Rng rng(5);
  const auto a = random_matrix(rng, F5, 3, 2);
  EXPECT_EQ(a + Matrix::zero(F5, 3, 2), a);
  EXPECT_TRUE((a + (-a)).is_zero());
  EXPECT_EQ(m(F5, 1, 1, {3}) + m(F5, 1, 1, {4}), m(F5, 1, 1, {2}));
}

TEST(Matrix, ShapeAndRingChecks) {
  EXPECT_THROW(Matrix::identity(F5, 2) * Matrix::identity(F5, 3), DimensionError);
  EXPECT_THROW(Matrix::identity(F5, 2) + Matrix::identity(F5, 3), DimensionError);
  EXPECT_THROW(Matrix::identity(F5, 2) * Matrix::identity(F7, 2), RingMismatch);
  EXPECT_THROW(m(F5, 2, 2, {1, 2, 3}), DimensionError);
}

TEST(Matrix, IntegerArithmeticOverflowPropagates) {
  const Scalar big = std::numeric_limits<Scalar>::max() / 2 + 1;
  const auto a = m(Z, 1, 2, {big, big});
  const auto b = m(Z, 2, 1, {1, 1});
  EXPECT_THROW(a * b, OverflowError);
}

TEST(Rank, Examples) {
  EXPECT_EQ(rank(Matrix::zero(F5, 3, 3)), 0u);
  EXPECT_EQ(rank(Matrix::identity(F7, 4)), 4u);
  EXPECT_EQ(rank(m(F5, 2, 2, {1, 2, 2, 4})), 1u);
  EXPECT_THROW(rank(Matrix::identity(Z, 2)), PreconditionError);
}

TEST(Rank, RandomMatricesMatchEnumerationOracle) {
  Rng rng(17);
  for (int t = 0; t < 60; ++t) {
    const auto a = random_matrix(rng, F5, rng.uniform(0, 4), rng.uniform(0, 4));
    EXPECT_EQ(rank(a), oracle::rank(a)) << a.to_string();
  }
}

TEST(Nullspace, ColumnsSpanTheKernel) {
  Rng rng(23);
  for (int t = 0; t < 40; ++t) {
    const auto a = random_matrix(rng, F5, rng.uniform(0, 4), rng.uniform(0, 4));
    const auto k = nullspace(a);
    EXPECT_EQ(k.rows(), a.cols());
    EXPECT_EQ(k.cols(), a.cols() - rank(a));
    EXPECT_TRUE((a * k).is_zero());
    EXPECT_EQ(rank(k), k.cols());
  }
}

TEST(Block, Assembly) {
  const auto i1 = Matrix::identity(F5, 1);
  const auto z1 = Matrix::zero(F5, 1, 1);
  EXPECT_EQ(block(i1, z1, z1, i1), Matrix::identity(F5, 2));
  const auto d = m(F5, 1, 1, {2});
  const auto x = m(F5, 1, 1, {3});
  EXPECT_EQ(block(-d, z1, x, d), m(F5, 2, 2, {3, 0, 3, 2}));
}

TEST(Block, EmptyBlocksLeaveTheNonzeroBlock) {
  const auto a = m(F5, 2, 2, {1, 2, 3, 4});
  const auto e = block(a, Matrix::zero(F5, 2, 0), Matrix::zero(F5, 0, 2), Matrix::zero(F5, 0, 0));
  EXPECT_EQ(e, a);
}

TEST(Block, MismatchedBlockShapesThrow) {
  EXPECT_THROW(block(Matrix::identity(F5, 1), Matrix::zero(F5, 2, 1), Matrix::zero(F5, 1, 1),
                     Matrix::identity(F5, 1)),
               DimensionError);
}

TEST(Block, SubBlockRecoversPieces) {
  Rng rng(9);
  const auto a = random_matrix(rng, F5, 2, 3);
  const auto b = random_matrix(rng, F5, 2, 1);
  const auto c = random_matrix(rng, F5, 1, 3);
  const auto d = random_matrix(rng, F5, 1, 1);
  const auto full = block(a, b, c, d);
  EXPECT_EQ(sub_block(full, 0, 0, 2, 3), a);
  EXPECT_EQ(sub_block(full, 0, 3, 2, 1), b);
  EXPECT_EQ(sub_block(full, 2, 0, 1, 3), c);
  EXPECT_EQ(sub_block(full, 2, 3, 1, 1), d);
  EXPECT_EQ(hcat(a, b), sub_block(full, 0, 0, 2, 4));
  EXPECT_EQ(vcat(a, c), sub_block(full, 0, 0, 3, 3));
}

TEST(RandomInvertible, InverseIsTwoSided) {
  Rng rng(31);
  for (const Ring& r : {F5, Z}) {
    for (std::size_t n = 0; n <= 4; ++n) {
      const auto p = random_invertible(rng, r, n);
      EXPECT_EQ(p.m * p.inverse, Matrix::identity(r, n));
      EXPECT_EQ(p.inverse * p.m, Matrix::identity(r, n));
    }
  }
}
