#include <gtest/gtest.h>

#include "ncx/lax.hpp"
#include "ncx/random.hpp"

using namespace ncx;

namespace {

const Ring F5 = Ring::prime_field(5);
const Ring Z = Ring::integers();

ChainMap random_map(const Ring& r, std::uint64_t seed) {
  const auto a = random_complex(r, 3, 4, 3, derive_seed(seed, 1));
  const auto b = random_complex(r, 3, 4, 3, derive_seed(seed, 2));
  return random_chain_map(a, b, derive_seed(seed, 3));
}

} // namespace

TEST(LArr, IdentityIsAUnit) {
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    const auto x = random_map(F5, seed);
    const auto y = random_map(F5, seed + 100);
    const auto f = random_larr_morphism(x, y, seed);
    ASSERT_TRUE(validate_larr_morphism(x, y, f).pass);
    EXPECT_EQ(compose_larr(f, larr_identity(x)), f);
    EXPECT_EQ(compose_larr(larr_identity(y), f), f);
    EXPECT_EQ(larr_identity(x).fhat, Homotopy::zero(x.source(), x.target()));
  }
}

TEST(LArr, CompositesAreValidAndAssociative) {
  for (const Ring& r : {F5, Z}) {
    for (std::uint64_t seed = 0; seed < 10; ++seed) {
      const auto x = random_map(r, seed);
      const auto y = random_map(r, seed + 100);
      const auto z = random_map(r, seed + 200);
      const auto w = random_map(r, seed + 300);
      const auto f = random_larr_morphism(x, y, seed + 1);
      const auto g = random_larr_morphism(y, z, seed + 2);
      const auto h = random_larr_morphism(z, w, seed + 3);
      EXPECT_TRUE(validate_larr_morphism(x, z, compose_larr(g, f)).pass);
      EXPECT_EQ(compose_larr(h, compose_larr(g, f)), compose_larr(compose_larr(h, g), f));
    }
  }
}

TEST(LArr, PerturbedHomotopyComponentFails) {
  // On the string 1 -> 1 with d = (1, 0) a homotopy (c, e) has boundary (c, c).
  const PeriodicComplex l(F5, {1, 1}, {Matrix(F5, 1, 1, {1}), Matrix(F5, 1, 1, {0})});
  const auto x = identity_map(l);
  const auto f = larr_identity(x);
  ASSERT_TRUE(validate_larr_morphism(x, x, f).pass);
  const LArrMorphism broken{f.f0, f.f1,
                            Homotopy(l, l, {Matrix(F5, 1, 1, {1}), Matrix(F5, 1, 1, {0})})};
  EXPECT_FALSE(validate_larr_morphism(x, x, broken).pass);
}

TEST(LArr, StrictSquareHasZeroHomotopy) {
  const auto a = random_complex(F5, 3, 4, 3, 1);
  const auto b = random_complex(F5, 3, 4, 3, 2);
  const auto x = random_chain_map(a, b, 3);
  const auto f = strict_square(x, x, identity_map(a), identity_map(b));
  EXPECT_EQ(f, larr_identity(x));
}

TEST(LArr2, ZeroBetweenEqualMorphisms) {
  const auto x = random_map(F5, 10);
  const auto y = random_map(F5, 11);
  const auto f = random_larr_morphism(x, y, 12);
  const LArr2Morphism zero{Homotopy::zero(x.source(), y.source()),
                           Homotopy::zero(x.target(), y.target())};
  EXPECT_TRUE(validate_larr_2morphism(x, y, zero, f, f));
}

TEST(LArr2, ConstructedFixturesPass) {
  for (const Ring& r : {F5, Z}) {
    for (std::uint64_t seed = 0; seed < 10; ++seed) {
      const auto x = random_map(r, seed + 20);
      const auto y = random_map(r, seed + 40);
      const auto f = random_larr_morphism(x, y, seed);
      const auto fix = random_larr_2morphism(x, y, f, seed);
      EXPECT_TRUE(validate_larr_morphism(x, y, fix.g).pass);
      EXPECT_TRUE(validate_larr_2morphism(x, y, fix.alpha, f, fix.g));
    }
  }
}

TEST(LArr2, PerturbedComponentFails) {
  const PeriodicComplex l(F5, {1, 1}, {Matrix(F5, 1, 1, {1}), Matrix(F5, 1, 1, {0})});
  const auto x = identity_map(l);
  const auto f = larr_identity(x);
  const LArr2Morphism zero{Homotopy::zero(l, l), Homotopy::zero(l, l)};
  ASSERT_TRUE(validate_larr_2morphism(x, x, zero, f, f));
  const LArr2Morphism bad{Homotopy::zero(l, l),
                          Homotopy(l, l, {Matrix(F5, 1, 1, {1}), Matrix(F5, 1, 1, {0})})};
  EXPECT_FALSE(validate_larr_2morphism(x, x, bad, f, f));
}

TEST(LNChain, DegeneracyThenFaceRestores) {
  const auto c = random_chain(F5, 3, 3, 4, 3, 9);
  ASSERT_TRUE(validate_chain(c).pass);
  for (std::size_t k = 0; k <= c.length(); ++k) {
    const auto d = ln_degeneracy(k, c);
    EXPECT_EQ(d.length(), c.length() + 1);
    EXPECT_EQ(ln_face(k, d), c);
    EXPECT_EQ(ln_face(k + 1, d), c);
  }
}

TEST(LNChain, InnerFaceComposes) {
  const auto c = random_chain(F5, 3, 2, 4, 3, 10);
  const auto f = ln_face(1, c);
  ASSERT_EQ(f.length(), 1u);
  EXPECT_EQ(f.maps[0], compose(c.maps[1], c.maps[0]));
  EXPECT_EQ(f.complexes[0], c.complexes[0]);
  EXPECT_EQ(f.complexes[1], c.complexes[2]);
}

TEST(LNChain, OuterFacesDropEnds) {
  const auto c = random_chain(F5, 3, 3, 4, 3, 11);
  const auto first = ln_face(0, c);
  EXPECT_EQ(first.complexes.front(), c.complexes[1]);
  const auto last = ln_face(3, c);
  EXPECT_EQ(last.complexes.back(), c.complexes[2]);
}

TEST(LNChain, FaceOfZeroChainIsZero) {
  const auto z = PeriodicComplex::zero(F5, 3);
  const LNChain c{{z, z, z}, {zero_map(z, z), zero_map(z, z)}};
  for (std::size_t k = 0; k <= 2; ++k) {
    const auto f = ln_face(k, c);
    for (const auto& x : f.complexes) EXPECT_TRUE(x.is_zero());
  }
}

TEST(LNChain, MismatchedChainFailsValidation) {
  const auto a = random_complex(F5, 3, 4, 3, 1);
  const auto b = random_complex(F5, 3, 4, 3, 2);
  const LNChain bad{{a, b}, {identity_map(a)}};
  EXPECT_FALSE(validate_chain(bad).pass);
}
