#include <gtest/gtest.h>

#include "ncx/ncomplex.hpp"
#include "ncx/random.hpp"
#include "oracles.hpp"

using namespace ncx;

namespace {

const Ring F5 = Ring::prime_field(5);
const Ring Z = Ring::integers();

Matrix s(Ring r, Scalar v) { return Matrix(r, 1, 1, {v}); }

PeriodicComplex line(Ring r, std::vector<Scalar> diffs) {
  std::vector<Matrix> ds;
  for (auto v : diffs) ds.push_back(s(r, v));
  return PeriodicComplex(r, std::vector<std::size_t>(diffs.size(), 1), std::move(ds));
}

} // namespace

TEST(Mod, NormalisesNegativeDegrees) {
  EXPECT_EQ(mod(-1, 3), 2u);
  EXPECT_EQ(mod(7, 3), 1u);
  EXPECT_EQ(mod(-6, 3), 0u);
}

TEST(ValidateComplex, ZeroComplexPasses) {
  for (std::size_t n = 1; n <= 5; ++n) EXPECT_TRUE(validate_complex(PeriodicComplex::zero(F5, n)).pass);
}

TEST(ValidateComplex, ThreeStringWithAZeroPasses) {
  const auto x = line(F5, {1, 1, 0});
  // brute force every cyclic 3-fold composite
  for (std::size_t i = 0; i < 3; ++i) {
    const auto comp = oracle::run(x, i, 3);
    EXPECT_EQ(comp[0][0], 0);
  }
  EXPECT_TRUE(validate_complex(x).pass);
}

TEST(ValidateComplex, SquareOfIdentityFailsAtZero) {
  const auto r = validate_complex(line(F5, {1, 1}));
  EXPECT_FALSE(r.pass);
  ASSERT_TRUE(r.index.has_value());
  EXPECT_EQ(*r.index, 0u);
}

TEST(PeriodicComplex, ConstructorChecksShapes) {
  EXPECT_THROW(PeriodicComplex(F5, {1, 2}, {s(F5, 1), s(F5, 1)}), DimensionError);
  EXPECT_THROW(PeriodicComplex(F5, {1, 1}, {s(F5, 1)}), DimensionError);
  EXPECT_THROW(PeriodicComplex(F5, {1, 1}, {s(F5, 1), s(Z, 1)}), RingMismatch);
}

TEST(ValidateChainMap, IdentityAndZeroPass) {
  const auto x = random_complex(F5, 3, 4, 3, 1);
  const auto y = random_complex(F5, 3, 4, 3, 2);
  EXPECT_TRUE(validate_chain_map(identity_map(x)).pass);
  EXPECT_TRUE(validate_chain_map(zero_map(x, y)).pass);
}

TEST(ValidateChainMap, PerturbedComponentFails) {
  const auto x = line(F5, {1, 0});
  std::vector<Matrix> comps{s(F5, 2), s(F5, 1)};
  EXPECT_FALSE(validate_chain_map(ChainMap(x, x, comps)).pass);
}

TEST(HomotopyBoundary, ZeroHomotopyGivesZero) {
  const auto x = random_complex(F5, 3, 4, 3, 5);
  for (const auto& m : homotopy_boundary(Homotopy::zero(x, x))) EXPECT_TRUE(m.is_zero());
}

TEST(HomotopyBoundary, ZeroDifferentialGivesZero) {
  const auto x = line(F5, {0, 0});
  const Homotopy h(x, x, {s(F5, 3), s(F5, 4)});
  for (const auto& m : homotopy_boundary(h)) EXPECT_TRUE(m.is_zero());
}

TEST(HomotopyBoundary, OneByOneExpansion) {
  // N = 2: boundary_i = d h_{i+1} + h_i d, with h_i : X^{i-1} -> Y^i.
  const Scalar c = 3, e = 4;
  const auto x = line(F5, {1, 0});
  const Homotopy h(x, x, {s(F5, c), s(F5, e)});
  const Scalar d0 = 1, d1 = 0;
  const Scalar b0 = d1 * e + c * d0;
  const Scalar b1 = d0 * c + e * d1;
  const auto b = homotopy_boundary(h);
  EXPECT_EQ(b[0], s(F5, b0 % 5));
  EXPECT_EQ(b[1], s(F5, b1 % 5));
}

TEST(HomotopyBoundary, ThreePeriodExpansionMatchesOracle) {
  // N = 3: three terms per degree, composed naively.
  const auto x = random_complex(F5, 3, 4, 3, 41);
  const auto y = random_complex(F5, 3, 4, 3, 42);
  Rng rng(43);
  const auto h = random_homotopy(rng, x, y);
  const auto b = homotopy_boundary(h);
  for (std::size_t i = 0; i < 3; ++i) {
    std::vector<std::vector<long long>> acc(y.dims()[i], std::vector<long long>(x.dims()[i], 0));
    for (std::size_t k = 1; k <= 3; ++k) {
      const std::size_t at = (i + k) % 3;
      auto t = oracle::mul(oracle::to_mat(h.at(static_cast<long long>(at))), oracle::run(x, i, k - 1),
                           x.dims()[(i + k - 1) % 3], x.dims()[i], 5);
      t = oracle::mul(oracle::run(y, at, 3 - k), t, y.dims()[at], x.dims()[i], 5);
      for (std::size_t r = 0; r < acc.size(); ++r)
        for (std::size_t col = 0; col < acc[r].size(); ++col) acc[r][col] = (acc[r][col] + t[r][col]) % 5;
    }
    EXPECT_EQ(oracle::to_mat(b[i]), acc) << "degree " << i;
  }
}

TEST(IsHomotopy, Examples) {
  const auto x = random_complex(F5, 3, 4, 3, 7);
  const auto y = random_complex(F5, 3, 4, 3, 8);
  const auto f = random_chain_map(x, y, 9);
  EXPECT_TRUE(is_homotopy(f, f, Homotopy::zero(x, y)));
  const auto fixture = random_map_with_homotopy(x, y, 10);
  EXPECT_TRUE(is_homotopy(fixture.f, fixture.g, fixture.h));
  EXPECT_TRUE(validate_homotopy({fixture.f, fixture.g, fixture.h}).pass);
}

TEST(IsHomotopy, ZeroIsNotHomotopicToIdentityWithZeroWitness) {
  const auto x = string_complex(F5, 3, 0, 2);
  EXPECT_FALSE(is_homotopy(zero_map(x, x), identity_map(x), Homotopy::zero(x, x)));
  const auto z = PeriodicComplex::zero(F5, 3);
  EXPECT_TRUE(is_homotopy(zero_map(z, z), identity_map(z), Homotopy::zero(z, z)));
}

TEST(IsHomotopy, RandomFixturesOverIntegers) {
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    const auto x = random_complex(Z, 4, 4, 3, seed);
    const auto y = random_complex(Z, 4, 4, 3, seed + 100);
    const auto fixture = random_map_with_homotopy(x, y, seed);
    EXPECT_TRUE(validate_chain_map(fixture.f).pass);
    EXPECT_TRUE(is_homotopy(fixture.f, fixture.g, fixture.h));
  }
}

TEST(Compose, UnitsAndZero) {
  const auto x = random_complex(F5, 4, 4, 3, 11);
  const auto y = random_complex(F5, 4, 4, 3, 12);
  const auto f = random_chain_map(x, y, 13);
  EXPECT_EQ(compose(identity_map(y), f), f);
  EXPECT_EQ(compose(f, identity_map(x)), f);
  EXPECT_EQ(compose(f, zero_map(x, x)), zero_map(x, y));
}

TEST(Compose, RandomCompositesAreChainMaps) {
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    const auto x = random_complex(F5, 3, 4, 3, seed);
    const auto y = random_complex(F5, 3, 4, 3, seed + 50);
    const auto w = random_complex(F5, 3, 4, 3, seed + 90);
    const auto f = random_chain_map(x, y, seed);
    const auto g = random_chain_map(y, w, seed + 1);
    EXPECT_TRUE(validate_chain_map(f).pass);
    EXPECT_TRUE(validate_chain_map(compose(g, f)).pass);
  }
}

TEST(Compose, MismatchedComplexesThrow) {
  const auto x = random_complex(F5, 3, 4, 3, 1);
  const auto y = string_complex(F5, 3, 0, 1);
  EXPECT_THROW(compose(identity_map(x), identity_map(y)), Error);
}

TEST(Whisker, BoundaryCommutesWithWhiskering) {
  const auto x = random_complex(F5, 3, 4, 3, 61);
  const auto y = random_complex(F5, 3, 4, 3, 62);
  const auto w = random_complex(F5, 3, 4, 3, 63);
  Rng rng(64);
  const auto h = random_homotopy(rng, x, y);
  const auto r = random_chain_map(y, w, 65);
  const auto s = random_chain_map(w, x, 66);
  EXPECT_EQ(boundary_map(whisker(r, h)), compose(r, boundary_map(h)));
  EXPECT_EQ(boundary_map(whisker(h, s)), compose(boundary_map(h), s));
}

TEST(Generator, DeterministicAndValid) {
  for (std::size_t n = 1; n <= 6; ++n)
    for (std::uint64_t seed = 0; seed < 30; ++seed) {
      const auto x = random_complex(F5, n, 6, 4, seed);
      EXPECT_TRUE(validate_complex(x).pass);
      EXPECT_EQ(x, random_complex(F5, n, 6, 4, seed));
      for (auto d : x.dims()) EXPECT_LE(d, 4u);
    }
  EXPECT_TRUE(random_complex(F5, 4, 0, 4, 1).is_zero());
  EXPECT_EQ(random_complex(F5, 4, 0, 4, 1), PeriodicComplex::zero(F5, 4));
}

TEST(Generator, EmptySourceGivesEmptyMap) {
  const auto z = PeriodicComplex::zero(F5, 3);
  const auto y = random_complex(F5, 3, 4, 3, 2);
  const auto f = random_chain_map(z, y, 3);
  EXPECT_EQ(f, zero_map(z, y));
}

TEST(Homology, Examples) {
  EXPECT_EQ(homology_dims_2(PeriodicComplex::zero(F5, 2)), (std::vector<std::size_t>{0, 0}));
  EXPECT_EQ(homology_dims_2(line(F5, {1, 0})), (std::vector<std::size_t>{0, 0}));
  EXPECT_EQ(homology_dims_2(line(F5, {0, 0})), (std::vector<std::size_t>{1, 1}));
}

TEST(PHomology, Examples) {
  const auto z = PeriodicComplex::zero(F5, 3);
  for (std::size_t p = 1; p < 3; ++p)
    for (long long i = 0; i < 3; ++i) EXPECT_EQ(p_homology_dim(z, p, i), 0u);
  const auto s1 = string_complex(F5, 3, 0, 1);
  EXPECT_EQ(s1.dims(), (std::vector<std::size_t>{1, 0, 0}));
  EXPECT_EQ(p_homology_dim(s1, 1, 0), 1u);
  EXPECT_EQ(oracle::p_homology(s1, 1, 0), 1u);
}

TEST(PHomology, FullStringsAreExact) {
  for (std::size_t n = 2; n <= 5; ++n)
    for (std::size_t start = 0; start < n; ++start) {
      const auto x = string_complex(F5, n, start, n);
      for (std::size_t p = 1; p < n; ++p)
        for (std::size_t i = 0; i < n; ++i) {
          EXPECT_EQ(oracle::p_homology(x, p, i), 0u);
          EXPECT_EQ(p_homology_dim(x, p, static_cast<long long>(i)), 0u);
        }
    }
}

TEST(PHomology, RandomComplexesMatchEnumerationOracle) {
  for (std::uint64_t seed = 0; seed < 25; ++seed) {
    const std::size_t n = 2 + seed % 3;
    const auto x = random_complex(F5, n, 4, 3, seed);
    for (std::size_t p = 1; p < n; ++p)
      for (std::size_t i = 0; i < n; ++i)
        EXPECT_EQ(p_homology_dim(x, p, static_cast<long long>(i)), oracle::p_homology(x, p, i))
            << "seed " << seed << " p " << p << " i " << i;
  }
}

TEST(HomotopyEquivalence, Examples) {
  const auto x = random_complex(F5, 2, 4, 3, 5);
  EXPECT_TRUE(are_homotopy_equivalent_2(x, x));
  EXPECT_TRUE(are_homotopy_equivalent_2(line(F5, {1, 0}), PeriodicComplex::zero(F5, 2)));
  EXPECT_FALSE(are_homotopy_equivalent_2(line(F5, {0, 0}), PeriodicComplex::zero(F5, 2)));
}

TEST(DirectSum, DimsAddAndValidityIsKept) {
  const auto a = random_complex(F5, 3, 3, 2, 1);
  const auto b = random_complex(F5, 3, 3, 2, 2);
  const auto sum = direct_sum(a, b);
  for (std::size_t i = 0; i < 3; ++i) EXPECT_EQ(sum.dims()[i], a.dims()[i] + b.dims()[i]);
  EXPECT_TRUE(validate_complex(sum).pass);
}
