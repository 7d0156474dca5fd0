#include <gtest/gtest.h>

#include "ncx/random.hpp"
#include "ncx/simplicial.hpp"
#include "ncx/suites.hpp"

using namespace ncx;

namespace {

const Ring F5 = Ring::prime_field(5);

Matrix s(Scalar v) { return Matrix(F5, 1, 1, {v}); }

PeriodicComplex line(std::vector<Scalar> diffs) {
  std::vector<Matrix> ds;
  for (auto v : diffs) ds.push_back(s(v));
  return PeriodicComplex(F5, std::vector<std::size_t>(diffs.size(), 1), std::move(ds));
}

} // namespace

TEST(Face, ZeroComplexStaysZero) {
  const auto z = PeriodicComplex::zero(F5, 4);
  for (std::size_t i = 0; i < 4; ++i) EXPECT_EQ(face(i, z), PeriodicComplex::zero(F5, 3));
}

TEST(Face, ComposesAcrossTheGap) {
  const auto f = face(1, line({1, 1, 0}));
  EXPECT_EQ(f.dims(), (std::vector<std::size_t>{1, 1}));
  EXPECT_EQ(f.d(0), s(1));
  EXPECT_EQ(f.d(1), s(0));
}

TEST(Face, SingleSurvivorCarriesTheFullCycle) {
  const auto f = face(0, line({1, 0}));
  EXPECT_EQ(f.period(), 1u);
  EXPECT_TRUE(f.d(0).is_zero());
  EXPECT_TRUE(validate_complex(f).pass);
}

TEST(Face, OutputValidOnRandomFourComplexes) {
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    const auto x = random_complex(F5, 4, 5, 3, seed);
    for (std::size_t i = 0; i < 4; ++i) EXPECT_TRUE(validate_complex(face(i, x)).pass);
  }
}

TEST(Face, RangeChecks) {
  EXPECT_THROW(face(0, PeriodicComplex::zero(F5, 1)), PreconditionError);
  EXPECT_THROW(face(3, PeriodicComplex::zero(F5, 3)), PreconditionError);
  EXPECT_THROW(degeneracy(3, PeriodicComplex::zero(F5, 3)), PreconditionError);
  EXPECT_THROW(tau_face(0, PeriodicComplex::zero(F5, 3)), PreconditionError);
}

TEST(FaceMap, IdentityAndValidity) {
  const auto x = random_complex(F5, 4, 5, 3, 1);
  const auto y = random_complex(F5, 4, 5, 3, 2);
  const auto f = random_chain_map(x, y, 3);
  for (std::size_t i = 0; i < 4; ++i) {
    EXPECT_EQ(face_map(i, identity_map(x)), identity_map(face(i, x)));
    EXPECT_TRUE(validate_chain_map(face_map(i, f)).pass);
    EXPECT_EQ(degeneracy_map(i, identity_map(x)), identity_map(degeneracy(i, x)));
  }
}

TEST(Degeneracy, InsertsIdentity) {
  EXPECT_EQ(degeneracy(0, PeriodicComplex::zero(F5, 3)), PeriodicComplex::zero(F5, 4));
  const auto d = degeneracy(0, line({2, 3}));
  EXPECT_EQ(d.dims(), (std::vector<std::size_t>{1, 1, 1}));
  EXPECT_EQ(d.d(0), s(1));
  EXPECT_EQ(d.d(1), s(2));
  EXPECT_EQ(d.d(2), s(3));
}

TEST(Degeneracy, OutputValid) {
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    const auto x = random_complex(F5, 3, 5, 3, seed);
    for (std::size_t j = 0; j < 3; ++j) EXPECT_TRUE(validate_complex(degeneracy(j, x)).pass);
  }
}

TEST(Tau, ZeroComplexGivesZeroMap) {
  const auto z = PeriodicComplex::zero(F5, 4);
  const auto t = tau_face(2, z);
  EXPECT_EQ(t, zero_map(face(2, z), face(1, z)));
  EXPECT_TRUE(validate_chain_map(t).pass);
}

TEST(Tau, ValidAndNatural) {
  for (std::uint64_t seed = 0; seed < 15; ++seed) {
    const auto x = random_complex(F5, 4, 5, 3, seed);
    const auto y = random_complex(F5, 4, 5, 3, seed + 30);
    const auto f = random_chain_map(x, y, seed);
    for (std::size_t i = 1; i < 4; ++i) {
      EXPECT_TRUE(validate_chain_map(tau_face(i, x)).pass);
      EXPECT_EQ(compose(tau_face(i, y), face_map(i, f)), compose(face_map(i - 1, f), tau_face(i, x)));
    }
    for (std::size_t j = 0; j + 1 < 4; ++j) {
      EXPECT_TRUE(validate_chain_map(tau_degeneracy(j, x)).pass);
      EXPECT_EQ(compose(tau_degeneracy(j, y), degeneracy_map(j, f)),
                compose(degeneracy_map(j + 1, f), tau_degeneracy(j, x)));
    }
  }
}

TEST(Tau, ComponentAtTheFaceIndexIsTheDifferential) {
  // degree i-1 of face(i) is X^{i-1}, of face(i-1) is X^i; the map is d.
  const auto x = random_complex(F5, 4, 5, 3, 77);
  for (std::size_t i = 1; i < 4; ++i)
    EXPECT_EQ(tau_face(i, x).at(static_cast<long long>(i - 1)), x.d(static_cast<long long>(i - 1)));
}

TEST(Vertex, ZeroAndClosedForm) {
  EXPECT_EQ(vertex(1, PeriodicComplex::zero(F5, 4)), PeriodicComplex::zero(F5, 2));
  const auto c = random_complex(F5, 4, 5, 3, 12);
  for (std::size_t i = 0; i <= 2; ++i) {
    const auto v = vertex(i, c);
    EXPECT_EQ(v.dims(), (std::vector<std::size_t>{c.dims()[0], c.dims()[i + 1]}));
    EXPECT_EQ(v.d(0), c.d_pow(0, i + 1));
    EXPECT_EQ(v.d(1), c.d_pow(static_cast<long long>(i + 1), 3 - i));
  }
}

TEST(Spine, ZeroAndLevelZero) {
  const auto z = spine(PeriodicComplex::zero(F5, 4));
  EXPECT_EQ(z.length(), 2u);
  for (const auto& x : z.complexes) EXPECT_TRUE(x.is_zero());
  const auto c = random_complex(F5, 2, 4, 3, 4);
  const auto s0 = spine(c);
  EXPECT_EQ(s0.length(), 0u);
  ASSERT_EQ(s0.complexes.size(), 1u);
  EXPECT_EQ(s0.complexes[0], c);
}

TEST(SimplicialSuite, PassesOnSmallRun) {
  SuiteConfig cfg;
  cfg.n_max = 4;
  cfg.trials = 10;
  const auto r = verify_simplicial(cfg);
  EXPECT_TRUE(r.pass());
  EXPECT_GT(r.results.size(), 100u);
}

TEST(SimplicialIdentities, HoldOnZeroComplexes) {
  for (std::size_t n = 1; n <= 5; ++n) {
    const auto z = PeriodicComplex::zero(F5, n + 1);
    for (std::size_t j = 1; j <= n; ++j)
      for (std::size_t i = 0; i < j && n >= 2; ++i)
        EXPECT_EQ(face(i, face(j, z)), face(j - 1, face(i, z)));
    for (std::size_t j = 0; j <= n; ++j)
      for (std::size_t i = 0; i <= j; ++i)
        EXPECT_EQ(degeneracy(i, degeneracy(j, z)), degeneracy(j + 1, degeneracy(i, z)));
  }
}

TEST(SimplicialSuite, CorruptedFaceIsLocated) {
  SuiteConfig cfg;
  cfg.n_max = 3;
  cfg.trials = 3;
  cfg.fault = Fault::FaceOffByOne;
  const auto r = verify_simplicial(cfg);
  EXPECT_FALSE(r.pass());
  bool located = false;
  for (const auto& c : r.results)
    if (!c.pass && c.identity == "d_i d_j = d_{j-1} d_i") located = true;
  EXPECT_TRUE(located);
}

TEST(SimplicialSuite, DeterministicOutput) {
  SuiteConfig cfg;
  cfg.n_max = 2;
  cfg.trials = 4;
  const auto a = verify_simplicial(cfg);
  const auto b = verify_simplicial(cfg);
  ASSERT_EQ(a.results.size(), b.results.size());
  for (std::size_t k = 0; k < a.results.size(); ++k) {
    EXPECT_EQ(a.results[k].identity, b.results[k].identity);
    EXPECT_EQ(a.results[k].indices, b.results[k].indices);
    EXPECT_EQ(a.results[k].trials, b.results[k].trials);
  }
}
