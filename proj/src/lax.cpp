#include "ncx/lax.hpp"

#include <utility>

#include "ncx/linear_system.hpp"
#include "ncx/random.hpp"

namespace ncx {

ValidationReport validate_larr_morphism(const ChainMap& x, const ChainMap& y,
                                        const LArrMorphism& f) {
  if (f.f0.source() != x.source() || f.f0.target() != y.source())
    return {false, std::nullopt, "f0 is not a map dom x -> dom y"};
  if (f.f1.source() != x.target() || f.f1.target() != y.target())
    return {false, std::nullopt, "f1 is not a map cod x -> cod y"};
  if (f.fhat.source() != x.source() || f.fhat.target() != y.target())
    return {false, std::nullopt, "fhat is not a homotopy dom x -> cod y"};
  if (auto r = validate_chain_map(f.f0); !r.pass) {
    r.detail = "f0: " + r.detail;
    return r;
  }
  if (auto r = validate_chain_map(f.f1); !r.pass) {
    r.detail = "f1: " + r.detail;
    return r;
  }
  const ChainMap from = compose(y, f.f0);
  const ChainMap to = compose(f.f1, x);
  const auto b = homotopy_boundary(f.fhat);
  for (std::size_t i = 0; i < b.size(); ++i)
    if (to.comps()[i] - from.comps()[i] != b[i])
      return {false, i, "fhat is not a homotopy y f0 => f1 x at degree " + std::to_string(i)};
  return {};
}

LArrMorphism larr_identity(const ChainMap& x) {
  return {identity_map(x.source()), identity_map(x.target()),
          Homotopy::zero(x.source(), x.target())};
}

LArrMorphism compose_larr(const LArrMorphism& f, const LArrMorphism& g) {
  if (g.f0.target() != f.f0.source() || g.f1.target() != f.f1.source())
    throw DimensionError("compose_larr: morphisms not composable");
  return {compose(f.f0, g.f0), compose(f.f1, g.f1),
          add(whisker(f.f1, g.fhat), whisker(f.fhat, g.f0))};
}

LArrMorphism strict_square(const ChainMap& x, const ChainMap& y, const ChainMap& f0,
                           const ChainMap& f1) {
  return {f0, f1, Homotopy::zero(x.source(), y.target())};
}

bool validate_larr_2morphism(const ChainMap& x, const ChainMap& y, const LArr2Morphism& alpha,
                             const LArrMorphism& f, const LArrMorphism& g) {
  if (!is_homotopy(f.f0, g.f0, alpha.a0)) return false;
  if (!is_homotopy(f.f1, g.f1, alpha.a1)) return false;
  return add(g.fhat, whisker(y, alpha.a0)) == add(whisker(alpha.a1, x), f.fhat);
}

ValidationReport validate_chain(const LNChain& chain) {
  if (chain.complexes.size() != chain.maps.size() + 1)
    return {false, std::nullopt, "chain needs one more complex than maps"};
  for (std::size_t k = 0; k < chain.maps.size(); ++k) {
    const ChainMap& m = chain.maps[k];
    if (m.source() != chain.complexes[k] || m.target() != chain.complexes[k + 1])
      return {false, k, "map " + std::to_string(k) + " does not connect its neighbours"};
    if (auto r = validate_chain_map(m); !r.pass)
      return {false, k, "map " + std::to_string(k) + ": " + r.detail};
  }
  for (std::size_t k = 0; k < chain.complexes.size(); ++k)
    if (auto r = validate_complex(chain.complexes[k]); !r.pass)
      return {false, k, "complex " + std::to_string(k) + ": " + r.detail};
  return {};
}

LNChain ln_face(std::size_t k, const LNChain& chain) {
  const std::size_t n = chain.length();
  if (n == 0 || k > n)
    throw PreconditionError("ln_face index " + std::to_string(k) + " out of range for length " +
                            std::to_string(n));
  LNChain out = chain;
  const auto ks = static_cast<std::ptrdiff_t>(k);
  out.complexes.erase(out.complexes.begin() + ks);
  if (k == 0) {
    out.maps.erase(out.maps.begin());
  } else if (k == n) {
    out.maps.pop_back();
  } else {
    out.maps[k - 1] = compose(chain.maps[k], chain.maps[k - 1]);
    out.maps.erase(out.maps.begin() + ks);
  }
  return out;
}

LNChain ln_degeneracy(std::size_t k, const LNChain& chain) {
  const std::size_t n = chain.length();
  if (k > n)
    throw PreconditionError("ln_degeneracy index " + std::to_string(k) +
                            " out of range for length " + std::to_string(n));
  LNChain out = chain;
  const auto ks = static_cast<std::ptrdiff_t>(k);
  out.complexes.insert(out.complexes.begin() + ks, chain.complexes[k]);
  out.maps.insert(out.maps.begin() + ks, identity_map(chain.complexes[k]));
  return out;
}

LArrMorphism random_larr_morphism(const ChainMap& x, const ChainMap& y, std::uint64_t seed) {
  Rng rng(seed);
  const Ring& ring = x.source().ring();
  if (!ring.is_field()) {
    Homotopy h0 = random_homotopy(rng, x.source(), y.source());
    Homotopy h1 = random_homotopy(rng, x.target(), y.target());
    return {boundary_map(h0), boundary_map(h1), sub(whisker(h1, x), whisker(y, h0))};
  }
  LinearSystem sys(ring);
  const auto u0 = add_chain_map_unknowns(sys, x.source(), y.source());
  const auto u1 = add_chain_map_unknowns(sys, x.target(), y.target());
  const auto uh = add_homotopy_unknowns(sys, x.source(), y.target());
  for (std::size_t i = 0; i < x.period(); ++i) {
    const auto li = static_cast<long long>(i);
    const std::size_t e = sys.add_equation(y.target().dim(li), x.source().dim(li));
    sys.add_term(e, Matrix::identity(ring, y.target().dim(li)), u1[i], x.at(li));
    sys.add_term(e, -y.at(li), u0[i], Matrix::identity(ring, x.source().dim(li)));
    add_boundary_terms(sys, e, x.source(), y.target(), uh, li, -1);
  }
  auto sol = sys.random_solution(rng);
  const std::size_t n = x.period();
  auto slice = [&](std::size_t from) {
    return std::vector<Matrix>(sol.begin() + static_cast<std::ptrdiff_t>(from),
                               sol.begin() + static_cast<std::ptrdiff_t>(from + n));
  };
  return {ChainMap(x.source(), y.source(), slice(0)), ChainMap(x.target(), y.target(), slice(n)),
          Homotopy(x.source(), y.target(), slice(2 * n))};
}

LArr2Fixture random_larr_2morphism(const ChainMap& x, const ChainMap& y, const LArrMorphism& f,
                                   std::uint64_t seed) {
  Rng rng(seed);
  Homotopy a0 = random_homotopy(rng, x.source(), y.source());
  Homotopy a1 = random_homotopy(rng, x.target(), y.target());
  LArrMorphism g{add(f.f0, boundary_map(a0)), add(f.f1, boundary_map(a1)),
                 sub(add(f.fhat, whisker(a1, x)), whisker(y, a0))};
  return {std::move(g), {std::move(a0), std::move(a1)}};
}

LNChain random_chain(const Ring& ring, std::size_t period, std::size_t length,
                     std::size_t max_strings, std::size_t max_dim, std::uint64_t seed) {
  LNChain chain;
  for (std::size_t k = 0; k <= length; ++k)
    chain.complexes.push_back(
        random_complex(ring, period, max_strings, max_dim, derive_seed(seed, 1, k)));
  for (std::size_t k = 0; k < length; ++k)
    chain.maps.push_back(
        random_chain_map(chain.complexes[k], chain.complexes[k + 1], derive_seed(seed, 2, k)));
  return chain;
}

} // namespace ncx
