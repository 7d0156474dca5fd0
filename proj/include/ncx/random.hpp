#pragma once

// Seeded generators for matrices, complexes, chain maps and homotopies.
// Every generator is deterministic in its seed.

#include <cstdint>
#include <random>

#include "ncx/ncomplex.hpp"

namespace ncx {

class Rng {
public:
  explicit Rng(std::uint64_t seed) : gen_(seed) {}

  std::uint64_t next() { return gen_(); }
  /// Uniform in [lo, hi].
  std::size_t uniform(std::size_t lo, std::size_t hi);
  bool coin() { return (gen_() & 1) != 0; }
  /// Uniform element of F_p, or one of {-1, 0, 1} over Z.
  Scalar scalar(const Ring& ring);
  /// Nonzero unit: uniform over F_p^*, +-1 over Z.
  Scalar unit(const Ring& ring);

private:
  std::mt19937_64 gen_;
};

/// Mixes a base seed with trial coordinates (splitmix64 finalizer).
std::uint64_t derive_seed(std::uint64_t base, std::uint64_t a, std::uint64_t b = 0,
                          std::uint64_t c = 0);

Matrix random_matrix(Rng& rng, const Ring& ring, std::size_t rows, std::size_t cols);

struct InvertiblePair {
  Matrix m;
  Matrix inverse;
};
/// Product of a permutation, unit scalings and elementary row operations.
InvertiblePair random_invertible(Rng& rng, const Ring& ring, std::size_t n);

/// One summand: identities from `start` for length-1 steps, then zero.
PeriodicComplex string_complex(const Ring& ring, std::size_t period, std::size_t start,
                               std::size_t length);

/// Sum of at most max_strings random strings, conjugated by a random base change.
/// Strings that would push a degree above max_dim are skipped.
PeriodicComplex random_complex(const Ring& ring, std::size_t period, std::size_t max_strings,
                               std::size_t max_dim, std::uint64_t seed);

Homotopy random_homotopy(Rng& rng, const PeriodicComplex& source, const PeriodicComplex& target);

/// Over F_p a uniform solution of the commuting-square system; over Z a
/// multiple of the identity (when source == target) plus a random boundary.
ChainMap random_chain_map(const PeriodicComplex& source, const PeriodicComplex& target,
                          std::uint64_t seed);

struct MapWithHomotopy {
  ChainMap f;
  ChainMap g;
  Homotopy h;
};
/// g = f + boundary(h) for random f and h.
MapWithHomotopy random_map_with_homotopy(const PeriodicComplex& source,
                                         const PeriodicComplex& target, std::uint64_t seed);

} // namespace ncx
