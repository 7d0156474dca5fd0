#pragma once

// The lax arrow category: objects are chain maps x : X0 -> X1, morphisms
// x -> y are squares commuting up to a homotopy, and lax-nerve chains.

#include <cstdint>
#include <vector>

#include "ncx/ncomplex.hpp"

namespace ncx {

/// A morphism x -> y: f0 : dom x -> dom y, f1 : cod x -> cod y and
/// fhat a homotopy from y f0 to f1 x.
struct LArrMorphism {
  ChainMap f0;
  ChainMap f1;
  Homotopy fhat;

  friend bool operator==(const LArrMorphism&, const LArrMorphism&) = default;
};

/// a0 : f0 => g0, a1 : f1 => g1.
struct LArr2Morphism {
  Homotopy a0;
  Homotopy a1;
};

ValidationReport validate_larr_morphism(const ChainMap& x, const ChainMap& y,
                                        const LArrMorphism& f);
LArrMorphism larr_identity(const ChainMap& x);
/// f after g: (f0 g0, f1 g1, f1 ghat + fhat g0).
LArrMorphism compose_larr(const LArrMorphism& f, const LArrMorphism& g);
/// A strictly commuting square as a morphism with zero homotopy.
LArrMorphism strict_square(const ChainMap& x, const ChainMap& y, const ChainMap& f0,
                           const ChainMap& f1);
/// Both components are homotopies and ghat + y a0 = a1 x + fhat.
bool validate_larr_2morphism(const ChainMap& x, const ChainMap& y, const LArr2Morphism& alpha,
                             const LArrMorphism& f, const LArrMorphism& g);

/// X_0 -> X_1 -> ... -> X_n with maps[k] : X_k -> X_{k+1}.
struct LNChain {
  std::vector<PeriodicComplex> complexes;
  std::vector<ChainMap> maps;

  std::size_t length() const { return maps.size(); }
  friend bool operator==(const LNChain&, const LNChain&) = default;
};

ValidationReport validate_chain(const LNChain& chain);
LNChain ln_face(std::size_t k, const LNChain& chain);
LNChain ln_degeneracy(std::size_t k, const LNChain& chain);

/// Uniform over F_p (joint linear system); over Z built from boundaries.
LArrMorphism random_larr_morphism(const ChainMap& x, const ChainMap& y, std::uint64_t seed);

struct LArr2Fixture {
  LArrMorphism g;
  LArr2Morphism alpha;
};
/// g = f moved along random a0, a1, with ghat fixed by the compatibility equation.
LArr2Fixture random_larr_2morphism(const ChainMap& x, const ChainMap& y, const LArrMorphism& f,
                                   std::uint64_t seed);

/// Random chain of the given length with random complexes and maps.
LNChain random_chain(const Ring& ring, std::size_t period, std::size_t length,
                     std::size_t max_strings, std::size_t max_dim, std::uint64_t seed);

} // namespace ncx
