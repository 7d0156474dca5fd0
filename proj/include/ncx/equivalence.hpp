#pragma once

// F_n and G_n between period n+3 complexes and pairs (C, x : v_n C -> X),
// the unit and counit witnesses, Filler, and the mapping cone.

#include <cstdint>

#include "ncx/lax.hpp"
#include "ncx/ncomplex.hpp"
#include "ncx/simplicial.hpp"

namespace ncx {

/// C of period n+2 with x : v_n C -> X, X of period 2.
struct PairCX {
  PeriodicComplex c;
  ChainMap x;

  std::size_t level() const { return c.period() - 2; }
  friend bool operator==(const PairCX&, const PairCX&) = default;
};

/// (a, f) : (C, x) -> (D, y) with f.f0 == v_n a.
struct PairMorphism {
  ChainMap a;
  LArrMorphism f;

  friend bool operator==(const PairMorphism&, const PairMorphism&) = default;
};

ValidationReport validate_pair(const PairCX& p);
ValidationReport validate_pair_morphism(const PairCX& p, const PairCX& q, const PairMorphism& m);
PairMorphism pair_identity(const PairCX& p);
/// m after k.
PairMorphism compose_pair(const PairMorphism& m, const PairMorphism& k);

/// The period-2 homotopy v_n h on v_n C -> v_n D for h on period n+2 complexes.
Homotopy vertex_homotopy(const Homotopy& h);

/// (shifted face n+1 of C, tau : v_n C -> v_{n+1} C) for C of period n+3.
PairCX apply_F(const PeriodicComplex& c);
PairMorphism apply_F_map(const ChainMap& a);

PeriodicComplex apply_G(const PairCX& p);
ChainMap apply_G_map(const PairCX& p, const PairCX& q, const PairMorphism& m);

/// hprime : 0 => a on C -> D and h1 : 0 => f1 on X -> Y.
struct GHomotopyInput {
  Homotopy hprime;
  Homotopy h1;
};
struct GHomotopyResult {
  PairMorphism m; // the induced (a, f)
  Homotopy h;     // G(0, 0) => G(a, f)
};
GHomotopyResult apply_G_homotopy(const PairCX& p, const PairCX& q, const GHomotopyInput& in);

/// theta : G F C -> C, eta : C -> G F C and h : eta theta => id.
struct UnitWitness {
  ChainMap theta;
  ChainMap eta;
  Homotopy h;
};
UnitWitness unit_witnesses(const PeriodicComplex& c);

struct CounitWitness {
  PairCX fg;           // F G p
  ChainMap eps1;       // shifted face n+1 of G p -> C
  ChainMap zeta1;      // C -> shifted face n+1 of G p
  LArrMorphism eps2;   // tau_G -> x
  LArrMorphism zeta2;  // x -> tau_G
  Homotopy k;          // zeta1 eps1 => id
  LArr2Morphism alpha; // zeta2 eps2 => id
};
CounitWitness counit_witnesses(const PairCX& p);

PairMorphism counit(const CounitWitness& w);
PairMorphism counit_inverse(const CounitWitness& w);

/// Hat data of the counit pieces on a pair morphism m : p -> q.
struct CounitNaturality {
  Homotopy zeta1_hat;      // zeta1_q a => (face G m) zeta1_p
  LArr2Morphism eps2_hat;  // eps2_q F G m => f eps2_p
  LArr2Morphism zeta2_hat; // zeta2_q f => F G m zeta2_p
};
CounitNaturality counit_naturality(const PairCX& p, const PairCX& q, const PairMorphism& m);

/// Iterates G_i, retargeting the next map through eps2_1. Period length+2.
PeriodicComplex filler(const LNChain& chain);
/// The zero period-1 complex.
PeriodicComplex augmented_filler(const Ring& ring);
/// id => 0 on a period-1 complex, witnessed by the identity.
Homotopy contraction_to_zero(const PeriodicComplex& x);

PeriodicComplex cone(const ChainMap& x);
PeriodicComplex cone_via_filler(const ChainMap& x);
/// cone(x) -> cone(y) for f : x -> y.
ChainMap cone_map(const ChainMap& x, const ChainMap& y, const LArrMorphism& f);
/// cod x -> cone x.
ChainMap tau_d(const ChainMap& x);
/// (tau : face 2 -> face 1, tau : face 1 -> face 0) of a period 3 complex.
std::pair<ChainMap, ChainMap> boundary_triangle(const PeriodicComplex& y);
/// cone of cone(f) -> cone(g f) has the homology of cone(g).
bool check_R1(const ChainMap& f, const ChainMap& g);

PairCX random_pair(const Ring& ring, std::size_t n, std::size_t max_strings, std::size_t max_dim,
                   std::uint64_t seed);
PairMorphism random_pair_morphism(const PairCX& p, const PairCX& q, std::uint64_t seed);
GHomotopyInput random_g_homotopy_input(const PairCX& p, const PairCX& q, std::uint64_t seed);

} // namespace ncx
