#pragma once

// Simplicial structure on periodic complexes: level n carries period n+1.
// Faces remove a residue and compose across the gap, degeneracies repeat a
// residue with an identity in between. The shifted (decalage) structure has
// level n carrying period n+2 and face k acting as face k+1.

#include <cstddef>

#include "ncx/lax.hpp"
#include "ncx/ncomplex.hpp"

namespace ncx {

/// Old residue of new residue k after removing residue i.
inline std::size_t face_index(std::size_t i, std::size_t k) { return k < i ? k : k + 1; }
/// Old residue of new residue k after repeating residue j.
inline std::size_t degeneracy_index(std::size_t j, std::size_t k) { return k <= j ? k : k - 1; }

/// Period n+1 -> n; requires n >= 1 and i <= n.
PeriodicComplex face(std::size_t i, const PeriodicComplex& x);
ChainMap face_map(std::size_t i, const ChainMap& f);
/// Period n+1 -> n+2; requires j <= n.
PeriodicComplex degeneracy(std::size_t j, const PeriodicComplex& x);
ChainMap degeneracy_map(std::size_t j, const ChainMap& f);

/// face(i, X) -> face(i-1, X), 1 <= i <= n.
ChainMap tau_face(std::size_t i, const PeriodicComplex& x);
/// degeneracy(j, X) -> degeneracy(j+1, X), j <= n-1.
ChainMap tau_degeneracy(std::size_t j, const PeriodicComplex& x);

/// Shifted face k on period n+2 complexes.
PeriodicComplex shifted_face(std::size_t k, const PeriodicComplex& c);
ChainMap shifted_face_map(std::size_t k, const ChainMap& f);

/// v_i of a period n+2 complex: all shifted faces except face i.
PeriodicComplex vertex(std::size_t i, const PeriodicComplex& c);
ChainMap vertex_map(std::size_t i, const ChainMap& f);
/// tau : v_i C -> v_{i+1} C, i < n.
ChainMap vertex_tau(std::size_t i, const PeriodicComplex& c);

/// v_0 C -> v_1 C -> ... -> v_n C.
LNChain spine(const PeriodicComplex& c);

} // namespace ncx
