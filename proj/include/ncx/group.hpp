#pragma once

// Finite groups presented by division, their recalages (truncated
// simplicial sets with level n = M^n), and the chop functor.

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

namespace ncx::group {

using Table = std::vector<std::vector<std::size_t>>;

/// div[x][y] = x / y.
struct FiniteGroup {
  std::vector<std::string> elements;
  Table div;
  std::size_t e = 0;

  std::size_t order() const { return elements.size(); }
  friend bool operator==(const FiniteGroup&, const FiniteGroup&) = default;
};

/// mul[x][y] = x * y.
struct MulGroup {
  std::vector<std::string> elements;
  Table mul;
  std::size_t e = 0;

  std::size_t order() const { return elements.size(); }
  friend bool operator==(const MulGroup&, const MulGroup&) = default;
};

struct AxiomReport {
  bool pass = true;
  std::vector<std::string> failed; // axiom names, e.g. "L3"
  std::string detail;              // first counterexample
};

/// L1 x/x = e, L2 x/e = x, L3 (z/x)/(y/x) = z/y.
AxiomReport check_div_axioms(const FiniteGroup& g);
/// e/(y/x) = x/y.
AxiomReport check_L4(const FiniteGroup& g);
/// G1 associativity, G2 two-sided unit, G3 two-sided inverses.
AxiomReport check_mul_axioms(const MulGroup& g);

std::size_t inverse(const FiniteGroup& g, std::size_t x);
/// x * y := x / (e / y). Requires the L axioms.
MulGroup to_mul(const FiniteGroup& g);
/// x / y := x * y^{-1}. Requires the G axioms.
FiniteGroup to_div(const MulGroup& g);

/// trivial, z2, z3, z4, z2xz2, s3.
const std::vector<std::string>& builtin_names();
MulGroup builtin_mul_group(const std::string& name);
FiniteGroup builtin_group(const std::string& name);

/// Levels 0..K; level n has sizes[n] simplices. faces[n][i] (1 <= n <= K,
/// i <= n) and degeneracies[n][i] (n < K, i <= n) are lookup tables.
struct TruncatedSimplicialSet {
  std::size_t K = 0;
  std::vector<std::size_t> sizes;
  std::vector<Table> faces;
  std::vector<Table> degeneracies;

  friend bool operator==(const TruncatedSimplicialSet&, const TruncatedSimplicialSet&) = default;
};

/// Index of (x_1, ..., x_n) in M^n, x_1 most significant.
std::size_t encode(const std::vector<std::size_t>& coords, std::size_t m);
std::vector<std::size_t> decode(std::size_t index, std::size_t n, std::size_t m);

/// S_n = M^n; d_0 = (x_2/x_1, ..., x_n/x_1), s_0 prepends e, d_i / s_i
/// (i >= 1) delete / repeat coordinate i. Throws unless g satisfies L1-L3.
TruncatedSimplicialSet recalage_from_group(const FiniteGroup& g, std::size_t K);

struct IdentityFailure {
  std::string identity; // e.g. "d_i d_j = d_{j-1} d_i"
  std::size_t level;
  std::vector<std::size_t> indices;
  std::size_t simplex;
};
/// Every simplicial identity whose both sides stay within levels <= K.
std::optional<IdentityFailure> check_simplicial_set(const TruncatedSimplicialSet& s);

/// div := d_0 on level 2, e := s_0 of the point. Requires K >= 3 and the
/// product shape on levels 1..3; throws PreconditionError naming failed axioms.
FiniteGroup group_from_recalage(const TruncatedSimplicialSet& s);

/// h[x] is the image of element x.
bool is_homomorphism(const FiniteGroup& g, const FiniteGroup& h,
                     const std::vector<std::size_t>& map);

struct ChopReport {
  bool pass = true;
  std::string square; // "d_i" or "s_i"
  std::size_t level = 0;
  std::size_t index = 0;
  std::size_t simplex = 0;
};
/// Checks the coordinatewise extension of map against every face and
/// degeneracy table of both recalages up to level K.
ChopReport verify_chop_functoriality(const FiniteGroup& g, const FiniteGroup& h,
                                     const std::vector<std::size_t>& map, std::size_t K);

} // namespace ncx::group
