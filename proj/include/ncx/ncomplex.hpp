#pragma once

// Z/N-graded N-complexes, chain maps and homotopies.
//
// Degrees are residues mod N and every accessor reduces its index. The
// differential raises degree: d(i) : X^i -> X^{i+1}.

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "ncx/exactlin.hpp"

namespace ncx {

/// Non-negative residue of i mod n.
inline std::size_t mod(long long i, std::size_t n) {
  const long long m = static_cast<long long>(n);
  const long long r = i % m;
  return static_cast<std::size_t>(r < 0 ? r + m : r);
}

class PeriodicComplex {
public:
  /// Checks the shape chain; d^N = 0 is left to validate_complex.
  PeriodicComplex(Ring ring, std::vector<std::size_t> dims, std::vector<Matrix> diffs);

  static PeriodicComplex zero(Ring ring, std::size_t period);
  /// Zero differentials on the given dimensions.
  static PeriodicComplex with_zero_diffs(Ring ring, std::vector<std::size_t> dims);

  const Ring& ring() const { return ring_; }
  std::size_t period() const { return dims_.size(); }
  const std::vector<std::size_t>& dims() const { return dims_; }
  const std::vector<Matrix>& diffs() const { return diffs_; }

  std::size_t dim(long long i) const { return dims_[mod(i, period())]; }
  const Matrix& d(long long i) const { return diffs_[mod(i, period())]; }
  /// d^k starting at degree `from`: X^from -> X^{from+k}; d^0 is the identity.
  Matrix d_pow(long long from, std::size_t k) const;

  bool is_zero() const;

  friend bool operator==(const PeriodicComplex&, const PeriodicComplex&) = default;

private:
  Ring ring_;
  std::vector<std::size_t> dims_;
  std::vector<Matrix> diffs_;
};

class ChainMap {
public:
  /// Checks ring, period and component shapes; commutation is left to validate_chain_map.
  ChainMap(PeriodicComplex source, PeriodicComplex target, std::vector<Matrix> comps);

  const PeriodicComplex& source() const { return source_; }
  const PeriodicComplex& target() const { return target_; }
  const std::vector<Matrix>& comps() const { return comps_; }
  const Matrix& at(long long i) const { return comps_[mod(i, comps_.size())]; }
  std::size_t period() const { return comps_.size(); }

  friend bool operator==(const ChainMap&, const ChainMap&) = default;

private:
  PeriodicComplex source_;
  PeriodicComplex target_;
  std::vector<Matrix> comps_;
};

/// Homotopy data: comps[i] : X^{i-1} -> Y^i.
class Homotopy {
public:
  Homotopy(PeriodicComplex source, PeriodicComplex target, std::vector<Matrix> comps);

  static Homotopy zero(const PeriodicComplex& source, const PeriodicComplex& target);

  const PeriodicComplex& source() const { return source_; }
  const PeriodicComplex& target() const { return target_; }
  const std::vector<Matrix>& comps() const { return comps_; }
  const Matrix& at(long long i) const { return comps_[mod(i, comps_.size())]; }
  std::size_t period() const { return comps_.size(); }

  friend bool operator==(const Homotopy&, const Homotopy&) = default;

private:
  PeriodicComplex source_;
  PeriodicComplex target_;
  std::vector<Matrix> comps_;
};

/// A homotopy together with the maps it claims to connect.
struct HomotopyWitness {
  ChainMap from;
  ChainMap to;
  Homotopy h;
};

struct ValidationReport {
  bool pass = true;
  std::optional<std::size_t> index; // first failing degree
  std::string detail;
};

ValidationReport validate_complex(const PeriodicComplex& x);
ValidationReport validate_chain_map(const ChainMap& f);
/// Validates both maps and the homotopy equation to - from = boundary(h).
ValidationReport validate_homotopy(const HomotopyWitness& w);

/// Componentwise sum over k = 1..N of d^{N-k} h d^{k-1}.
std::vector<Matrix> homotopy_boundary(const Homotopy& h);
/// The boundary as a chain map source -> target.
ChainMap boundary_map(const Homotopy& h);
/// g - f == boundary(h) exactly.
bool is_homotopy(const ChainMap& f, const ChainMap& g, const Homotopy& h);

ChainMap identity_map(const PeriodicComplex& x);
ChainMap zero_map(const PeriodicComplex& source, const PeriodicComplex& target);
/// g after f.
ChainMap compose(const ChainMap& g, const ChainMap& f);
ChainMap add(const ChainMap& f, const ChainMap& g);
ChainMap sub(const ChainMap& f, const ChainMap& g);
ChainMap negate(const ChainMap& f);

Homotopy add(const Homotopy& a, const Homotopy& b);
Homotopy sub(const Homotopy& a, const Homotopy& b);
Homotopy negate(const Homotopy& a);
/// (r h)^i = r^i h^i for r : Y -> Z.
Homotopy whisker(const ChainMap& r, const Homotopy& h);
/// (h s)^i = h^i s^{i-1} for s : W -> X.
Homotopy whisker(const Homotopy& h, const ChainMap& s);

PeriodicComplex direct_sum(const PeriodicComplex& a, const PeriodicComplex& b);
ChainMap direct_sum(const ChainMap& f, const ChainMap& g);

/// Over a prime field, N = 2: h_i = dim X^i - rank d_i - rank d_{i-1}.
std::vector<std::size_t> homology_dims_2(const PeriodicComplex& x);
/// dim ker(d^p at i) - rank(d^{N-p} into i); prime field, 1 <= p <= N-1.
std::size_t p_homology_dim(const PeriodicComplex& x, std::size_t p, long long i);
bool are_homotopy_equivalent_2(const PeriodicComplex& a, const PeriodicComplex& b);

} // namespace ncx
