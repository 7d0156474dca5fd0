#include "ncx/random.hpp"

#include <algorithm>
#include <numeric>
#include <utility>

#include "ncx/linear_system.hpp"

namespace ncx {

std::size_t Rng::uniform(std::size_t lo, std::size_t hi) {
  return std::uniform_int_distribution<std::size_t>(lo, hi)(gen_);
}

Scalar Rng::scalar(const Ring& ring) {
  if (ring.is_field()) return std::uniform_int_distribution<Scalar>(0, ring.p() - 1)(gen_);
  return std::uniform_int_distribution<Scalar>(-1, 1)(gen_);
}

Scalar Rng::unit(const Ring& ring) {
  if (ring.is_field()) return std::uniform_int_distribution<Scalar>(1, ring.p() - 1)(gen_);
  return coin() ? 1 : -1;
}

std::uint64_t derive_seed(std::uint64_t base, std::uint64_t a, std::uint64_t b, std::uint64_t c) {
  auto mix = [](std::uint64_t z) {
    z += 0x9e3779b97f4a7c15ULL;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  };
  return mix(mix(mix(mix(base) ^ a) ^ b) ^ c);
}

Matrix random_matrix(Rng& rng, const Ring& ring, std::size_t rows, std::size_t cols) {
  std::vector<Scalar> e(rows * cols);
  for (auto& v : e) v = rng.scalar(ring);
  return {ring, rows, cols, std::move(e)};
}

InvertiblePair random_invertible(Rng& rng, const Ring& ring, std::size_t n) {
  std::vector<std::size_t> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  std::shuffle(perm.begin(), perm.end(), std::mt19937_64(rng.next()));
  Matrix m = Matrix::zero(ring, n, n);
  Matrix inv = Matrix::zero(ring, n, n);
  for (std::size_t i = 0; i < n; ++i) {
    const Scalar u = rng.unit(ring);
    m = m.with_entry(i, perm[i], u);
    inv = inv.with_entry(perm[i], i, ring.is_field() ? ring.inverse(u) : u);
  }
  if (n < 2) return {m, inv};
  for (std::size_t step = 0; step < n; ++step) {
    const std::size_t a = rng.uniform(0, n - 1);
    std::size_t b = rng.uniform(0, n - 2);
    if (b >= a) ++b;
    const Scalar c = rng.unit(ring);
    // (I + c e_ab)^{-1} = I - c e_ab
    const Matrix e = Matrix::identity(ring, n).with_entry(a, b, c);
    const Matrix einv = Matrix::identity(ring, n).with_entry(a, b, ring.neg(c));
    m = e * m;
    inv = inv * einv;
  }
  return {m, inv};
}

PeriodicComplex string_complex(const Ring& ring, std::size_t period, std::size_t start,
                               std::size_t length) {
  if (length == 0 || length > period)
    throw PreconditionError("string length must be in 1..period");
  std::vector<std::size_t> dims(period, 0);
  for (std::size_t k = 0; k < length; ++k) dims[(start + k) % period] = 1;
  std::vector<Matrix> diffs;
  for (std::size_t i = 0; i < period; ++i) {
    const std::size_t rel = mod(static_cast<long long>(i) - static_cast<long long>(start), period);
    Matrix d = Matrix::zero(ring, dims[(i + 1) % period], dims[i]);
    if (rel + 1 < length) d = Matrix::identity(ring, 1);
    diffs.push_back(std::move(d));
  }
  return {ring, std::move(dims), std::move(diffs)};
}

PeriodicComplex random_complex(const Ring& ring, std::size_t period, std::size_t max_strings,
                               std::size_t max_dim, std::uint64_t seed) {
  if (period == 0) throw PreconditionError("period must be positive");
  Rng rng(seed);
  PeriodicComplex x = PeriodicComplex::zero(ring, period);
  const std::size_t strings = max_strings == 0 ? 0 : rng.uniform(0, max_strings);
  for (std::size_t s = 0; s < strings; ++s) {
    const std::size_t start = rng.uniform(0, period - 1);
    const std::size_t length = rng.uniform(1, period);
    PeriodicComplex str = string_complex(ring, period, start, length);
    bool fits = true;
    for (std::size_t i = 0; i < period; ++i)
      if (x.dims()[i] + str.dims()[i] > max_dim) fits = false;
    if (fits) x = direct_sum(x, str);
  }
  std::vector<InvertiblePair> base;
  for (std::size_t i = 0; i < period; ++i) base.push_back(random_invertible(rng, ring, x.dims()[i]));
  std::vector<Matrix> diffs;
  for (std::size_t i = 0; i < period; ++i)
    diffs.push_back(base[(i + 1) % period].m * x.diffs()[i] * base[i].inverse);
  PeriodicComplex out(ring, x.dims(), std::move(diffs));
  if (!validate_complex(out).pass) throw Error("random_complex produced an invalid complex");
  return out;
}

Homotopy random_homotopy(Rng& rng, const PeriodicComplex& source, const PeriodicComplex& target) {
  std::vector<Matrix> comps;
  for (std::size_t i = 0; i < source.period(); ++i) {
    const auto li = static_cast<long long>(i);
    comps.push_back(random_matrix(rng, source.ring(), target.dim(li), source.dim(li - 1)));
  }
  return {source, target, std::move(comps)};
}

ChainMap random_chain_map(const PeriodicComplex& source, const PeriodicComplex& target,
                          std::uint64_t seed) {
  if (source.ring() != target.ring()) throw RingMismatch("random_chain_map");
  if (source.period() != target.period()) throw DimensionError("random_chain_map: periods differ");
  Rng rng(seed);
  const Ring& ring = source.ring();
  if (!ring.is_field()) {
    ChainMap base = zero_map(source, target);
    if (source == target) {
      const Scalar c = rng.scalar(ring);
      std::vector<Matrix> comps;
      for (auto d : source.dims()) comps.push_back(scale(c, Matrix::identity(ring, d)));
      base = ChainMap(source, target, std::move(comps));
    }
    return add(base, boundary_map(random_homotopy(rng, source, target)));
  }
  LinearSystem sys(ring);
  add_chain_map_unknowns(sys, source, target);
  return {source, target, sys.random_solution(rng)};
}

MapWithHomotopy random_map_with_homotopy(const PeriodicComplex& source,
                                         const PeriodicComplex& target, std::uint64_t seed) {
  Rng rng(seed);
  ChainMap f = random_chain_map(source, target, rng.next());
  Homotopy h = random_homotopy(rng, source, target);
  ChainMap g = add(f, boundary_map(h));
  return {std::move(f), std::move(g), std::move(h)};
}

} // namespace ncx
