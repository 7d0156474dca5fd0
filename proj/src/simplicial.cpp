#include "ncx/simplicial.hpp"

#include <utility>

namespace ncx {

namespace {

void require_face_range(std::size_t i, std::size_t period, const char* op) {
  if (period < 2)
    throw PreconditionError(std::string(op) + ": period 1 complexes have no faces");
  if (i >= period)
    throw PreconditionError(std::string(op) + ": index " + std::to_string(i) +
                            " out of range for period " + std::to_string(period));
}

void require_degeneracy_range(std::size_t j, std::size_t period, const char* op) {
  if (j >= period)
    throw PreconditionError(std::string(op) + ": index " + std::to_string(j) +
                            " out of range for period " + std::to_string(period));
}

// Length of the differential run from old residue a to old residue b.
std::size_t gap(std::size_t a, std::size_t b, std::size_t period) {
  return mod(static_cast<long long>(b) - static_cast<long long>(a), period);
}

// Component k of the comparison map between two reindexings of x.
Matrix reindex_component(const PeriodicComplex& x, std::size_t from, std::size_t to) {
  return x.d_pow(static_cast<long long>(from), gap(from, to, x.period()));
}

} // namespace

PeriodicComplex face(std::size_t i, const PeriodicComplex& x) {
  const std::size_t m = x.period();
  require_face_range(i, m, "face");
  const std::size_t n = m - 1;
  std::vector<std::size_t> dims;
  std::vector<Matrix> diffs;
  for (std::size_t k = 0; k < n; ++k) {
    const std::size_t a = face_index(i, k);
    const std::size_t b = face_index(i, (k + 1) % n);
    dims.push_back(x.dims()[a]);
    // a single surviving object carries the full cycle
    const std::size_t run = n == 1 ? m : gap(a, b, m);
    diffs.push_back(x.d_pow(static_cast<long long>(a), run));
  }
  return {x.ring(), std::move(dims), std::move(diffs)};
}

ChainMap face_map(std::size_t i, const ChainMap& f) {
  require_face_range(i, f.period(), "face_map");
  std::vector<Matrix> comps;
  for (std::size_t k = 0; k + 1 < f.period(); ++k) comps.push_back(f.comps()[face_index(i, k)]);
  return {face(i, f.source()), face(i, f.target()), std::move(comps)};
}

PeriodicComplex degeneracy(std::size_t j, const PeriodicComplex& x) {
  const std::size_t m = x.period();
  require_degeneracy_range(j, m, "degeneracy");
  std::vector<std::size_t> dims;
  std::vector<Matrix> diffs;
  for (std::size_t k = 0; k <= m; ++k) {
    const std::size_t a = degeneracy_index(j, k);
    dims.push_back(x.dims()[a]);
    diffs.push_back(k == j ? Matrix::identity(x.ring(), x.dims()[a]) : x.diffs()[a]);
  }
  return {x.ring(), std::move(dims), std::move(diffs)};
}

ChainMap degeneracy_map(std::size_t j, const ChainMap& f) {
  require_degeneracy_range(j, f.period(), "degeneracy_map");
  std::vector<Matrix> comps;
  for (std::size_t k = 0; k <= f.period(); ++k) comps.push_back(f.comps()[degeneracy_index(j, k)]);
  return {degeneracy(j, f.source()), degeneracy(j, f.target()), std::move(comps)};
}

ChainMap tau_face(std::size_t i, const PeriodicComplex& x) {
  const std::size_t m = x.period();
  if (i == 0) throw PreconditionError("tau_face: index must be at least 1");
  require_face_range(i, m, "tau_face");
  std::vector<Matrix> comps;
  for (std::size_t k = 0; k + 1 < m; ++k)
    comps.push_back(reindex_component(x, face_index(i, k), face_index(i - 1, k)));
  return {face(i, x), face(i - 1, x), std::move(comps)};
}

ChainMap tau_degeneracy(std::size_t j, const PeriodicComplex& x) {
  const std::size_t m = x.period();
  if (j + 1 >= m)
    throw PreconditionError("tau_degeneracy: index " + std::to_string(j) +
                            " out of range for period " + std::to_string(m));
  std::vector<Matrix> comps;
  for (std::size_t k = 0; k <= m; ++k)
    comps.push_back(reindex_component(x, degeneracy_index(j, k), degeneracy_index(j + 1, k)));
  return {degeneracy(j, x), degeneracy(j + 1, x), std::move(comps)};
}

PeriodicComplex shifted_face(std::size_t k, const PeriodicComplex& c) {
  if (c.period() < 3) throw PreconditionError("shifted_face needs period at least 3");
  return face(k + 1, c);
}

ChainMap shifted_face_map(std::size_t k, const ChainMap& f) {
  if (f.period() < 3) throw PreconditionError("shifted_face_map needs period at least 3");
  return face_map(k + 1, f);
}

namespace {

template <class T, class Face>
T apply_vertex_faces(std::size_t i, T value, std::size_t period, Face face_fn) {
  if (period < 2) throw PreconditionError("vertex needs period at least 2");
  const std::size_t n = period - 2;
  if (i > n)
    throw PreconditionError("vertex index " + std::to_string(i) + " out of range for level " +
                            std::to_string(n));
  for (std::size_t k = n; k > i; --k) value = face_fn(k, value);
  for (std::size_t k = i; k > 0; --k) value = face_fn(k - 1, value);
  return value;
}

} // namespace

PeriodicComplex vertex(std::size_t i, const PeriodicComplex& c) {
  return apply_vertex_faces(i, c, c.period(), [](std::size_t k, const PeriodicComplex& v) {
    return shifted_face(k, v);
  });
}

ChainMap vertex_map(std::size_t i, const ChainMap& f) {
  return apply_vertex_faces(i, f, f.period(),
                            [](std::size_t k, const ChainMap& v) { return shifted_face_map(k, v); });
}

ChainMap vertex_tau(std::size_t i, const PeriodicComplex& c) {
  if (c.period() < 3 || i + 2 >= c.period())
    throw PreconditionError("vertex_tau index " + std::to_string(i) + " out of range for period " +
                            std::to_string(c.period()));
  const std::size_t n = c.period() - 2;
  PeriodicComplex d = c;
  for (std::size_t k = n; k > i + 1; --k) d = shifted_face(k, d);
  ChainMap t = tau_face(i + 2, d);
  for (std::size_t k = i; k > 0; --k) t = shifted_face_map(k - 1, t);
  return t;
}

LNChain spine(const PeriodicComplex& c) {
  if (c.period() < 2) throw PreconditionError("spine needs period at least 2");
  const std::size_t n = c.period() - 2;
  LNChain chain;
  for (std::size_t i = 0; i <= n; ++i) chain.complexes.push_back(vertex(i, c));
  for (std::size_t i = 0; i < n; ++i) chain.maps.push_back(vertex_tau(i, c));
  return chain;
}

} // namespace ncx
