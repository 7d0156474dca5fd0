#include "ncx/ncomplex.hpp"

#include <utility>

namespace ncx {

namespace {

std::string shape(const Matrix& m) {
  return std::to_string(m.rows()) + "x" + std::to_string(m.cols());
}

void require_parallel(const PeriodicComplex& s1, const PeriodicComplex& t1,
                      const PeriodicComplex& s2, const PeriodicComplex& t2, const char* op) {
  if (s1 != s2 || t1 != t2) throw DimensionError(std::string(op) + ": operands not parallel");
}

} // namespace

PeriodicComplex::PeriodicComplex(Ring ring, std::vector<std::size_t> dims,
                                 std::vector<Matrix> diffs)
    : ring_(ring), dims_(std::move(dims)), diffs_(std::move(diffs)) {
  const std::size_t n = dims_.size();
  if (n == 0) throw PreconditionError("complex period must be positive");
  if (diffs_.size() != n)
    throw DimensionError("complex has " + std::to_string(n) + " degrees but " +
                         std::to_string(diffs_.size()) + " differentials");
  for (std::size_t i = 0; i < n; ++i) {
    const Matrix& m = diffs_[i];
    if (m.ring() != ring_) throw RingMismatch("differential " + std::to_string(i));
    if (m.cols() != dims_[i] || m.rows() != dims_[(i + 1) % n])
      throw DimensionError("differential " + std::to_string(i) + " has shape " + shape(m) +
                           ", expected " + std::to_string(dims_[(i + 1) % n]) + "x" +
                           std::to_string(dims_[i]));
  }
}

PeriodicComplex PeriodicComplex::zero(Ring ring, std::size_t period) {
  return with_zero_diffs(ring, std::vector<std::size_t>(period, 0));
}

PeriodicComplex PeriodicComplex::with_zero_diffs(Ring ring, std::vector<std::size_t> dims) {
  std::vector<Matrix> diffs;
  for (std::size_t i = 0; i < dims.size(); ++i)
    diffs.push_back(Matrix::zero(ring, dims[(i + 1) % dims.size()], dims[i]));
  return {ring, std::move(dims), std::move(diffs)};
}

Matrix PeriodicComplex::d_pow(long long from, std::size_t k) const {
  Matrix out = Matrix::identity(ring_, dim(from));
  for (std::size_t j = 0; j < k; ++j) out = d(from + static_cast<long long>(j)) * out;
  return out;
}

bool PeriodicComplex::is_zero() const {
  for (auto d : dims_)
    if (d != 0) return false;
  return true;
}

ChainMap::ChainMap(PeriodicComplex source, PeriodicComplex target, std::vector<Matrix> comps)
    : source_(std::move(source)), target_(std::move(target)), comps_(std::move(comps)) {
  if (source_.ring() != target_.ring()) throw RingMismatch("chain map source and target");
  if (source_.period() != target_.period())
    throw DimensionError("chain map between periods " + std::to_string(source_.period()) +
                         " and " + std::to_string(target_.period()));
  if (comps_.size() != source_.period())
    throw DimensionError("chain map needs " + std::to_string(source_.period()) +
                         " components, got " + std::to_string(comps_.size()));
  for (std::size_t i = 0; i < comps_.size(); ++i) {
    if (comps_[i].ring() != source_.ring()) throw RingMismatch("chain map component");
    if (comps_[i].rows() != target_.dim(i) || comps_[i].cols() != source_.dim(i))
      throw DimensionError("chain map component " + std::to_string(i) + " has shape " +
                           shape(comps_[i]) + ", expected " + std::to_string(target_.dim(i)) +
                           "x" + std::to_string(source_.dim(i)));
  }
}

Homotopy::Homotopy(PeriodicComplex source, PeriodicComplex target, std::vector<Matrix> comps)
    : source_(std::move(source)), target_(std::move(target)), comps_(std::move(comps)) {
  if (source_.ring() != target_.ring()) throw RingMismatch("homotopy source and target");
  if (source_.period() != target_.period())
    throw DimensionError("homotopy between different periods");
  if (comps_.size() != source_.period())
    throw DimensionError("homotopy needs " + std::to_string(source_.period()) +
                         " components, got " + std::to_string(comps_.size()));
  for (std::size_t i = 0; i < comps_.size(); ++i) {
    const auto li = static_cast<long long>(i);
    if (comps_[i].ring() != source_.ring()) throw RingMismatch("homotopy component");
    if (comps_[i].rows() != target_.dim(li) || comps_[i].cols() != source_.dim(li - 1))
      throw DimensionError("homotopy component " + std::to_string(i) + " has shape " +
                           shape(comps_[i]) + ", expected " + std::to_string(target_.dim(li)) +
                           "x" + std::to_string(source_.dim(li - 1)));
  }
}

Homotopy Homotopy::zero(const PeriodicComplex& source, const PeriodicComplex& target) {
  std::vector<Matrix> comps;
  for (std::size_t i = 0; i < source.period(); ++i)
    comps.push_back(Matrix::zero(source.ring(), target.dim(static_cast<long long>(i)),
                                 source.dim(static_cast<long long>(i) - 1)));
  return {source, target, std::move(comps)};
}

ValidationReport validate_complex(const PeriodicComplex& x) {
  const std::size_t n = x.period();
  for (std::size_t i = 0; i < n; ++i) {
    if (!x.d_pow(static_cast<long long>(i), n).is_zero())
      return {false, i,
              "composite of " + std::to_string(n) + " differentials starting at degree " +
                  std::to_string(i) + " is nonzero"};
  }
  return {};
}

ValidationReport validate_chain_map(const ChainMap& f) {
  const auto& x = f.source();
  const auto& y = f.target();
  for (std::size_t i = 0; i < f.period(); ++i) {
    const auto li = static_cast<long long>(i);
    if (y.d(li) * f.at(li) != f.at(li + 1) * x.d(li))
      return {false, i, "square at degree " + std::to_string(i) + " does not commute"};
  }
  return {};
}

ValidationReport validate_homotopy(const HomotopyWitness& w) {
  if (auto r = validate_chain_map(w.from); !r.pass) {
    r.detail = "from map: " + r.detail;
    return r;
  }
  if (auto r = validate_chain_map(w.to); !r.pass) {
    r.detail = "to map: " + r.detail;
    return r;
  }
  require_parallel(w.from.source(), w.from.target(), w.h.source(), w.h.target(), "homotopy");
  require_parallel(w.to.source(), w.to.target(), w.h.source(), w.h.target(), "homotopy");
  const auto b = homotopy_boundary(w.h);
  for (std::size_t i = 0; i < b.size(); ++i)
    if (w.to.comps()[i] - w.from.comps()[i] != b[i])
      return {false, i, "homotopy equation fails at degree " + std::to_string(i)};
  return {};
}

std::vector<Matrix> homotopy_boundary(const Homotopy& h) {
  const auto& x = h.source();
  const auto& y = h.target();
  const std::size_t n = h.period();
  std::vector<Matrix> out;
  for (std::size_t i = 0; i < n; ++i) {
    const auto li = static_cast<long long>(i);
    Matrix acc = Matrix::zero(x.ring(), y.dim(li), x.dim(li));
    for (std::size_t k = 1; k <= n; ++k) {
      const auto lk = static_cast<long long>(k);
      acc = acc + y.d_pow(li + lk, n - k) * h.at(li + lk) * x.d_pow(li, k - 1);
    }
    out.push_back(std::move(acc));
  }
  return out;
}

ChainMap boundary_map(const Homotopy& h) {
  return {h.source(), h.target(), homotopy_boundary(h)};
}

bool is_homotopy(const ChainMap& f, const ChainMap& g, const Homotopy& h) {
  require_parallel(f.source(), f.target(), g.source(), g.target(), "is_homotopy");
  require_parallel(f.source(), f.target(), h.source(), h.target(), "is_homotopy");
  const auto b = homotopy_boundary(h);
  for (std::size_t i = 0; i < b.size(); ++i)
    if (g.comps()[i] - f.comps()[i] != b[i]) return false;
  return true;
}

ChainMap identity_map(const PeriodicComplex& x) {
  std::vector<Matrix> comps;
  for (auto d : x.dims()) comps.push_back(Matrix::identity(x.ring(), d));
  return {x, x, std::move(comps)};
}

ChainMap zero_map(const PeriodicComplex& source, const PeriodicComplex& target) {
  std::vector<Matrix> comps;
  for (std::size_t i = 0; i < source.period(); ++i)
    comps.push_back(Matrix::zero(source.ring(), target.dims().at(i), source.dims()[i]));
  return {source, target, std::move(comps)};
}

ChainMap compose(const ChainMap& g, const ChainMap& f) {
  if (f.target() != g.source()) throw DimensionError("compose: maps not composable");
  std::vector<Matrix> comps;
  for (std::size_t i = 0; i < f.period(); ++i) comps.push_back(g.comps()[i] * f.comps()[i]);
  return {f.source(), g.target(), std::move(comps)};
}

ChainMap add(const ChainMap& f, const ChainMap& g) {
  require_parallel(f.source(), f.target(), g.source(), g.target(), "add");
  std::vector<Matrix> comps;
  for (std::size_t i = 0; i < f.period(); ++i) comps.push_back(f.comps()[i] + g.comps()[i]);
  return {f.source(), f.target(), std::move(comps)};
}

ChainMap sub(const ChainMap& f, const ChainMap& g) { return add(f, negate(g)); }

ChainMap negate(const ChainMap& f) {
  std::vector<Matrix> comps;
  for (const auto& c : f.comps()) comps.push_back(-c);
  return {f.source(), f.target(), std::move(comps)};
}

Homotopy add(const Homotopy& a, const Homotopy& b) {
  require_parallel(a.source(), a.target(), b.source(), b.target(), "add");
  std::vector<Matrix> comps;
  for (std::size_t i = 0; i < a.period(); ++i) comps.push_back(a.comps()[i] + b.comps()[i]);
  return {a.source(), a.target(), std::move(comps)};
}

Homotopy sub(const Homotopy& a, const Homotopy& b) { return add(a, negate(b)); }

Homotopy negate(const Homotopy& a) {
  std::vector<Matrix> comps;
  for (const auto& c : a.comps()) comps.push_back(-c);
  return {a.source(), a.target(), std::move(comps)};
}

Homotopy whisker(const ChainMap& r, const Homotopy& h) {
  if (r.source() != h.target()) throw DimensionError("whisker: map source is not homotopy target");
  std::vector<Matrix> comps;
  for (std::size_t i = 0; i < h.period(); ++i) comps.push_back(r.comps()[i] * h.comps()[i]);
  return {h.source(), r.target(), std::move(comps)};
}

Homotopy whisker(const Homotopy& h, const ChainMap& s) {
  if (s.target() != h.source()) throw DimensionError("whisker: map target is not homotopy source");
  std::vector<Matrix> comps;
  for (std::size_t i = 0; i < h.period(); ++i)
    comps.push_back(h.comps()[i] * s.at(static_cast<long long>(i) - 1));
  return {s.source(), h.target(), std::move(comps)};
}

PeriodicComplex direct_sum(const PeriodicComplex& a, const PeriodicComplex& b) {
  if (a.ring() != b.ring()) throw RingMismatch("direct_sum");
  if (a.period() != b.period()) throw DimensionError("direct_sum: periods differ");
  std::vector<std::size_t> dims;
  std::vector<Matrix> diffs;
  for (std::size_t i = 0; i < a.period(); ++i) {
    const auto li = static_cast<long long>(i);
    dims.push_back(a.dim(li) + b.dim(li));
    diffs.push_back(block(a.d(li), Matrix::zero(a.ring(), a.dim(li + 1), b.dim(li)),
                          Matrix::zero(a.ring(), b.dim(li + 1), a.dim(li)), b.d(li)));
  }
  return {a.ring(), std::move(dims), std::move(diffs)};
}

ChainMap direct_sum(const ChainMap& f, const ChainMap& g) {
  std::vector<Matrix> comps;
  for (std::size_t i = 0; i < f.period(); ++i) {
    const auto& a = f.comps()[i];
    const auto& b = g.comps()[i];
    comps.push_back(block(a, Matrix::zero(a.ring(), a.rows(), b.cols()),
                          Matrix::zero(a.ring(), b.rows(), a.cols()), b));
  }
  return {direct_sum(f.source(), g.source()), direct_sum(f.target(), g.target()),
          std::move(comps)};
}

std::vector<std::size_t> homology_dims_2(const PeriodicComplex& x) {
  if (x.period() != 2) throw PreconditionError("homology_dims_2 needs period 2");
  if (!x.ring().is_field()) throw PreconditionError("homology_dims_2 needs a prime field");
  return {p_homology_dim(x, 1, 0), p_homology_dim(x, 1, 1)};
}

std::size_t p_homology_dim(const PeriodicComplex& x, std::size_t p, long long i) {
  const std::size_t n = x.period();
  if (p < 1 || p >= n)
    throw PreconditionError("p-homology needs 1 <= p <= N-1, got p=" + std::to_string(p) +
                            " for N=" + std::to_string(n));
  if (!x.ring().is_field()) throw PreconditionError("p-homology needs a prime field");
  const std::size_t kernel = x.dim(i) - rank(x.d_pow(i, p));
  const std::size_t image = rank(x.d_pow(i - static_cast<long long>(n - p), n - p));
  return kernel - image;
}

bool are_homotopy_equivalent_2(const PeriodicComplex& a, const PeriodicComplex& b) {
  if (a.ring() != b.ring()) throw RingMismatch("are_homotopy_equivalent_2");
  return homology_dims_2(a) == homology_dims_2(b);
}

} // namespace ncx
