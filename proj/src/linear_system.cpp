#include "ncx/linear_system.hpp"

#include <utility>

namespace ncx {

LinearSystem::LinearSystem(Ring ring) : ring_(ring) {
  if (!ring_.is_field()) throw PreconditionError("linear systems are solved over prime fields only");
}

std::size_t LinearSystem::add_unknown(std::size_t rows, std::size_t cols) {
  unknowns_.push_back({rows, cols, unknown_size_});
  unknown_size_ += rows * cols;
  return unknowns_.size() - 1;
}

std::size_t LinearSystem::add_equation(std::size_t rows, std::size_t cols) {
  equations_.push_back({rows, cols, equation_size_});
  terms_.emplace_back();
  equation_size_ += rows * cols;
  return equations_.size() - 1;
}

void LinearSystem::add_term(std::size_t equation, const Matrix& left, std::size_t unknown,
                            const Matrix& right) {
  const Shape& e = equations_.at(equation);
  const Shape& u = unknowns_.at(unknown);
  if (left.rows() != e.rows || left.cols() != u.rows || right.rows() != u.cols ||
      right.cols() != e.cols)
    throw DimensionError("linear system term does not fit its equation");
  terms_[equation].push_back({left, unknown, right});
}

Matrix LinearSystem::coefficients() const {
  std::vector<Scalar> a(equation_size_ * unknown_size_, 0);
  for (std::size_t q = 0; q < equations_.size(); ++q) {
    const Shape& e = equations_[q];
    for (const Term& t : terms_[q]) {
      const Shape& u = unknowns_[t.unknown];
      for (std::size_t i = 0; i < e.rows; ++i)
        for (std::size_t j = 0; j < e.cols; ++j) {
          const std::size_t row = e.offset + i * e.cols + j;
          for (std::size_t r = 0; r < u.rows; ++r) {
            const Scalar l = t.left.at(i, r);
            if (l == 0) continue;
            for (std::size_t c = 0; c < u.cols; ++c) {
              Scalar& slot = a[row * unknown_size_ + u.offset + r * u.cols + c];
              slot = ring_.add(slot, ring_.mul(l, t.right.at(c, j)));
            }
          }
        }
    }
  }
  return {ring_, equation_size_, unknown_size_, std::move(a)};
}

std::size_t LinearSystem::solution_dim() const { return nullspace(coefficients()).cols(); }

std::vector<Matrix> LinearSystem::random_solution(Rng& rng) const {
  const Matrix basis = nullspace(coefficients());
  std::vector<Scalar> coeffs(basis.cols());
  for (auto& c : coeffs) c = rng.scalar(ring_);
  std::vector<Scalar> flat(unknown_size_, 0);
  for (std::size_t v = 0; v < unknown_size_; ++v)
    for (std::size_t b = 0; b < basis.cols(); ++b)
      flat[v] = ring_.add(flat[v], ring_.mul(basis.at(v, b), coeffs[b]));
  std::vector<Matrix> out;
  for (const Shape& u : unknowns_)
    out.emplace_back(ring_, u.rows, u.cols,
                     std::vector<Scalar>(flat.begin() + static_cast<std::ptrdiff_t>(u.offset),
                                         flat.begin() +
                                             static_cast<std::ptrdiff_t>(u.offset + u.rows * u.cols)));
  return out;
}

std::vector<std::size_t> add_chain_map_unknowns(LinearSystem& sys, const PeriodicComplex& source,
                                                const PeriodicComplex& target) {
  const Ring& ring = source.ring();
  const std::size_t n = source.period();
  std::vector<std::size_t> u;
  for (std::size_t i = 0; i < n; ++i)
    u.push_back(sys.add_unknown(target.dims()[i], source.dims()[i]));
  for (std::size_t i = 0; i < n; ++i) {
    const auto li = static_cast<long long>(i);
    const std::size_t e = sys.add_equation(target.dim(li + 1), source.dim(li));
    sys.add_term(e, target.d(li), u[i], Matrix::identity(ring, source.dim(li)));
    sys.add_term(e, -Matrix::identity(ring, target.dim(li + 1)), u[(i + 1) % n], source.d(li));
  }
  return u;
}

std::vector<std::size_t> add_homotopy_unknowns(LinearSystem& sys, const PeriodicComplex& source,
                                               const PeriodicComplex& target) {
  std::vector<std::size_t> u;
  for (std::size_t i = 0; i < source.period(); ++i) {
    const auto li = static_cast<long long>(i);
    u.push_back(sys.add_unknown(target.dim(li), source.dim(li - 1)));
  }
  return u;
}

void add_boundary_terms(LinearSystem& sys, std::size_t equation, const PeriodicComplex& source,
                        const PeriodicComplex& target, const std::vector<std::size_t>& h,
                        long long degree, Scalar sign) {
  const std::size_t n = source.period();
  for (std::size_t k = 1; k <= n; ++k) {
    const auto lk = static_cast<long long>(k);
    sys.add_term(equation, scale(sign, target.d_pow(degree + lk, n - k)),
                 h[mod(degree + lk, n)], source.d_pow(degree, k - 1));
  }
}

} // namespace ncx
