#include "ncx/exactlin.hpp"

#include <algorithm>
#include <sstream>
#include <utility>

namespace ncx {

namespace {

bool is_prime(Scalar p) {
  if (p < 2) return false;
  for (Scalar d = 2; d * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

void require_same_ring(const Matrix& a, const Matrix& b, const char* op) {
  if (a.ring() != b.ring())
    throw RingMismatch(std::string(op) + ": " + a.ring().to_string() + " vs " +
                       b.ring().to_string());
}

void require_same_shape(const Matrix& a, const Matrix& b, const char* op) {
  require_same_ring(a, b, op);
  if (a.rows() != b.rows() || a.cols() != b.cols())
    throw DimensionError(std::string(op) + ": shape " + std::to_string(a.rows()) + "x" +
                         std::to_string(a.cols()) + " vs " + std::to_string(b.rows()) + "x" +
                         std::to_string(b.cols()));
}

// Row-reduces a copy in place; returns the pivot column of each pivot row.
std::vector<std::size_t> row_reduce(const Ring& ring, std::vector<Scalar>& m, std::size_t rows,
                                    std::size_t cols) {
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t piv = r;
    while (piv < rows && m[piv * cols + c] == 0) ++piv;
    if (piv == rows) continue;
    if (piv != r)
      for (std::size_t k = 0; k < cols; ++k) std::swap(m[piv * cols + k], m[r * cols + k]);
    const Scalar inv = ring.inverse(m[r * cols + c]);
    for (std::size_t k = c; k < cols; ++k) m[r * cols + k] = ring.mul(m[r * cols + k], inv);
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == r) continue;
      const Scalar factor = m[i * cols + c];
      if (factor == 0) continue;
      for (std::size_t k = c; k < cols; ++k)
        m[i * cols + k] = ring.sub(m[i * cols + k], ring.mul(factor, m[r * cols + k]));
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

} // namespace

Ring Ring::prime_field(Scalar p) {
  if (p >= (Scalar{1} << 31) || !is_prime(p))
    throw PreconditionError("prime field modulus must be a prime below 2^31, got " +
                            std::to_string(p));
  return Ring{Kind::PrimeField, p};
}

Scalar Ring::reduce(Scalar v) const {
  if (kind_ == Kind::Integers) return v;
  Scalar r = v % p_;
  return r < 0 ? r + p_ : r;
}

Scalar Ring::add(Scalar a, Scalar b) const {
  if (kind_ == Kind::PrimeField) return reduce(a + b);
  Scalar out;
  if (__builtin_add_overflow(a, b, &out)) throw OverflowError("integer addition overflow");
  return out;
}

Scalar Ring::sub(Scalar a, Scalar b) const {
  if (kind_ == Kind::PrimeField) return reduce(a - b);
  Scalar out;
  if (__builtin_sub_overflow(a, b, &out)) throw OverflowError("integer subtraction overflow");
  return out;
}

Scalar Ring::mul(Scalar a, Scalar b) const {
  if (kind_ == Kind::PrimeField) return reduce(a * b); // a, b < 2^31
  Scalar out;
  if (__builtin_mul_overflow(a, b, &out)) throw OverflowError("integer multiplication overflow");
  return out;
}

Scalar Ring::neg(Scalar a) const { return sub(0, a); }

Scalar Ring::inverse(Scalar a) const {
  if (kind_ != Kind::PrimeField) throw PreconditionError("inverse requires a prime field");
  a = reduce(a);
  if (a == 0) throw PreconditionError("inverse of zero");
  // Fermat: a^(p-2)
  Scalar result = 1, base = a, e = p_ - 2;
  while (e > 0) {
    if (e & 1) result = mul(result, base);
    base = mul(base, base);
    e >>= 1;
  }
  return result;
}

std::string Ring::to_string() const {
  return kind_ == Kind::Integers ? std::string("Z") : "F_" + std::to_string(p_);
}

Matrix::Matrix(Ring ring, std::size_t rows, std::size_t cols)
    : ring_(ring), rows_(rows), cols_(cols), entries_(rows * cols, 0) {}

Matrix::Matrix(Ring ring, std::size_t rows, std::size_t cols, std::vector<Scalar> entries)
    : ring_(ring), rows_(rows), cols_(cols), entries_(std::move(entries)) {
  if (entries_.size() != rows * cols)
    throw DimensionError("matrix entry count " + std::to_string(entries_.size()) +
                         " does not match shape " + std::to_string(rows) + "x" +
                         std::to_string(cols));
  for (auto& v : entries_) v = ring_.reduce(v);
}

Matrix Matrix::identity(Ring ring, std::size_t n) {
  Matrix m(ring, n, n);
  for (std::size_t i = 0; i < n; ++i) m.entries_[i * n + i] = 1;
  return m;
}

Matrix Matrix::with_entry(std::size_t r, std::size_t c, Scalar v) const {
  if (r >= rows_ || c >= cols_) throw DimensionError("with_entry: index out of range");
  Matrix out = *this;
  out.entries_[r * cols_ + c] = ring_.reduce(v);
  return out;
}

bool Matrix::is_zero() const {
  return std::all_of(entries_.begin(), entries_.end(), [](Scalar v) { return v == 0; });
}

std::string Matrix::to_string() const {
  std::ostringstream os;
  os << '[';
  for (std::size_t r = 0; r < rows_; ++r) {
    if (r) os << ", ";
    os << '[';
    for (std::size_t c = 0; c < cols_; ++c) os << (c ? "," : "") << at(r, c);
    os << ']';
  }
  os << "] (" << rows_ << 'x' << cols_ << " over " << ring_.to_string() << ')';
  return os.str();
}

Matrix operator*(const Matrix& a, const Matrix& b) {
  require_same_ring(a, b, "mul");
  if (a.cols() != b.rows())
    throw DimensionError("mul: " + std::to_string(a.rows()) + "x" + std::to_string(a.cols()) +
                         " times " + std::to_string(b.rows()) + "x" + std::to_string(b.cols()));
  const Ring& ring = a.ring();
  std::vector<Scalar> out(a.rows() * b.cols(), 0);
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t k = 0; k < a.cols(); ++k) {
      const Scalar aik = a.at(i, k);
      if (aik == 0) continue;
      for (std::size_t j = 0; j < b.cols(); ++j) {
        Scalar& slot = out[i * b.cols() + j];
        slot = ring.add(slot, ring.mul(aik, b.at(k, j)));
      }
    }
  return {ring, a.rows(), b.cols(), std::move(out)};
}

Matrix operator+(const Matrix& a, const Matrix& b) {
  require_same_shape(a, b, "add");
  std::vector<Scalar> out(a.entries().begin(), a.entries().end());
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = a.ring().add(out[i], b.entries()[i]);
  return {a.ring(), a.rows(), a.cols(), std::move(out)};
}

Matrix operator-(const Matrix& a, const Matrix& b) {
  require_same_shape(a, b, "sub");
  std::vector<Scalar> out(a.entries().begin(), a.entries().end());
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = a.ring().sub(out[i], b.entries()[i]);
  return {a.ring(), a.rows(), a.cols(), std::move(out)};
}

Matrix operator-(const Matrix& a) { return scale(-1, a); }

Matrix scale(Scalar s, const Matrix& a) {
  std::vector<Scalar> out(a.entries().begin(), a.entries().end());
  const Scalar rs = a.ring().reduce(s);
  for (auto& v : out) v = a.ring().mul(rs, v);
  return {a.ring(), a.rows(), a.cols(), std::move(out)};
}

Matrix transpose(const Matrix& a) {
  std::vector<Scalar> out(a.rows() * a.cols());
  for (std::size_t r = 0; r < a.rows(); ++r)
    for (std::size_t c = 0; c < a.cols(); ++c) out[c * a.rows() + r] = a.at(r, c);
  return {a.ring(), a.cols(), a.rows(), std::move(out)};
}

std::size_t rank(const Matrix& a) {
  if (!a.ring().is_field()) throw PreconditionError("rank is only supported over prime fields");
  std::vector<Scalar> m(a.entries().begin(), a.entries().end());
  return row_reduce(a.ring(), m, a.rows(), a.cols()).size();
}

Matrix nullspace(const Matrix& a) {
  if (!a.ring().is_field())
    throw PreconditionError("nullspace is only supported over prime fields");
  const std::size_t rows = a.rows(), cols = a.cols();
  std::vector<Scalar> m(a.entries().begin(), a.entries().end());
  const auto pivots = row_reduce(a.ring(), m, rows, cols);
  std::vector<bool> is_pivot(cols, false);
  for (auto c : pivots) is_pivot[c] = true;
  std::vector<std::size_t> free_cols;
  for (std::size_t c = 0; c < cols; ++c)
    if (!is_pivot[c]) free_cols.push_back(c);

  std::vector<Scalar> out(cols * free_cols.size(), 0);
  for (std::size_t j = 0; j < free_cols.size(); ++j) {
    const std::size_t f = free_cols[j];
    out[f * free_cols.size() + j] = 1;
    for (std::size_t r = 0; r < pivots.size(); ++r)
      out[pivots[r] * free_cols.size() + j] = a.ring().neg(m[r * cols + f]);
  }
  return {a.ring(), cols, free_cols.size(), std::move(out)};
}

Matrix block(const Matrix& tl, const Matrix& tr, const Matrix& bl, const Matrix& br) {
  require_same_ring(tl, tr, "block");
  require_same_ring(tl, bl, "block");
  require_same_ring(tl, br, "block");
  if (tl.rows() != tr.rows() || bl.rows() != br.rows() || tl.cols() != bl.cols() ||
      tr.cols() != br.cols())
    throw DimensionError("block: inconsistent block shapes (" + std::to_string(tl.rows()) + "x" +
                         std::to_string(tl.cols()) + ", " + std::to_string(tr.rows()) + "x" +
                         std::to_string(tr.cols()) + "; " + std::to_string(bl.rows()) + "x" +
                         std::to_string(bl.cols()) + ", " + std::to_string(br.rows()) + "x" +
                         std::to_string(br.cols()) + ")");
  const std::size_t rows = tl.rows() + bl.rows(), cols = tl.cols() + tr.cols();
  std::vector<Scalar> out(rows * cols, 0);
  auto place = [&](const Matrix& m, std::size_t r0, std::size_t c0) {
    for (std::size_t r = 0; r < m.rows(); ++r)
      for (std::size_t c = 0; c < m.cols(); ++c) out[(r0 + r) * cols + c0 + c] = m.at(r, c);
  };
  place(tl, 0, 0);
  place(tr, 0, tl.cols());
  place(bl, tl.rows(), 0);
  place(br, tl.rows(), tl.cols());
  return {tl.ring(), rows, cols, std::move(out)};
}

Matrix hcat(const Matrix& a, const Matrix& b) {
  return block(a, b, Matrix::zero(a.ring(), 0, a.cols()), Matrix::zero(a.ring(), 0, b.cols()));
}

Matrix vcat(const Matrix& a, const Matrix& b) {
  return block(a, Matrix::zero(a.ring(), a.rows(), 0), b, Matrix::zero(a.ring(), b.rows(), 0));
}

Matrix sub_block(const Matrix& a, std::size_t row, std::size_t col, std::size_t rows,
                 std::size_t cols) {
  if (row + rows > a.rows() || col + cols > a.cols())
    throw DimensionError("sub_block out of range");
  std::vector<Scalar> out(rows * cols);
  for (std::size_t r = 0; r < rows; ++r)
    for (std::size_t c = 0; c < cols; ++c) out[r * cols + c] = a.at(row + r, col + c);
  return {a.ring(), rows, cols, std::move(out)};
}

} // namespace ncx
