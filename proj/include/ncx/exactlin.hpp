#pragma once

// Exact dense linear algebra over the integers and prime fields.
//
// A map X -> Y between free modules of ranks m and n is an n x m matrix
// (column-vector convention), so `a * b` is "a after b".

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "ncx/error.hpp"

namespace ncx {

using Scalar = std::int64_t;

class Ring {
public:
  enum class Kind { Integers, PrimeField };

  static Ring integers() { return Ring{Kind::Integers, 0}; }
  /// Throws PreconditionError unless 2 <= p < 2^31 and p is prime.
  static Ring prime_field(Scalar p);

  Kind kind() const { return kind_; }
  bool is_field() const { return kind_ == Kind::PrimeField; }
  /// Modulus; 0 for the integers.
  Scalar p() const { return p_; }

  /// Canonical representative: [0, p) over F_p, unchanged over Z.
  Scalar reduce(Scalar v) const;
  Scalar add(Scalar a, Scalar b) const;
  Scalar sub(Scalar a, Scalar b) const;
  Scalar mul(Scalar a, Scalar b) const;
  Scalar neg(Scalar a) const;
  /// Multiplicative inverse in F_p; throws on zero or over Z.
  Scalar inverse(Scalar a) const;

  std::string to_string() const;

  friend bool operator==(const Ring&, const Ring&) = default;

private:
  Ring(Kind k, Scalar p) : kind_(k), p_(p) {}
  Kind kind_;
  Scalar p_;
};

class Matrix {
public:
  /// Zero matrix of the given shape.
  Matrix(Ring ring, std::size_t rows, std::size_t cols);
  /// Row-major entries; F_p entries are reduced, the length must be rows*cols.
  Matrix(Ring ring, std::size_t rows, std::size_t cols, std::vector<Scalar> entries);

  static Matrix zero(Ring ring, std::size_t rows, std::size_t cols) { return {ring, rows, cols}; }
  static Matrix identity(Ring ring, std::size_t n);

  const Ring& ring() const { return ring_; }
  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  std::span<const Scalar> entries() const { return entries_; }
  Scalar at(std::size_t r, std::size_t c) const { return entries_[r * cols_ + c]; }

  /// Copy with one entry replaced (reduced into the ring).
  Matrix with_entry(std::size_t r, std::size_t c, Scalar v) const;

  bool is_zero() const;
  bool is_square() const { return rows_ == cols_; }
  std::string to_string() const;

  friend bool operator==(const Matrix&, const Matrix&) = default;

private:
  Ring ring_;
  std::size_t rows_;
  std::size_t cols_;
  std::vector<Scalar> entries_;
};

Matrix operator*(const Matrix& a, const Matrix& b);
Matrix operator+(const Matrix& a, const Matrix& b);
Matrix operator-(const Matrix& a, const Matrix& b);
Matrix operator-(const Matrix& a);
Matrix scale(Scalar s, const Matrix& a);
Matrix transpose(const Matrix& a);

/// Rank by Gaussian elimination; prime fields only.
std::size_t rank(const Matrix& a);

/// Columns of the result form a basis of ker(a); prime fields only.
Matrix nullspace(const Matrix& a);

/// [[top_left, top_right], [bottom_left, bottom_right]].
/// Rows of each block row and columns of each block column must agree.
Matrix block(const Matrix& top_left, const Matrix& top_right, const Matrix& bottom_left,
             const Matrix& bottom_right);
/// [a b]
Matrix hcat(const Matrix& a, const Matrix& b);
/// [a; b]
Matrix vcat(const Matrix& a, const Matrix& b);

/// Rectangular sub-block starting at (row, col).
Matrix sub_block(const Matrix& a, std::size_t row, std::size_t col, std::size_t rows,
                 std::size_t cols);

} // namespace ncx
