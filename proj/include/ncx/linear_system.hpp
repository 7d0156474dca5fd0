#pragma once

// Homogeneous systems of matrix equations sum_t L_t U_{k_t} R_t = 0 over F_p,
// with unknown matrices U_k. Used to sample chain maps and lax squares.

#include <cstddef>
#include <vector>

#include "ncx/exactlin.hpp"
#include "ncx/random.hpp"

namespace ncx {

class LinearSystem {
public:
  /// Throws PreconditionError unless ring is a prime field.
  explicit LinearSystem(Ring ring);

  std::size_t add_unknown(std::size_t rows, std::size_t cols);
  std::size_t add_equation(std::size_t rows, std::size_t cols);
  /// Adds left * U_unknown * right to the equation.
  void add_term(std::size_t equation, const Matrix& left, std::size_t unknown, const Matrix& right);

  std::size_t unknown_count() const { return unknowns_.size(); }
  /// Dimension of the solution space.
  std::size_t solution_dim() const;
  /// Uniformly random solution, one matrix per unknown.
  std::vector<Matrix> random_solution(Rng& rng) const;

private:
  struct Shape {
    std::size_t rows, cols, offset;
  };
  struct Term {
    Matrix left;
    std::size_t unknown;
    Matrix right;
  };
  Matrix coefficients() const;

  Ring ring_;
  std::vector<Shape> unknowns_;
  std::vector<Shape> equations_;
  std::vector<std::vector<Term>> terms_;
  std::size_t unknown_size_ = 0;
  std::size_t equation_size_ = 0;
};

/// Unknown components of a chain map source -> target, with the commuting
/// squares added as equations. Returns one unknown id per degree.
std::vector<std::size_t> add_chain_map_unknowns(LinearSystem& sys, const PeriodicComplex& source,
                                                const PeriodicComplex& target);
/// Unknown homotopy components h^i : source^{i-1} -> target^i.
std::vector<std::size_t> add_homotopy_unknowns(LinearSystem& sys, const PeriodicComplex& source,
                                               const PeriodicComplex& target);
/// Adds sign times the degree-i component of the homotopy boundary of h.
void add_boundary_terms(LinearSystem& sys, std::size_t equation, const PeriodicComplex& source,
                        const PeriodicComplex& target, const std::vector<std::size_t>& h,
                        long long degree, Scalar sign);

} // namespace ncx
