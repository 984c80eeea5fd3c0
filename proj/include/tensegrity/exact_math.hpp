#pragma once

#include "tensegrity/rational.hpp"

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

namespace tensegrity {

/// Dense row-major matrix of exact rationals.
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols);
  /// Builds from nested rows; all rows must have equal length.
  Matrix(std::initializer_list<std::initializer_list<Rational>> rows);
  static Matrix from_rows(const std::vector<Vector>& rows, std::size_t cols);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Rational& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Rational& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  std::span<const Rational> row(std::size_t r) const { return {data_.data() + r * cols_, cols_}; }
  Vector column(std::size_t c) const;

  Vector multiply(std::span<const Rational> v) const;
  void swap_rows(std::size_t a, std::size_t b);

  bool operator==(const Matrix& other) const = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Rational> data_;
};

struct EchelonForm {
  Matrix reduced;                    // reduced row echelon form
  std::vector<std::size_t> pivots;   // pivot column of each nonzero row
};

EchelonForm reduced_echelon(Matrix m);
std::size_t rank(const Matrix& m);
std::size_t rank(const std::vector<Vector>& rows, std::size_t cols);

/// Null-space basis. One vector per free column in ascending order; the free
/// variable is set to 1, the other free variables to 0, and the pivot
/// variables are read off the reduced echelon form.
std::vector<Vector> nullspace(const Matrix& m);

/// Exact determinant by fraction-exact Gaussian elimination.
/// Throws std::invalid_argument for non-square input.
Rational det(const Matrix& m);

/// A relatively open polyhedral cone given by linear functionals.
struct CellSpec {
  std::size_t ambient_dim = 0;
  std::vector<Vector> equalities;  // f(x) = 0
  std::vector<Vector> positives;   // f(x) > 0
  std::vector<Vector> negatives;   // f(x) < 0
};

struct CellResult {
  bool feasible = false;
  std::optional<std::size_t> dim;
  /// A point of the cell when feasible.
  Vector witness;
  /// When infeasible and some strict constraint is present: nonnegative
  /// weights on the strict constraints (positives first, then negatives),
  /// not all zero, plus free weights on the equalities, such that
  ///   sum eq_w * E + sum pos_w * P - sum neg_w * N = 0.
  /// This is a Motzkin alternative certifying infeasibility.
  Vector equality_weights;
  Vector positive_weights;
  Vector negative_weights;
};

/// Decides whether the cone {E x = 0, P x > 0, N x < 0} is nonempty and,
/// if so, the dimension of its linear span. Strictness is handled by
/// maximizing a margin t <= 1 with P x >= t and -N x >= t by exact simplex.
CellResult cell_feasible_dim(const CellSpec& cell);

/// Linear program max c.y subject to A y <= b, y >= 0, with b >= 0 so that
/// y = 0 is feasible. Bland's rule, exact arithmetic.
struct LpSolution {
  bool bounded = true;
  Rational objective;
  Vector primal;  // y
  Vector dual;    // one nonnegative multiplier per row of A
};

LpSolution maximize_from_origin(const Matrix& a, const Vector& b, const Vector& c);

Rational dot(std::span<const Rational> a, std::span<const Rational> b);
bool is_zero(std::span<const Rational> v);

}  // namespace tensegrity
