#ifndef LIETAB_LINALG_HPP
#define LIETAB_LINALG_HPP

#include <cstddef>
#include <vector>

#include "lietab/genvalue.hpp"

namespace lietab {

/// Dense matrix over the guarded rational-function field.
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), data_(rows * cols) {}

  static Matrix identity(std::size_t n);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  GenValue& at(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const GenValue& at(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

 private:
  std::size_t rows_ = 0, cols_ = 0;
  std::vector<GenValue> data_;
};

/// Exact determinant via fraction-free elimination on the cleared numerator
/// matrix.  InvalidArgument if A is not square.
GenValue det(const Matrix& A);

/// Exact inverse; NonInvertibleMatrix when the determinant is the zero
/// function.
Matrix inverse(const Matrix& A);

std::vector<GenValue> mat_vec(const Matrix& A, const std::vector<GenValue>& x);

/// Solves A·x = b for an m×n system with m ≥ n.  The solution must be
/// unique: RankDeficient if the columns are dependent, Inconsistent if the
/// equations are contradictory, DimensionMismatch on shape errors.
std::vector<GenValue> solve_unique(const Matrix& A, const std::vector<GenValue>& b);

}  // namespace lietab

#endif
