#include "lietab/linalg.hpp"

#include "lietab/errors.hpp"

namespace lietab {

Matrix Matrix::identity(std::size_t n) {
  Matrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m.at(i, i) = GenValue(1);
  return m;
}

namespace {

Poly poly_lcm(const Poly& a, const Poly& b) {
  return Poly::div_exact(a * b, Poly::gcd(a, b)).monic();
}

}  // namespace

GenValue det(const Matrix& A) {
  if (A.rows() != A.cols()) fail(Errc::InvalidArgument, "determinant of a non-square matrix");
  const std::size_t n = A.rows();
  if (n == 0) return GenValue(1);

  // Clear denominators row by row, tracking the combined guard and the
  // product of the clearing factors.
  Guard guard;
  Poly scale(1);
  std::vector<std::vector<Poly>> M(n, std::vector<Poly>(n));
  for (std::size_t i = 0; i < n; ++i) {
    Poly row_lcm(1);
    for (std::size_t j = 0; j < n; ++j) {
      guard = guard.meet(A.at(i, j).guard());
      row_lcm = poly_lcm(row_lcm, A.at(i, j).denominator());
    }
    for (std::size_t j = 0; j < n; ++j)
      M[i][j] = A.at(i, j).numerator() *
                Poly::div_exact(row_lcm, A.at(i, j).denominator());
    scale = scale * row_lcm;
  }

  // Bareiss fraction-free elimination: every division is exact.
  bool negate = false;
  Poly prev(1);
  for (std::size_t k = 0; k + 1 < n; ++k) {
    std::size_t pivot = k;
    while (pivot < n && M[pivot][k].is_zero()) ++pivot;
    if (pivot == n) return GenValue(0).under_guard(guard);
    if (pivot != k) {
      std::swap(M[pivot], M[k]);
      negate = !negate;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j)
        M[i][j] = Poly::div_exact(M[k][k] * M[i][j] - M[i][k] * M[k][j], prev);
      M[i][k] = Poly();
    }
    prev = M[k][k];
  }
  Poly d = M[n - 1][n - 1];
  if (negate) d = -d;
  return GenValue::fraction(d, scale, guard);
}

Matrix inverse(const Matrix& A) {
  if (A.rows() != A.cols()) fail(Errc::InvalidArgument, "inverse of a non-square matrix");
  const std::size_t n = A.rows();
  Matrix work = A;
  Matrix out = Matrix::identity(n);
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t pivot = k;
    while (pivot < n && work.at(pivot, k).is_zero()) ++pivot;
    if (pivot == n)
      fail(Errc::NonInvertibleMatrix, "matrix determinant is the zero function");
    if (pivot != k)
      for (std::size_t j = 0; j < n; ++j) {
        std::swap(work.at(pivot, j), work.at(k, j));
        std::swap(out.at(pivot, j), out.at(k, j));
      }
    GenValue inv_pivot = work.at(k, k).inverse();
    for (std::size_t j = 0; j < n; ++j) {
      work.at(k, j) *= inv_pivot;
      out.at(k, j) *= inv_pivot;
    }
    for (std::size_t i = 0; i < n; ++i) {
      if (i == k || work.at(i, k).is_zero()) continue;
      GenValue factor = work.at(i, k);
      for (std::size_t j = 0; j < n; ++j) {
        work.at(i, j) -= factor * work.at(k, j);
        out.at(i, j) -= factor * out.at(k, j);
      }
    }
  }
  return out;
}

std::vector<GenValue> mat_vec(const Matrix& A, const std::vector<GenValue>& x) {
  if (x.size() != A.cols())
    fail(Errc::DimensionMismatch, "matrix-vector product: " + std::to_string(A.cols()) +
                                      " columns vs " + std::to_string(x.size()) + " entries");
  std::vector<GenValue> out(A.rows());
  for (std::size_t i = 0; i < A.rows(); ++i) {
    GenValue s(0);
    for (std::size_t j = 0; j < A.cols(); ++j) s += A.at(i, j) * x[j];
    out[i] = s;
  }
  return out;
}

std::vector<GenValue> solve_unique(const Matrix& A, const std::vector<GenValue>& b) {
  const std::size_t m = A.rows(), n = A.cols();
  if (b.size() != m)
    fail(Errc::DimensionMismatch, "system has " + std::to_string(m) + " rows but " +
                                      std::to_string(b.size()) + " right-hand entries");
  if (m < n)
    fail(Errc::RankDeficient, "fewer equations (" + std::to_string(m) + ") than unknowns (" +
                                  std::to_string(n) + ")");

  Matrix work = A;
  std::vector<GenValue> rhs = b;
  std::vector<std::size_t> pivot_row(n);
  std::size_t rank = 0;
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot = rank;
    while (pivot < m && work.at(pivot, col).is_zero()) ++pivot;
    if (pivot == m)
      fail(Errc::RankDeficient, "columns are linearly dependent (rank < " +
                                    std::to_string(n) + ")");
    if (pivot != rank) {
      for (std::size_t j = 0; j < n; ++j) std::swap(work.at(pivot, j), work.at(rank, j));
      std::swap(rhs[pivot], rhs[rank]);
    }
    GenValue inv_pivot = work.at(rank, col).inverse();
    for (std::size_t j = col; j < n; ++j) work.at(rank, j) *= inv_pivot;
    rhs[rank] *= inv_pivot;
    for (std::size_t i = 0; i < m; ++i) {
      if (i == rank || work.at(i, col).is_zero()) continue;
      GenValue factor = work.at(i, col);
      for (std::size_t j = col; j < n; ++j) work.at(i, j) -= factor * work.at(rank, j);
      rhs[i] -= factor * rhs[rank];
    }
    pivot_row[col] = rank;
    ++rank;
  }
  for (std::size_t i = rank; i < m; ++i)
    if (!rhs[i].is_zero())
      fail(Errc::Inconsistent, "equation " + std::to_string(i) + " reduces to 0 = " +
                                   rhs[i].to_string());
  std::vector<GenValue> x(n);
  for (std::size_t col = 0; col < n; ++col) x[col] = rhs[pivot_row[col]];
  return x;
}

}  // namespace lietab
