#include "lietab/green_solver.hpp"

#include "lietab/errors.hpp"

namespace lietab {

Matrix rhs_from_mult(const MultiplicityMatrix& m,
                     const std::map<std::string, ClassFunction>& rho_values,
                     const std::vector<std::string>& u_classes) {
  const size_t N = u_classes.size();
  const size_t n = m.rows.size();
  Matrix rhs(N, n);
  for (size_t i = 0; i < n; ++i) {
    for (size_t c = 0; c < m.cols.size(); ++c) {
      const long mult = m.entries[i][c];
      if (mult == 0) continue;
      auto it = rho_values.find(m.cols[c]);
      if (it == rho_values.end())
        fail(Errc::UnknownName, "no value table for " + m.cols[c]);
      for (size_t k = 0; k < N; ++k) {
        if (!it->second.defined_at(u_classes[k]))
          fail(Errc::SupportMismatch,
               m.cols[c] + " has no value at " + u_classes[k]);
        rhs.at(k, i) += GenValue(mult) * it->second.at(u_classes[k]);
      }
    }
  }
  return rhs;
}

GreenTable solve_green(const Matrix& rhs, const Matrix& psi_matrix,
                       const std::vector<GenValue>& weights,
                       std::vector<std::string> u_classes,
                       std::vector<std::string> v_classes,
                       std::string G_label, std::string L_label,
                       std::string P_label) {
  const size_t N = u_classes.size();
  const size_t n = v_classes.size();
  if (psi_matrix.rows() != n || psi_matrix.cols() != n)
    fail(Errc::DimensionMismatch,
         "character matrix is " + std::to_string(psi_matrix.rows()) + "x" +
             std::to_string(psi_matrix.cols()) + ", expected " +
             std::to_string(n) + "x" + std::to_string(n));
  if (rhs.rows() != N || rhs.cols() != n)
    fail(Errc::DimensionMismatch,
         "right-hand side is " + std::to_string(rhs.rows()) + "x" +
             std::to_string(rhs.cols()) + ", expected " + std::to_string(N) +
             "x" + std::to_string(n));
  if (weights.size() != n)
    fail(Errc::DimensionMismatch,
         "expected " + std::to_string(n) + " weights, got " +
             std::to_string(weights.size()));
  for (size_t j = 0; j < n; ++j)
    if (weights[j].is_zero())
      fail(Errc::InvalidArgument, "column weight " + std::to_string(j) + " is zero");

  // The unknowns enter as y_j = c_j·Q(u_k,v_j) with Ψ y = rhs_k (equation i
  // reads Σ_j ψ_i(v_j)·y_j), so one inversion of Ψ serves all N rows.
  const Matrix inv = inverse(psi_matrix);

  GreenTable out;
  out.G_label = std::move(G_label);
  out.L_label = std::move(L_label);
  out.P_label = std::move(P_label);
  out.u_classes = std::move(u_classes);
  out.v_classes = std::move(v_classes);
  out.weights = weights;
  out.Q = Matrix(N, n);
  std::vector<GenValue> row(n);
  for (size_t k = 0; k < N; ++k) {
    for (size_t i = 0; i < n; ++i) row[i] = rhs.at(k, i);
    const auto y = mat_vec(inv, row);
    for (size_t j = 0; j < n; ++j) out.Q.at(k, j) = y[j] / weights[j];
  }
  return out;
}

}  // namespace lietab
