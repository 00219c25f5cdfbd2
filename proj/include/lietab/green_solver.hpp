#ifndef LIETAB_GREEN_SOLVER_HPP
#define LIETAB_GREEN_SOLVER_HPP

#include <map>
#include <string>
#include <vector>

#include "lietab/induction.hpp"

namespace lietab {

/// Assembles the right-hand sides R(ψ_i)(u_k) = Σ_ρ m(ψ_i,ρ)·ρ(u_k) as an
/// N×n matrix (row k = class u_k, column i = character ψ_i, in the row order
/// of `m`).  Every ρ with a nonzero multiplicity needs a value table defined
/// on all u-classes.
Matrix rhs_from_mult(const MultiplicityMatrix& m,
                     const std::map<std::string, ClassFunction>& rho_values,
                     const std::vector<std::string>& u_classes);

/// Inverts the linear system Σ_j c_j·Q(u_k,v_j)·ψ_i(v_j) = RHS(k,i) for the
/// Green values Q(u_k,v_j).  `psi_matrix` is the n×n table ψ_i(v_j) (row i,
/// column j); it is inverted once, so a singular character table raises
/// NonInvertibleMatrix.  Weights must be nonzero.
GreenTable solve_green(const Matrix& rhs, const Matrix& psi_matrix,
                       const std::vector<GenValue>& weights,
                       std::vector<std::string> u_classes,
                       std::vector<std::string> v_classes,
                       std::string G_label = "", std::string L_label = "",
                       std::string P_label = "");

}  // namespace lietab

#endif
