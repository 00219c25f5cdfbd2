#ifndef LIETAB_INDUCTION_HPP
#define LIETAB_INDUCTION_HPP

#include <map>
#include <string>
#include <vector>

#include "lietab/group.hpp"
#include "lietab/linalg.hpp"

namespace lietab {

/// Two-variable Green function table for one induction (G, L, P): values
/// Q(u_k, v_j) indexed by unipotent classes of G (rows) and of L (columns),
/// with the column weights c_j = [L : C_L(v_j)].
struct GreenTable {
  std::string G_label, L_label, P_label;
  std::vector<std::string> u_classes;
  std::vector<std::string> v_classes;
  Matrix Q;
  std::vector<GenValue> weights;
};

/// Shape and weight checks (dimensions consistent, weights nonzero
/// polynomials).
ValidationReport validate_green(const GreenTable& t);

/// Integer matrix of induction multiplicities m(ψ, ρ): rows are characters
/// of the subgroup, columns characters of the ambient group.
struct MultiplicityMatrix {
  std::string L_label, P_label;
  std::vector<std::string> rows;  // ψ names
  std::vector<std::string> cols;  // ρ names
  std::vector<std::vector<long>> entries;

  long at(const std::string& psi, const std::string& rho) const;  // UnknownName
  /// The column of one ambient character as a ψ-keyed map (zeros dropped).
  std::map<std::string, long> column(const std::string& rho) const;
};

ValidationReport validate_mult(const MultiplicityMatrix& m);

/// Induction on unipotent supports: value at u_k is Σ_j c_j·Q(u_k,v_j)·ψ(v_j).
/// ψ must be defined on every v-class; the result lives on `G`, defined on
/// the u-classes.
ClassFunction induce_unipotent(const GreenTable& t, const ClassFunction& psi,
                               const GroupPtr& G);

/// Σ_ψ m(ψ)·twist(ψ)·ψ(u): the value ρ(su) via the multiplicity column of ρ,
/// the value tables of the ψ, and the per-ψ root-of-unity twists (absent
/// entries twist by 1, the unipotent-character case).
GenValue schewe_value(const std::map<std::string, long>& m,
                      const std::map<std::string, ClassFunction>& psi_values,
                      const std::string& u,
                      const std::map<std::string, Cyclotomic>& twists = {});

/// Recovers the unique integer coefficient vector with
/// R_values = Σ_i m_i·candidates[i] on the support of R_values.
/// RankDeficient if the candidate value columns are dependent, Inconsistent
/// if no solution exists, NoIntegerSolution if the unique solution is not
/// integral.
std::vector<long> decompose_induction(const ClassFunction& R_values,
                                      const std::vector<ClassFunction>& candidates);

}  // namespace lietab

#endif
