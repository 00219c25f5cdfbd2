#ifndef LIETAB_SPLIT_HPP
#define LIETAB_SPLIT_HPP

#include <map>
#include <string>
#include <vector>

#include "lietab/dl_registry.hpp"
#include "lietab/group.hpp"
#include "lietab/linalg.hpp"

namespace lietab {

/// Data for one F-stable class whose rational points split into k classes
/// C_1..C_k: a basis χ_0..χ_{k-1} of class functions supported on the
/// children (χ_0 the uniform one), the constant coefficient matrix A with
/// ε_{C_i} = Σ_j A[i][j]·χ_j, and the value table V[i][j] = χ_j(C_i).
struct SplitClassDatum {
  std::string parent;
  std::vector<std::string> children;
  std::vector<std::string> chi_names;
  Matrix coefficient_matrix;  // A, constant cyclotomic entries
  Matrix value_matrix;        // V
};

/// Structural checks: shapes; children exist, are distinct, are closed under
/// inverse and (for k ≥ 2) share `parent` as split parent; A is constant and
/// invertible with column sums (k,0,…,0); and the indicator identity
/// Σ_j A[i][j]·χ_j(C_l) = δ_{il}·|C_G(C_i)| holds.
ValidationReport validate_split(const GroupPtr& G, const SplitClassDatum& d);

/// Values (ρ(C_1),…,ρ(C_k)) from the inner products ip[j] = ⟨ρ,χ_j⟩, via
/// ρ(C_i) = ⟨ρ,ε_{C_i}⟩ = Σ_j conj(A[i][j])·ip[j].  DimensionMismatch unless
/// ip has k entries.
std::vector<GenValue> evaluate_on_split(const std::vector<GenValue>& ip,
                                        const SplitClassDatum& d);

/// ⟨ρ,χ_0⟩ computed purely from uniform data: since χ_0 is uniform,
/// ⟨ρ,χ_0⟩ = |G|⁻¹ Σ_E orbit·|T|·m(E)·⟨R_E,χ_0⟩ with m(E) = ⟨ρ,R_E⟩ the
/// registry multiplicities of ρ (keyed by entry label, absent = 0).
/// IncompleteRegistry if some R_E lacks values on the children.
GenValue chi0_inner(const std::map<std::string, long>& rho_mults,
                    const DLRegistry& reg, const SplitClassDatum& d);

}  // namespace lietab

#endif
