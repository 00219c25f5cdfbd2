#ifndef LIETAB_DL_REGISTRY_HPP
#define LIETAB_DL_REGISTRY_HPP

#include <cstddef>
#include <map>
#include <string>
#include <vector>

#include "lietab/group.hpp"

namespace lietab {

/// One torus/character datum: the values of the associated virtual character
/// R on (part of) the group, the integer multiplicities ⟨R,ρ⟩ keyed by
/// character name, and the number of pairs in the orbit this entry stands
/// for (the weight of the entry in sums over all pairs).
struct DLDatum {
  std::string label;
  GenValue torus_order;
  GenValue orbit_size;
  ClassFunction values;
  std::map<std::string, long> multiplicities;
};

/// The registry of torus/character data for one group, together with the
/// involution sending an entry to the entry of the inverse character.
struct DLRegistry {
  GroupPtr group;
  std::vector<DLDatum> entries;
  std::vector<std::size_t> inverse_pairing;  // index involution

  std::size_t index_of(const std::string& label) const;  // UnknownName
  const DLDatum& entry(const std::string& label) const;
  const DLDatum& paired(std::size_t i) const;
};

/// Structural checks: unique labels, pairing is an involution defined on all
/// entries, paired entries agree on torus order and orbit size, every value
/// function lives on the registry's group.
ValidationReport validate_registry(const DLRegistry& reg);

/// |G|^{-1} Σ_E orbit·|T|·⟨f,R_E⟩·R_E, evaluated on the support of f.
/// IncompleteRegistry if some entry lacks values on that support.
ClassFunction uniform_project(const ClassFunction& f, const DLRegistry& reg);

/// True iff uniform_project(f, reg) equals f symbolically.
bool is_uniform(const ClassFunction& f, const DLRegistry& reg);

/// |G|^{-1} Σ_E orbit·|T|·m(E)·R_{pair(E)}(C): the value at C of the
/// character whose multiplicity vector is `mults`, valid when the class C
/// carries connected-centralizer semantics (asserted by the caller).
GenValue value_via_uniform(const std::map<std::string, long>& mults, const DLRegistry& reg,
                           const std::string& C);

}  // namespace lietab

#endif
