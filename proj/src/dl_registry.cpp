#include "lietab/dl_registry.hpp"

#include <set>

#include "lietab/errors.hpp"

namespace lietab {

std::size_t DLRegistry::index_of(const std::string& label) const {
  for (std::size_t i = 0; i < entries.size(); ++i)
    if (entries[i].label == label) return i;
  fail(Errc::UnknownName, "no registry entry labelled '" + label + "'");
}

const DLDatum& DLRegistry::entry(const std::string& label) const {
  return entries[index_of(label)];
}

const DLDatum& DLRegistry::paired(std::size_t i) const {
  if (i >= inverse_pairing.size() || inverse_pairing[i] >= entries.size())
    fail(Errc::InvalidArgument, "registry pairing undefined for entry " + std::to_string(i));
  return entries[inverse_pairing[i]];
}

ValidationReport validate_registry(const DLRegistry& reg) {
  ValidationReport rep;
  if (!reg.group) {
    rep.add("MissingGroup", "registry has no group");
    return rep;
  }
  std::set<std::string> labels;
  for (const DLDatum& e : reg.entries) {
    if (!labels.insert(e.label).second)
      rep.add("DuplicateLabel", "entry '" + e.label + "' appears more than once");
    if (e.values.group() != reg.group)
      rep.add("ForeignValues", "entry '" + e.label + "' carries values on another group");
    if (e.torus_order.is_zero())
      rep.add("ZeroTorusOrder", "entry '" + e.label + "'");
  }
  if (reg.inverse_pairing.size() != reg.entries.size()) {
    rep.add("PairingIncomplete", "pairing covers " + std::to_string(reg.inverse_pairing.size()) +
                                     " of " + std::to_string(reg.entries.size()) + " entries");
    return rep;
  }
  for (std::size_t i = 0; i < reg.entries.size(); ++i) {
    std::size_t j = reg.inverse_pairing[i];
    if (j >= reg.entries.size()) {
      rep.add("PairingOutOfRange", "entry '" + reg.entries[i].label + "'");
      continue;
    }
    if (reg.inverse_pairing[j] != i)
      rep.add("PairingNotInvolution", "entry '" + reg.entries[i].label + "' -> '" +
                                          reg.entries[j].label + "' -> '" +
                                          reg.entries[reg.inverse_pairing[j]].label + "'");
    try {
      if (!identity_equal(reg.entries[i].torus_order, reg.entries[j].torus_order))
        rep.add("PairedTorusMismatch",
                "'" + reg.entries[i].label + "' vs '" + reg.entries[j].label + "'");
      if (!identity_equal(reg.entries[i].orbit_size, reg.entries[j].orbit_size))
        rep.add("PairedOrbitMismatch",
                "'" + reg.entries[i].label + "' vs '" + reg.entries[j].label + "'");
    } catch (const EngineError&) {
      rep.add("PairedTorusMismatch", "'" + reg.entries[i].label + "' vs '" +
                                         reg.entries[j].label + "' (disjoint guards)");
    }
  }
  return rep;
}

namespace {

void require_defined(const DLDatum& e, const std::vector<std::string>& classes) {
  for (const std::string& cls : classes)
    if (!e.values.defined_at(cls))
      fail(Errc::IncompleteRegistry,
           "entry '" + e.label + "' has no value at class '" + cls + "'");
}

}  // namespace

ClassFunction uniform_project(const ClassFunction& f, const DLRegistry& reg) {
  if (!f.group() || f.group() != reg.group)
    fail(Errc::InvalidArgument, "function and registry live on different groups");
  const std::vector<std::string> domain = f.support();
  for (const DLDatum& e : reg.entries) require_defined(e, domain);

  ClassFunction out(reg.group, f.name().empty() ? "" : "proj(" + f.name() + ")");
  std::vector<GenValue> coeff;
  coeff.reserve(reg.entries.size());
  for (const DLDatum& e : reg.entries) {
    GenValue ip = inner_product(f, e.values, domain).value;
    coeff.push_back(e.orbit_size * e.torus_order * ip / reg.group->order);
  }
  for (const std::string& cls : domain) {
    GenValue v(0);
    for (std::size_t i = 0; i < reg.entries.size(); ++i)
      v += coeff[i] * reg.entries[i].values.at(cls);
    out.set(cls, v);
  }
  return out;
}

bool is_uniform(const ClassFunction& f, const DLRegistry& reg) {
  ClassFunction proj = uniform_project(f, reg);
  for (const std::string& cls : f.support())
    if (!identity_equal(proj.at(cls), f.at(cls))) return false;
  return true;
}

GenValue value_via_uniform(const std::map<std::string, long>& mults, const DLRegistry& reg,
                           const std::string& C) {
  if (!reg.group) fail(Errc::InvalidArgument, "registry has no group");
  reg.group->index_of(C);  // UnknownClass when absent
  if (reg.inverse_pairing.size() != reg.entries.size())
    fail(Errc::IncompleteRegistry, "inverse pairing is not defined on every entry");

  GenValue sum(0);
  for (std::size_t i = 0; i < reg.entries.size(); ++i) {
    const DLDatum& e = reg.entries[i];
    auto it = mults.find(e.label);
    if (it == mults.end() || it->second == 0) continue;
    const DLDatum& pair = reg.entries[reg.inverse_pairing[i]];
    if (!pair.values.defined_at(C))
      fail(Errc::IncompleteRegistry,
           "entry '" + pair.label + "' has no value at class '" + C + "'");
    sum += e.orbit_size * e.torus_order * GenValue(it->second) * pair.values.at(C);
  }
  return sum / reg.group->order;
}

}  // namespace lietab
