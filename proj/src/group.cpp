#include "lietab/group.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <sstream>

#include "lietab/errors.hpp"

namespace lietab {

bool GenericGroup::has_class(const std::string& cls) const {
  return std::any_of(classes.begin(), classes.end(),
                     [&](const ClassFamily& f) { return f.name == cls; });
}

std::size_t GenericGroup::index_of(const std::string& cls) const {
  for (std::size_t i = 0; i < classes.size(); ++i)
    if (classes[i].name == cls) return i;
  fail(Errc::UnknownClass, "no class named '" + cls + "' in group '" + name + "'");
}

const ClassFamily& GenericGroup::class_named(const std::string& cls) const {
  return classes[index_of(cls)];
}

GenValue GenericGroup::class_size(const std::string& cls) const {
  const ClassFamily& fam = class_named(cls);
  return (order / fam.centralizer_order).under_guard(fam.guard);
}

std::vector<std::string> GenericGroup::class_names() const {
  std::vector<std::string> out;
  out.reserve(classes.size());
  for (const ClassFamily& f : classes) out.push_back(f.name);
  return out;
}

void ValidationReport::add(std::string code, std::string detail) {
  issues.push_back({std::move(code), std::move(detail)});
}

std::string ValidationReport::to_string() const {
  if (ok()) return "ok";
  std::ostringstream os;
  for (const ValidationIssue& i : issues) os << i.code << ": " << i.detail << "\n";
  return os.str();
}

namespace {

bool is_generically_one(const GenValue& v, const Guard& guard) {
  try {
    return identity_equal(v.under_guard(guard), GenValue(1));
  } catch (const EngineError&) {
    return false;
  }
}

}  // namespace

ValidationReport validate_group(const GenericGroup& G) {
  ValidationReport rep;

  std::set<std::string> seen;
  for (const ClassFamily& fam : G.classes)
    if (!seen.insert(fam.name).second)
      rep.add("DuplicateClass", "class '" + fam.name + "' appears more than once");
  if (!rep.ok()) return rep;  // later checks rely on unique names

  if (!G.order.is_polynomial() || G.order.is_zero())
    rep.add("OrderNotPolynomial", "group order " + G.order.to_string());

  for (const ClassFamily& fam : G.classes) {
    if (!fam.centralizer_order.is_polynomial() || fam.centralizer_order.is_zero()) {
      rep.add("CentralizerNotPolynomial",
              "class '" + fam.name + "': " + fam.centralizer_order.to_string());
      continue;
    }
    if (!fam.family_size.is_polynomial() || fam.family_size.is_zero())
      rep.add("FamilySizeNotPolynomial",
              "class '" + fam.name + "': " + fam.family_size.to_string());

    try {
      GenValue size = (G.order / fam.centralizer_order).under_guard(fam.guard);
      if (!size.is_polynomial())
        rep.add("ClassSizeNotPolynomial", "class '" + fam.name + "': " + size.to_string());
    } catch (const EngineError& e) {
      rep.add("ClassSizeNotPolynomial", "class '" + fam.name + "': " + std::string(e.what()));
    }

    if (!G.has_class(fam.inverse_class)) {
      rep.add("UnknownInverse",
              "class '" + fam.name + "' names inverse '" + fam.inverse_class + "'");
      continue;
    }
    const ClassFamily& inv = G.class_named(fam.inverse_class);
    if (inv.inverse_class != fam.name)
      rep.add("InverseNotInvolution", "'" + fam.name + "' -> '" + inv.name + "' -> '" +
                                          inv.inverse_class + "'");
    try {
      if (!identity_equal(fam.centralizer_order.under_guard(fam.guard),
                          inv.centralizer_order.under_guard(inv.guard)))
        rep.add("InverseCentralizerMismatch", "'" + fam.name + "' vs '" + inv.name + "'");
    } catch (const EngineError&) {
      rep.add("InverseCentralizerMismatch",
              "'" + fam.name + "' vs '" + inv.name + "' (disjoint guards)");
    }
    if (!(fam.guard == inv.guard))
      rep.add("InverseGuardMismatch", "'" + fam.name + "' (" + fam.guard.to_string() +
                                          ") vs '" + inv.name + "' (" + inv.guard.to_string() +
                                          ")");
    if (fam.split_parent != inv.split_parent)
      rep.add("SplitInverseOutside",
              "class '" + fam.name + "' and its inverse '" + inv.name +
                  "' disagree on split parent");

    // A class of size 1 (centralizer = full group order) contains a central
    // element, hence is self-inverse.
    try {
      if (identity_equal(fam.centralizer_order.under_guard(fam.guard),
                         G.order.under_guard(fam.guard)) &&
          is_generically_one(fam.family_size, fam.guard) && fam.inverse_class != fam.name)
        rep.add("IdentityClassInverse",
                "size-one class '" + fam.name + "' has inverse '" + fam.inverse_class + "'");
    } catch (const EngineError&) {
      // disjoint guards cannot occur here: both operands restricted to fam.guard
    }
  }

  // Split siblings (same parent F-stable class) share one centralizer order.
  std::map<std::string, std::vector<const ClassFamily*>> by_parent;
  for (const ClassFamily& fam : G.classes)
    if (fam.split_parent) by_parent[*fam.split_parent].push_back(&fam);
  for (const auto& [parent, members] : by_parent)
    for (std::size_t i = 1; i < members.size(); ++i) {
      try {
        if (!identity_equal(members[0]->centralizer_order.under_guard(members[0]->guard),
                            members[i]->centralizer_order.under_guard(members[i]->guard)))
          rep.add("SplitCentralizerMismatch", "children of '" + parent + "': '" +
                                                  members[0]->name + "' vs '" +
                                                  members[i]->name + "'");
      } catch (const EngineError&) {
        rep.add("SplitCentralizerMismatch",
                "children of '" + parent + "' have disjoint guards");
      }
    }

  // Completeness: under every residue scenario of the class guards, the
  // family-weighted class sizes must sum to the group order.
  if (G.complete) {
    unsigned M = 1;
    for (const ClassFamily& fam : G.classes) M = std::lcm(M, fam.guard.modulus());
    for (unsigned r = 0; r < M; ++r) {
      std::vector<const ClassFamily*> present;
      for (const ClassFamily& fam : G.classes)
        if (fam.guard.admits(r)) present.push_back(&fam);
      if (present.empty()) continue;
      Guard scenario = M == 1 ? Guard() : Guard(M, {r});
      try {
        GenValue sum(0);
        for (const ClassFamily* fam : present)
          sum += (fam->family_size * (G.order / fam->centralizer_order)).under_guard(scenario);
        if (!identity_equal(sum, G.order.under_guard(scenario)))
          rep.add("OrderSumMismatch", "under " + scenario.to_string() + ": sizes sum to " +
                                          sum.to_string());
      } catch (const EngineError& e) {
        rep.add("OrderSumMismatch",
                "under " + scenario.to_string() + ": " + std::string(e.what()));
      }
    }
  }

  return rep;
}

ClassFunction::ClassFunction(GroupPtr group, std::string name)
    : group_(std::move(group)), name_(std::move(name)) {
  if (!group_) fail(Errc::InvalidArgument, "class function requires a group");
}

void ClassFunction::set(const std::string& cls, GenValue v) {
  const ClassFamily& fam = group_->class_named(cls);  // UnknownClass
  Guard meet;
  if (!v.guard().try_meet(fam.guard, &meet))
    fail(Errc::UnsatisfiableGuard, "value guard " + v.guard().to_string() +
                                       " excludes class '" + cls + "' (" +
                                       fam.guard.to_string() + ")");
  values_.insert_or_assign(cls, std::move(v));
}

bool ClassFunction::defined_at(const std::string& cls) const {
  return values_.count(cls) != 0;
}

const GenValue& ClassFunction::at(const std::string& cls) const {
  auto it = values_.find(cls);
  if (it == values_.end())
    fail(Errc::SupportMismatch, "function '" + name_ + "' has no value at class '" + cls + "'");
  return it->second;
}

std::vector<std::string> ClassFunction::support() const {
  std::vector<std::string> out;
  out.reserve(values_.size());
  for (const auto& [cls, v] : values_) out.push_back(cls);
  return out;
}

bool ClassFunction::total() const {
  for (const ClassFamily& fam : group_->classes)
    if (!values_.count(fam.name)) return false;
  return true;
}

ClassFunction ClassFunction::conj() const {
  ClassFunction out = *this;
  if (!name_.empty()) out.name_ = "conj(" + name_ + ")";
  for (auto& [cls, v] : out.values_) v = v.conj();
  return out;
}

InnerProductResult inner_product(const ClassFunction& f, const ClassFunction& g,
                                 const std::vector<std::string>& over) {
  if (!f.group() || f.group() != g.group())
    fail(Errc::InvalidArgument, "inner product requires functions on one group");
  const GenericGroup& G = *f.group();
  GenValue sum(0);
  for (const std::string& cls : over) {
    const ClassFamily& fam = G.class_named(cls);  // UnknownClass
    if (!f.defined_at(cls) || !g.defined_at(cls))
      fail(Errc::SupportMismatch, "class '" + cls + "' outside the support of '" +
                                      (f.defined_at(cls) ? g.name() : f.name()) + "'");
    GenValue term = fam.family_size * f.at(cls) * g.at(cls).conj() / fam.centralizer_order;
    sum += term.under_guard(fam.guard);
  }
  std::set<std::string> covered(over.begin(), over.end());
  bool full = G.complete && covered.size() == G.classes.size();
  if (full)
    for (const ClassFamily& fam : G.classes)
      if (!covered.count(fam.name)) full = false;
  return {sum, !full};
}

InnerProductResult inner_product(const ClassFunction& f, const ClassFunction& g) {
  if (!f.group()) fail(Errc::InvalidArgument, "inner product requires functions on one group");
  return inner_product(f, g, f.group()->class_names());
}

ClassFunction indicator(const GroupPtr& G, const std::string& C) {
  const ClassFamily& fam = G->class_named(C);  // UnknownClass
  if (!is_generically_one(fam.family_size, fam.guard))
    fail(Errc::InvalidArgument, "class '" + C + "' is a parameterized family (size " +
                                    fam.family_size.to_string() +
                                    "); its single-member indicator is not representable");
  ClassFunction eps(G, "eps_" + C);
  for (const ClassFamily& other : G->classes) eps.set(other.name, GenValue(0));
  eps.set(C, fam.centralizer_order.under_guard(fam.guard));
  return eps;
}

ClassFunction combine(const std::vector<std::pair<GenValue, ClassFunction>>& terms) {
  if (terms.empty()) fail(Errc::InvalidArgument, "combine requires at least one term");
  const GroupPtr& G = terms.front().second.group();
  for (const auto& [c, f] : terms)
    if (f.group() != G) fail(Errc::InvalidArgument, "combine requires functions on one group");

  std::vector<std::string> common;
  for (const auto& [cls, v] : terms.front().second.values()) {
    bool everywhere = true;
    for (const auto& [c, f] : terms)
      if (!f.defined_at(cls)) everywhere = false;
    if (everywhere) common.push_back(cls);
  }
  if (common.empty())
    fail(Errc::SupportMismatch, "combine: the supports have empty intersection");

  ClassFunction out(G);
  for (const std::string& cls : common) {
    GenValue v(0);
    for (const auto& [c, f] : terms) v += c * f.at(cls);
    out.set(cls, v);
  }
  return out;
}

}  // namespace lietab
