#include "lietab/split.hpp"

#include <algorithm>

#include "lietab/errors.hpp"

namespace lietab {

ValidationReport validate_split(const GroupPtr& G, const SplitClassDatum& d) {
  ValidationReport rep;
  const size_t k = d.children.size();
  if (k == 0) {
    rep.add("DimensionMismatch", "split datum with no children");
    return rep;
  }
  if (d.chi_names.size() != k || d.coefficient_matrix.rows() != k ||
      d.coefficient_matrix.cols() != k || d.value_matrix.rows() != k ||
      d.value_matrix.cols() != k) {
    rep.add("DimensionMismatch",
            "expected " + std::to_string(k) + " basis functions and " +
                std::to_string(k) + "x" + std::to_string(k) + " matrices");
    return rep;
  }

  auto sorted = d.children;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
    rep.add("DuplicateClass", "repeated child class");

  bool classes_ok = true;
  for (const auto& c : d.children)
    if (!G->has_class(c)) {
      rep.add("UnknownClass", "no class named " + c + " in " + G->name);
      classes_ok = false;
    }
  if (!classes_ok) return rep;

  for (const auto& c : d.children) {
    const auto& fam = G->class_named(c);
    if (std::find(d.children.begin(), d.children.end(), fam.inverse_class) ==
        d.children.end())
      rep.add("InverseOutsideChildren",
              c + " has inverse " + fam.inverse_class + " outside the children");
    if (k >= 2 && (!fam.split_parent || *fam.split_parent != d.parent))
      rep.add("ChildrenNotSiblings",
              c + " is not marked as splitting from " + d.parent);
  }

  const Matrix& A = d.coefficient_matrix;
  for (size_t i = 0; i < k; ++i)
    for (size_t j = 0; j < k; ++j)
      if (!A.at(i, j).is_constant())
        rep.add("CoefficientNotConstant",
                "A[" + std::to_string(i) + "][" + std::to_string(j) +
                    "] = " + A.at(i, j).to_string());
  if (!rep.ok()) return rep;

  if (det(A).is_zero()) {
    rep.add("SingularCoefficientMatrix", "coefficient matrix has zero determinant");
    return rep;
  }

  for (size_t j = 0; j < k; ++j) {
    GenValue sum(0);
    for (size_t i = 0; i < k; ++i) sum = sum + A.at(i, j);
    const GenValue want(j == 0 ? static_cast<long>(k) : 0L);
    if (!identity_equal(sum, want))
      rep.add("ColumnSumMismatch",
              "column " + std::to_string(j) + " of A sums to " + sum.to_string() +
                  ", expected " + want.to_string());
  }

  // ε_{C_i} evaluated at C_l must be δ_{il}·|C_G(C_i)|.
  for (size_t i = 0; i < k; ++i)
    for (size_t l = 0; l < k; ++l) {
      GenValue lhs(0);
      for (size_t j = 0; j < k; ++j)
        lhs = lhs + A.at(i, j) * d.value_matrix.at(l, j);
      const GenValue want =
          i == l ? G->class_named(d.children[i]).centralizer_order : GenValue(0);
      if (!identity_equal(lhs, want))
        rep.add("IndicatorMismatch",
                "sum_j A[" + std::to_string(i) + "][j]·chi_j(" + d.children[l] +
                    ") = " + lhs.to_string() + ", expected " + want.to_string());
    }
  return rep;
}

std::vector<GenValue> evaluate_on_split(const std::vector<GenValue>& ip,
                                        const SplitClassDatum& d) {
  const size_t k = d.children.size();
  if (ip.size() != k)
    fail(Errc::DimensionMismatch,
         "expected " + std::to_string(k) + " inner products, got " +
             std::to_string(ip.size()));
  if (d.coefficient_matrix.rows() != k || d.coefficient_matrix.cols() != k)
    fail(Errc::DimensionMismatch, "malformed coefficient matrix");
  std::vector<GenValue> out(k);
  for (size_t i = 0; i < k; ++i) {
    GenValue v(0);
    for (size_t j = 0; j < k; ++j)
      v = v + d.coefficient_matrix.at(i, j).conj() * ip[j];
    out[i] = v;
  }
  return out;
}

GenValue chi0_inner(const std::map<std::string, long>& rho_mults,
                    const DLRegistry& reg, const SplitClassDatum& d) {
  if (!reg.group) fail(Errc::InvalidArgument, "registry has no group");
  const size_t k = d.children.size();
  if (d.value_matrix.rows() != k || d.value_matrix.cols() != k || k == 0)
    fail(Errc::DimensionMismatch, "malformed split datum " + d.parent);

  ClassFunction chi0(reg.group, d.chi_names.empty() ? "chi_0" : d.chi_names[0]);
  for (size_t i = 0; i < k; ++i) chi0.set(d.children[i], d.value_matrix.at(i, 0));

  GenValue sum(0);
  for (const auto& e : reg.entries) {
    auto it = rho_mults.find(e.label);
    if (it == rho_mults.end() || it->second == 0) continue;
    for (const auto& c : d.children)
      if (!e.values.defined_at(c))
        fail(Errc::IncompleteRegistry,
             "entry " + e.label + " has no value at " + c);
    const GenValue ip = inner_product(e.values, chi0, d.children).value;
    sum = sum + e.orbit_size * e.torus_order * GenValue(it->second) * ip;
  }
  return sum / reg.group->order;
}

}  // namespace lietab
