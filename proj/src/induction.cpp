#include "lietab/induction.hpp"

#include <algorithm>

#include "lietab/errors.hpp"

namespace lietab {

ValidationReport validate_green(const GreenTable& t) {
  ValidationReport rep;
  const size_t N = t.u_classes.size();
  const size_t n = t.v_classes.size();
  if (t.Q.rows() != N || t.Q.cols() != n)
    rep.add("DimensionMismatch",
            "Q is " + std::to_string(t.Q.rows()) + "x" + std::to_string(t.Q.cols()) +
                " but there are " + std::to_string(N) + " u-classes and " +
                std::to_string(n) + " v-classes");
  if (t.weights.size() != n)
    rep.add("DimensionMismatch",
            "expected " + std::to_string(n) + " column weights, got " +
                std::to_string(t.weights.size()));
  for (size_t j = 0; j < t.weights.size(); ++j) {
    const GenValue& c = t.weights[j];
    if (c.is_zero())
      rep.add("ZeroWeight", "column weight " + std::to_string(j) + " is zero");
    else if (!c.is_polynomial())
      rep.add("WeightNotPolynomial",
              "column weight " + std::to_string(j) + " = " + c.to_string());
  }
  auto dup = [&rep](const std::vector<std::string>& names, const char* what) {
    auto sorted = names;
    std::sort(sorted.begin(), sorted.end());
    auto it = std::adjacent_find(sorted.begin(), sorted.end());
    if (it != sorted.end()) rep.add("DuplicateClass", std::string(what) + " " + *it);
  };
  dup(t.u_classes, "duplicate u-class");
  dup(t.v_classes, "duplicate v-class");
  return rep;
}

long MultiplicityMatrix::at(const std::string& psi, const std::string& rho) const {
  auto ri = std::find(rows.begin(), rows.end(), psi);
  if (ri == rows.end())
    fail(Errc::UnknownName, "no multiplicity row named " + psi);
  auto ci = std::find(cols.begin(), cols.end(), rho);
  if (ci == cols.end())
    fail(Errc::UnknownName, "no multiplicity column named " + rho);
  return entries[static_cast<size_t>(ri - rows.begin())]
                [static_cast<size_t>(ci - cols.begin())];
}

std::map<std::string, long> MultiplicityMatrix::column(const std::string& rho) const {
  auto ci = std::find(cols.begin(), cols.end(), rho);
  if (ci == cols.end())
    fail(Errc::UnknownName, "no multiplicity column named " + rho);
  const size_t c = static_cast<size_t>(ci - cols.begin());
  std::map<std::string, long> out;
  for (size_t r = 0; r < rows.size(); ++r)
    if (entries[r][c] != 0) out[rows[r]] = entries[r][c];
  return out;
}

ValidationReport validate_mult(const MultiplicityMatrix& m) {
  ValidationReport rep;
  if (m.entries.size() != m.rows.size())
    rep.add("DimensionMismatch",
            "entry rows " + std::to_string(m.entries.size()) + " vs row names " +
                std::to_string(m.rows.size()));
  for (size_t r = 0; r < m.entries.size(); ++r)
    if (m.entries[r].size() != m.cols.size())
      rep.add("DimensionMismatch",
              "entry row " + std::to_string(r) + " has " +
                  std::to_string(m.entries[r].size()) + " columns, expected " +
                  std::to_string(m.cols.size()));
  auto dup = [&rep](const std::vector<std::string>& names, const char* what) {
    auto sorted = names;
    std::sort(sorted.begin(), sorted.end());
    auto it = std::adjacent_find(sorted.begin(), sorted.end());
    if (it != sorted.end()) rep.add("DuplicateName", std::string(what) + " " + *it);
  };
  dup(m.rows, "duplicate row name");
  dup(m.cols, "duplicate column name");
  return rep;
}

ClassFunction induce_unipotent(const GreenTable& t, const ClassFunction& psi,
                               const GroupPtr& G) {
  const size_t N = t.u_classes.size();
  const size_t n = t.v_classes.size();
  if (t.Q.rows() != N || t.Q.cols() != n || t.weights.size() != n)
    fail(Errc::DimensionMismatch, "malformed Green table " + t.G_label);
  for (const auto& v : t.v_classes)
    if (!psi.defined_at(v))
      fail(Errc::SupportMismatch,
           psi.name() + " has no value on subgroup class " + v);
  ClassFunction out(G, "ind(" + psi.name() + ")");
  for (size_t k = 0; k < N; ++k) {
    GenValue val(0);
    for (size_t j = 0; j < n; ++j)
      val = val + t.weights[j] * t.Q.at(k, j) * psi.at(t.v_classes[j]);
    out.set(t.u_classes[k], val);
  }
  return out;
}

GenValue schewe_value(const std::map<std::string, long>& m,
                      const std::map<std::string, ClassFunction>& psi_values,
                      const std::string& u,
                      const std::map<std::string, Cyclotomic>& twists) {
  GenValue val(0);
  for (const auto& [psi, mult] : m) {
    if (mult == 0) continue;
    auto it = psi_values.find(psi);
    if (it == psi_values.end())
      fail(Errc::UnknownName, "no value table for " + psi);
    if (!it->second.defined_at(u))
      fail(Errc::SupportMismatch, psi + " has no value at " + u);
    GenValue term = GenValue(mult) * it->second.at(u);
    auto tw = twists.find(psi);
    if (tw != twists.end()) term = GenValue(tw->second) * term;
    val = val + term;
  }
  return val;
}

std::vector<long> decompose_induction(const ClassFunction& R_values,
                                      const std::vector<ClassFunction>& candidates) {
  if (candidates.empty())
    fail(Errc::InvalidArgument, "no candidate characters given");
  const auto points = R_values.support();
  if (points.empty())
    fail(Errc::InvalidArgument, "decomposition target has empty support");
  const size_t N = points.size(), r = candidates.size();
  if (N < r)
    fail(Errc::RankDeficient,
         std::to_string(r) + " candidates but only " + std::to_string(N) +
             " evaluation classes");
  Matrix A(N, r);
  std::vector<GenValue> b(N);
  for (size_t k = 0; k < N; ++k) {
    b[k] = R_values.at(points[k]);
    for (size_t i = 0; i < r; ++i) {
      if (!candidates[i].defined_at(points[k]))
        fail(Errc::SupportMismatch,
             candidates[i].name() + " has no value at " + points[k]);
      A.at(k, i) = candidates[i].at(points[k]);
    }
  }
  const auto x = solve_unique(A, b);
  std::vector<long> out(r);
  for (size_t i = 0; i < r; ++i) {
    if (!x[i].is_integer())
      fail(Errc::NoIntegerSolution,
           "coefficient of " + candidates[i].name() + " is " + x[i].to_string());
    out[i] = x[i].integer_value();
  }
  return out;
}

}  // namespace lietab
