#include "lietab/verify.hpp"

#include <numeric>
#include <sstream>

#include "lietab/errors.hpp"
#include "lietab/linalg.hpp"

namespace lietab {

bool VerifyReport::ok() const {
  for (const auto& c : checks)
    if (!c.pass) return false;
  return true;
}

std::string VerifyReport::to_string() const {
  std::ostringstream out;
  for (const auto& c : checks) {
    out << (c.pass ? "pass" : "FAIL") << "  " << c.name;
    if (!c.detail.empty()) out << "  (" << c.detail << ")";
    out << "\n";
  }
  return out.str();
}

namespace {

void add(VerifyReport& rep, const std::string& name, bool pass,
         const std::string& detail = "") {
  rep.checks.push_back({name, pass, detail});
}

/// Functions of the model living on the given group, in ingestion order.
std::vector<const ClassFunction*> functions_on(const Model& m, const GroupPtr& g) {
  std::vector<const ClassFunction*> out;
  for (const auto& name : m.function_order) {
    const auto& f = m.functions.at(name);
    if (f.group() == g) out.push_back(&f);
  }
  return out;
}

void check_orthogonality(VerifyReport& rep, const Model& m, const GroupPtr& g) {
  std::vector<const ClassFunction*> irr;
  for (const auto* f : functions_on(m, g))
    if (f->total()) irr.push_back(f);
  if (irr.empty()) return;
  std::string bad;
  for (std::size_t i = 0; i < irr.size() && bad.empty(); ++i)
    for (std::size_t j = i; j < irr.size() && bad.empty(); ++j) {
      try {
        const auto r = inner_product(*irr[i], *irr[j]);
        const GenValue want(i == j ? 1 : 0);
        if (r.partial || !identity_equal(r.value, want))
          bad = "<" + irr[i]->name() + "," + irr[j]->name() + "> = " +
                r.value.to_string();
      } catch (const EngineError& e) {
        bad = e.what();
      }
    }
  add(rep, "orthogonality/" + g->name, bad.empty(), bad);
}

void check_square_matrix(VerifyReport& rep, const Model& m, const GroupPtr& g) {
  std::vector<std::string> uni;
  for (const auto& f : g->classes)
    if (f.is_unipotent) uni.push_back(f.name);
  if (uni.empty()) return;
  std::vector<const ClassFunction*> rows;
  for (const auto* f : functions_on(m, g)) {
    bool covers = true;
    for (const auto& c : uni) covers = covers && f->defined_at(c);
    if (covers) rows.push_back(f);
  }
  if (rows.size() != uni.size()) return;  // not a square system
  Matrix a(rows.size(), uni.size());
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (std::size_t j = 0; j < uni.size(); ++j) a.at(i, j) = rows[i]->at(uni[j]);
  bool pass = false;
  std::string detail;
  try {
    pass = !det(a).is_zero();
    if (!pass) detail = "character/class matrix is singular";
  } catch (const EngineError& e) {
    detail = e.what();
  }
  add(rep, "value-matrix/" + g->name, pass, detail);
}

void check_guard_coverage(VerifyReport& rep, const Model& m, const GroupPtr& g) {
  unsigned M = 1;
  for (const auto& f : g->classes) M = std::lcm(M, f.guard.modulus());
  std::string bad;
  for (const auto* fn : functions_on(m, g)) {
    for (unsigned r = 0; r < M && bad.empty(); ++r) {
      const Guard scenario = Guard::congruent(M, r);
      bool any = false;
      for (const auto& cls : g->classes) {
        Guard meet;
        if (cls.guard.try_meet(scenario, &meet) && fn->defined_at(cls.name))
          any = true;
      }
      if (!any) continue;
      for (const auto& cls : g->classes) {
        Guard meet;
        if (cls.guard.try_meet(scenario, &meet) && !fn->defined_at(cls.name)) {
          bad = fn->name() + " lacks " + cls.name + " under " + scenario.to_string();
          break;
        }
      }
    }
    if (!bad.empty()) break;
  }
  add(rep, "guard-coverage/" + g->name, bad.empty(), bad);
}

void check_specialization(VerifyReport& rep, const Model& m, long long q0) {
  std::string bad;
  std::size_t evaluated = 0;
  for (const auto& name : m.function_order) {
    const auto& f = m.functions.at(name);
    for (const auto& [cls, v] : f.values()) {
      const Guard& cg = f.group()->class_named(cls).guard;
      if (!cg.admits(q0) || !v.guard().admits(q0)) continue;
      try {
        (void)v.eval_at(q0);
        ++evaluated;
      } catch (const EngineError& e) {
        bad = name + "(" + cls + ") at q=" + std::to_string(q0) + ": " + e.what();
        break;
      }
    }
    if (!bad.empty()) break;
  }
  add(rep, "specialize/q=" + std::to_string(q0), bad.empty(),
      bad.empty() ? std::to_string(evaluated) + " values evaluated" : bad);
}

void check_numeric_table(VerifyReport& rep, const Model& m, const NumericTable& t) {
  const std::string name = "numeric/" + t.group + "@q=" + std::to_string(t.q);
  auto git = m.groups.find(t.group);
  if (git == m.groups.end()) {
    add(rep, name, false, "missing group");
    return;
  }
  std::string bad;
  std::size_t compared = 0;
  for (const auto& [chr, vals] : t.values) {
    auto fit = m.functions.find(chr);
    if (fit == m.functions.end()) {
      bad = "no character named " + chr;
      break;
    }
    for (const auto& [cls, want] : vals) {
      try {
        const Cyclotomic got = fit->second.at(cls).eval_at(t.q);
        if (!(got == want.constant_value())) {
          bad = chr + "(" + cls + ") = " + got.to_string() + ", table says " +
                want.to_string();
          break;
        }
        ++compared;
      } catch (const EngineError& e) {
        bad = chr + "(" + cls + "): " + e.what();
        break;
      }
    }
    if (!bad.empty()) break;
  }
  add(rep, name, bad.empty(),
      bad.empty() ? std::to_string(compared) + " values compared" : bad);
}

}  // namespace

VerifyReport verify_model(const Model& m, const VerifyOptions& opt) {
  VerifyReport rep;

  for (const auto& name : m.group_order) {
    const auto rep_g = validate_group(*m.groups.at(name));
    add(rep, "structure/" + name, rep_g.ok(),
        rep_g.ok() ? "" : rep_g.issues.front().code + ": " + rep_g.issues.front().detail);
  }

  for (const auto& name : m.group_order) {
    const GroupPtr& g = m.groups.at(name);
    if (g->complete) check_orthogonality(rep, m, g);
    check_square_matrix(rep, m, g);
    check_guard_coverage(rep, m, g);
  }

  for (const auto& [gname, d] : m.split_data) {
    auto git = m.groups.find(gname);
    if (git == m.groups.end()) {
      add(rep, "split/" + d.parent, false, "missing group " + gname);
      continue;
    }
    const auto rep_s = validate_split(git->second, d);
    add(rep, "split/" + d.parent, rep_s.ok(),
        rep_s.ok() ? "" : rep_s.issues.front().code + ": " + rep_s.issues.front().detail);
  }

  for (long long q0 : opt.at) check_specialization(rep, m, q0);
  for (const auto& t : m.numeric_tables) check_numeric_table(rep, m, t);

  return rep;
}

}  // namespace lietab
