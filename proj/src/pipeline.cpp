#include "lietab/pipeline.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

#include "json.hpp"
#include "lietab/errors.hpp"
#include "lietab/green_solver.hpp"

namespace lietab {

namespace {

using json = nlohmann::ordered_json;

std::vector<std::string> string_list(const json& j) {
  std::vector<std::string> out;
  for (const auto& e : j) out.push_back(e.get<std::string>());
  return out;
}

}  // namespace

Plan parse_plan_string(const std::string& text, const std::string& origin) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::exception& e) {
    fail(Errc::ParseError, origin + ": " + e.what());
  }
  Plan plan;
  try {
    plan.name = doc.value("name", "");
    for (const auto& js : doc.at("steps")) {
      PlanStep s;
      s.step = js.at("step").get<int>();
      if (s.step < 1 || s.step > 4)
        fail(Errc::InvalidArgument,
             origin + ": step must be 1..4, got " + std::to_string(s.step));
      s.method = js.value("method", "");
      s.series = js.value("series", "");
      s.out = js.value("out", "");
      s.G = js.value("G", "");
      s.L = js.value("L", "");
      s.P = js.value("P", "");
      s.mult = js.value("mult", "");
      if (js.contains("u_classes")) s.u_classes = string_list(js.at("u_classes"));
      if (js.contains("v_classes")) s.v_classes = string_list(js.at("v_classes"));
      if (js.contains("targets")) s.targets = string_list(js.at("targets"));
      if (js.contains("candidates")) s.candidates = string_list(js.at("candidates"));
      if (js.contains("classes")) s.classes = string_list(js.at("classes"));
      s.split = js.value("split", "");
      if (js.contains("ip"))
        for (const auto& [chr, exprs] : js.at("ip").items())
          s.ip[chr] = string_list(exprs);
      plan.steps.push_back(std::move(s));
    }
  } catch (const json::exception& e) {
    fail(Errc::ParseError, origin + ": " + e.what());
  }
  return plan;
}

Plan parse_plan(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) fail(Errc::IoError, "cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse_plan_string(ss.str(), path);
}

void Artifacts::put_green(const std::string& name, GreenTable t) {
  if (has(name)) fail(Errc::InvalidArgument, "artifact " + name + " already exists");
  index_.emplace_back("green", name);
  greens_.emplace(name, std::move(t));
}

void Artifacts::put_mult(const std::string& name, MultiplicityMatrix m) {
  if (has(name)) fail(Errc::InvalidArgument, "artifact " + name + " already exists");
  index_.emplace_back("mult", name);
  mults_.emplace(name, std::move(m));
}

void Artifacts::put_column(const std::string& name, ClassFunction f) {
  if (has(name)) fail(Errc::InvalidArgument, "artifact " + name + " already exists");
  record_group(f.group());
  index_.emplace_back("column", name);
  columns_.emplace(name, std::move(f));
}

void Artifacts::record_group(const GroupPtr& g) {
  if (!g || groups_.count(g->name)) return;
  group_order_.push_back(g->name);
  groups_.emplace(g->name, g);
}

void Artifacts::record_support(const std::string& name, const ClassFunction& f) {
  if (columns_.count(name) || support_.count(name)) return;
  record_group(f.group());
  support_order_.push_back(name);
  support_.emplace(name, f);
}

bool Artifacts::has(const std::string& name) const {
  return greens_.count(name) || mults_.count(name) || columns_.count(name);
}

const GreenTable& Artifacts::green(const std::string& name) const {
  auto it = greens_.find(name);
  if (it == greens_.end()) fail(Errc::UnknownName, "no green artifact " + name);
  return it->second;
}

const MultiplicityMatrix& Artifacts::mult(const std::string& name) const {
  auto it = mults_.find(name);
  if (it == mults_.end()) fail(Errc::UnknownName, "no multiplicity artifact " + name);
  return it->second;
}

const ClassFunction& Artifacts::column(const std::string& name) const {
  auto it = columns_.find(name);
  if (it == columns_.end()) fail(Errc::UnknownName, "no column artifact " + name);
  return it->second;
}

Model Artifacts::to_model() const {
  Model m;
  m.group_order = group_order_;
  m.groups = groups_;
  for (const auto& [kind, name] : index_) {
    if (kind == "green") {
      m.green_order.push_back(name);
      m.greens.emplace(name, greens_.at(name));
    } else if (kind == "mult") {
      m.mult_order.push_back(name);
      m.mults.emplace(name, mults_.at(name));
    } else {
      m.function_order.push_back(name);
      m.functions.emplace(name, columns_.at(name));
    }
  }
  for (const auto& name : support_order_) {
    m.function_order.push_back(name);
    m.functions.emplace(name, support_.at(name));
  }
  return m;
}

std::string export_artifacts_json(const Artifacts& a) {
  return export_model(a.to_model());
}

namespace {

/// Pipeline-wide resolution: artifacts first, then the ingested model; every
/// miss is a MissingData naming what was wanted and who wanted it.
struct Context {
  const Model& model;
  Artifacts& art;

  GroupPtr group(const std::string& name, const std::string& wanter) const {
    auto it = model.groups.find(name);
    if (it == model.groups.end())
      fail(Errc::MissingData, wanter + ": no group named " + name);
    return it->second;
  }

  const ClassFunction& function(const std::string& name, const std::string& wanter) const {
    if (auto* f = find_column(name)) return *f;
    auto it = model.functions.find(name);
    if (it == model.functions.end())
      fail(Errc::MissingData, wanter + ": no class function named " + name);
    return it->second;
  }

  const ClassFunction* find_column(const std::string& name) const {
    try {
      return &art.column(name);
    } catch (const EngineError&) {
      return nullptr;
    }
  }

  const GreenTable& green(const std::string& name, const std::string& wanter) const {
    try {
      return art.green(name);
    } catch (const EngineError&) {
    }
    auto it = model.greens.find(name);
    if (it == model.greens.end())
      fail(Errc::MissingData, wanter + ": no green table named " + name);
    return it->second;
  }

  const MultiplicityMatrix& mult(const std::string& name, const std::string& wanter) const {
    try {
      return art.mult(name);
    } catch (const EngineError&) {
    }
    auto it = model.mults.find(name);
    if (it == model.mults.end())
      fail(Errc::MissingData, wanter + ": no multiplicity matrix named " + name);
    return it->second;
  }

  const SeriesInfo& series(const std::string& label, const std::string& wanter) const {
    for (const auto& s : model.series)
      if (s.label == label) return s;
    fail(Errc::MissingData, wanter + ": no series labelled " + label);
  }

  const DLRegistry& registry(const std::string& gname, const std::string& wanter) const {
    auto it = model.registries.find(gname);
    if (it == model.registries.end())
      fail(Errc::MissingData, wanter + ": no registry for group " + gname);
    return it->second;
  }
};

std::vector<std::string> unipotent_classes(const GroupPtr& g) {
  std::vector<std::string> out;
  for (const auto& f : g->classes)
    if (f.is_unipotent) out.push_back(f.name);
  return out;
}

std::string identity_class(const GroupPtr& g) {
  for (const auto& f : g->classes)
    if (identity_equal(f.centralizer_order, g->order)) return f.name;
  return "";
}

/// Multiplicities of one character across the registry, keyed by entry label.
std::map<std::string, long> registry_mults(const DLRegistry& reg, const std::string& chr) {
  std::map<std::string, long> out;
  for (const auto& e : reg.entries) {
    auto it = e.multiplicities.find(chr);
    if (it != e.multiplicities.end() && it->second != 0) out[e.label] = it->second;
  }
  return out;
}

void run_step1(const Context& ctx, const PlanStep& step) {
  const std::string where = "step 1 (L=" + step.L + ", P=" + step.P + ")";
  try {
    const MultiplicityMatrix& mm = ctx.mult(step.mult, where);
    GroupPtr G = ctx.group(step.G, where);
    GroupPtr L = ctx.group(step.L, where);
    auto u = step.u_classes.empty() ? unipotent_classes(G) : step.u_classes;
    auto v = step.v_classes.empty() ? unipotent_classes(L) : step.v_classes;
    const std::size_t n = v.size();
    if (mm.rows.size() != n)
      fail(Errc::DimensionMismatch,
           std::to_string(mm.rows.size()) + " characters for " +
               std::to_string(n) + " classes of " + step.L);

    Matrix psi(n, n);
    for (std::size_t i = 0; i < n; ++i) {
      const ClassFunction& f = ctx.function(mm.rows[i], where);
      for (std::size_t j = 0; j < n; ++j) psi.at(i, j) = f.at(v[j]);
    }
    std::vector<GenValue> weights(n);
    for (std::size_t j = 0; j < n; ++j)
      weights[j] = L->order / L->class_named(v[j]).centralizer_order;

    std::map<std::string, ClassFunction> rho;
    for (const auto& c : mm.cols) rho.emplace(c, ctx.function(c, where));
    const Matrix rhs = rhs_from_mult(mm, rho, u);

    GreenTable t = solve_green(rhs, psi, weights, u, v, step.G, step.L, step.P);
    const std::string name = step.out.empty() ? "Q[" + step.L + "]" : step.out;
    ctx.art.record_group(G);
    ctx.art.record_group(L);
    ctx.art.put_green(name, std::move(t));
  } catch (const EngineError& e) {
    if (e.code() == Errc::MissingData) throw;
    fail(e.code(), where + ": " + e.what());
  }
}

void run_step2(const Context& ctx, const PlanStep& step) {
  const std::string where = "step 2 (series " + step.series + ")";
  const SeriesInfo& s = ctx.series(step.series, where);
  GroupPtr G = ctx.group(s.group, where);
  const auto uni = unipotent_classes(G);
  const std::string method = s.method.empty() ? "ingested" : s.method;

  for (const auto& chr : s.characters) {
    ClassFunction col(G, chr + "@u");
    if (method == "ingested") {
      const ClassFunction& f = ctx.function(chr, where);
      for (const auto& c : uni) col.set(c, f.at(c));  // SupportMismatch if absent
    } else if (method == "uniform") {
      const DLRegistry& reg = ctx.registry(s.group, where);
      const auto mults = registry_mults(reg, chr);
      if (mults.empty())
        fail(Errc::MissingData,
             where + ": registry has no multiplicities for " + chr);
      for (const auto& c : uni) col.set(c, value_via_uniform(mults, reg, c));
    } else if (method == "induce") {
      const GreenTable& t = ctx.green(s.green, where);
      auto pit = s.psi_of.find(chr);
      if (pit == s.psi_of.end())
        fail(Errc::MissingData, where + ": no induced character assigned to " + chr);
      const ClassFunction& psi = ctx.function(pit->second, where);
      ClassFunction ind = induce_unipotent(t, psi, G);
      long sign = 1;
      if (auto sit = s.signs.find(chr); sit != s.signs.end()) sign = sit->second;
      for (const auto& c : ind.support()) col.set(c, GenValue(sign) * ind.at(c));
      const std::string id = identity_class(G);
      if (!id.empty() && col.defined_at(id)) {
        const GenValue deg = col.at(id);
        const Cyclotomic lead = deg.numerator().leading();
        if (deg.is_zero() || !deg.is_polynomial() || !lead.is_rational() ||
            !(lead.rational_value() > 0))
          fail(Errc::InconsistentTable,
               where + ": sign of " + chr + " gives non-positive degree " +
                   deg.to_string());
      }
    } else {
      fail(Errc::InvalidArgument, where + ": unknown method " + method);
    }
    ctx.art.put_column(step.out.empty() ? chr + "@u" : step.out + ":" + chr,
                       std::move(col));
  }
}

void run_step3(const Context& ctx, const PlanStep& step) {
  const std::string where = "step 3";
  if (step.targets.empty() || step.candidates.empty())
    fail(Errc::InvalidArgument, where + ": targets and candidates are required");
  std::vector<ClassFunction> cands;
  for (const auto& c : step.candidates) {
    const ClassFunction& f = ctx.function(c, where);
    ctx.art.record_support(c, f);
    cands.push_back(f);
  }
  MultiplicityMatrix mm;
  mm.L_label = step.L;
  mm.P_label = step.P;
  mm.rows = step.targets;
  mm.cols = step.candidates;
  for (const auto& t : step.targets) {
    const ClassFunction& R = ctx.function(t, where);
    ctx.art.record_support(t, R);
    std::vector<long> row;
    try {
      row = decompose_induction(R, cands);
    } catch (const EngineError& e) {
      if (e.code() == Errc::MissingData) throw;
      fail(e.code(), where + " (target " + t + "): " + e.what());
    }
    mm.entries.push_back(std::move(row));
  }
  const std::string name =
      step.out.empty() ? (step.L.empty() ? "m[step3]" : "m[" + step.L + "]") : step.out;
  ctx.art.put_mult(name, std::move(mm));
}

void run_step4(const Context& ctx, const PlanStep& step) {
  const std::string where = "step 4 (series " + step.series + ")";
  const SeriesInfo& s = ctx.series(step.series, where);

  if (step.method == "schewe") {
    if (s.levi.empty())
      fail(Errc::MissingData, where + ": series has no subgroup reference");
    GroupPtr L = ctx.group(s.levi, where);
    const MultiplicityMatrix& mm = ctx.mult(s.mult, where);
    auto classes = step.classes.empty() ? L->class_names() : step.classes;

    std::map<std::string, ClassFunction> psi_values;
    for (const auto& r : mm.rows) {
      const ClassFunction& f = ctx.function(r, where);
      psi_values.emplace(r, f);
    }
    std::map<std::string, Cyclotomic> twists;
    for (const auto& [psi, expr] : s.twists)
      twists.emplace(psi, parse_genvalue(expr).constant_value());

    for (const auto& chr : s.characters) {
      const auto col = mm.column(chr);
      const std::string name = chr + "@" + s.label;
      ClassFunction out(L, name);
      for (const auto& c : classes)
        out.set(c, schewe_value(col, psi_values, c, twists));
      ctx.art.put_column(name, std::move(out));
    }
    return;
  }

  if (step.method == "split") {
    GroupPtr G = ctx.group(s.group, where);
    const SplitClassDatum* datum = nullptr;
    for (const auto& [gname, d] : ctx.model.split_data)
      if (gname == s.group && (step.split.empty() || d.parent == step.split))
        datum = &d;
    if (!datum)
      fail(Errc::MissingData, where + ": no split datum" +
                                  (step.split.empty() ? "" : " for " + step.split) +
                                  " in group " + s.group);
    for (const auto& chr : s.characters) {
      auto it = step.ip.find(chr);
      if (it == step.ip.end())
        fail(Errc::MissingData, where + ": no inner products given for " + chr);
      std::vector<GenValue> ip;
      for (std::size_t j = 0; j < it->second.size(); ++j) {
        const std::string& expr = it->second[j];
        if (expr == "auto") {
          if (j != 0)
            fail(Errc::InvalidArgument,
                 where + ": only the leading inner product can be derived");
          const DLRegistry& reg = ctx.registry(s.group, where);
          ip.push_back(chi0_inner(registry_mults(reg, chr), reg, *datum));
        } else {
          ip.push_back(parse_genvalue(expr));
        }
      }
      const auto vals = evaluate_on_split(ip, *datum);
      const std::string name = chr + "@" + datum->parent;
      ClassFunction out(G, name);
      for (std::size_t i = 0; i < datum->children.size(); ++i)
        out.set(datum->children[i], vals[i]);
      ctx.art.put_column(name, std::move(out));
    }
    return;
  }

  if (step.method == "uniform") {
    GroupPtr G = ctx.group(s.group, where);
    const DLRegistry& reg = ctx.registry(s.group, where);
    auto classes = step.classes.empty() ? G->class_names() : step.classes;
    for (const auto& chr : s.characters) {
      const auto mults = registry_mults(reg, chr);
      if (mults.empty())
        fail(Errc::MissingData, where + ": registry has no multiplicities for " + chr);
      const std::string name = chr + "@" + s.label;
      ClassFunction out(G, name);
      for (const auto& c : classes) out.set(c, value_via_uniform(mults, reg, c));
      ctx.art.put_column(name, std::move(out));
    }
    return;
  }

  fail(Errc::InvalidArgument, where + ": unknown method " + step.method);
}

}  // namespace

Artifacts run_pipeline(const Model& model, const Plan& plan) {
  Artifacts art;
  Context ctx{model, art};
  for (const auto& step : plan.steps) {
    switch (step.step) {
      case 1: run_step1(ctx, step); break;
      case 2: run_step2(ctx, step); break;
      case 3: run_step3(ctx, step); break;
      case 4: run_step4(ctx, step); break;
      default:
        fail(Errc::InvalidArgument, "plan step " + std::to_string(step.step));
    }
  }
  return art;
}

}  // namespace lietab
