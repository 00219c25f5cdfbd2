#include "lietab/model.hpp"

#include <algorithm>
#include <fstream>
#include <set>
#include <sstream>

#include "json.hpp"
#include "lietab/errors.hpp"

namespace lietab {

namespace {

using json = nlohmann::ordered_json;

Guard guard_from_json(const json& j) {
  if (j.is_null()) return Guard();
  const unsigned mod = j.at("mod").get<unsigned>();
  std::set<unsigned> res;
  for (const auto& r : j.at("residues")) res.insert(r.get<unsigned>());
  return Guard(mod, res);
}

json guard_to_json(const Guard& g) {
  json j;
  j["mod"] = g.modulus();
  j["residues"] = json::array();
  for (unsigned r : g.residues()) j["residues"].push_back(r);
  return j;
}

GenValue value_from_json(const json& j, const std::string& where) {
  try {
    if (j.is_string()) return parse_genvalue(j.get<std::string>());
    if (j.is_number_integer()) return GenValue(static_cast<long>(j.get<long long>()));
    if (j.is_object())
      return parse_genvalue(j.at("expr").get<std::string>(),
                            guard_from_json(j.contains("guard") ? j.at("guard") : json()));
  } catch (const EngineError& e) {
    fail(e.code(), std::string(e.what()) + " (in " + where + ")");
  }
  fail(Errc::ParseError, "expected an expression at " + where);
}

json value_to_json(const GenValue& v) {
  if (v.guard().is_trivial()) return v.to_string();
  json j;
  j["expr"] = v.to_string();
  j["guard"] = guard_to_json(v.guard());
  return j;
}

/// Collects non-fatal build problems; hard ParseErrors are rethrown.
struct Builder {
  ValidationReport rep;

  void note(const EngineError& e, const std::string& where) {
    if (e.code() == Errc::ParseError) throw e;
    rep.add(errc_name(e.code()), where + ": " + e.what());
  }

  Model build(const json& doc);
};

Model Builder::build(const json& doc) {
  Model m;

  if (!doc.is_object()) fail(Errc::ParseError, "expected a table document object");
  static const std::set<std::string> known_sections = {
      "groups",        "class_functions",       "registries",
      "green_tables",  "multiplicity_matrices", "split_data",
      "series",        "numeric_tables"};
  for (const auto& [key, val] : doc.items())
    if (!known_sections.count(key))
      rep.add("UnknownName", "unrecognized section \"" + key + "\"");

  for (const auto& jg : doc.value("groups", json::array())) {
    const std::string gname = jg.at("name").get<std::string>();
    GenericGroup g;
    g.name = gname;
    try {
      g.order = value_from_json(jg.at("order"), "order of " + gname);
      g.complete = jg.value("complete", false);
      for (const auto& jc : jg.at("classes")) {
        ClassFamily f;
        f.name = jc.at("name").get<std::string>();
        const std::string where = gname + "." + f.name;
        f.centralizer_order = value_from_json(jc.at("centralizer"), where);
        f.inverse_class = jc.value("inverse", f.name);
        f.is_unipotent = jc.value("unipotent", false);
        if (jc.contains("guard") && !jc.at("guard").is_null())
          f.guard = guard_from_json(jc.at("guard"));
        if (jc.contains("family_size"))
          f.family_size = value_from_json(jc.at("family_size"), where);
        if (jc.contains("semisimple_label") && !jc.at("semisimple_label").is_null())
          f.semisimple_label = jc.at("semisimple_label").get<std::string>();
        if (jc.contains("split_parent") && !jc.at("split_parent").is_null())
          f.split_parent = jc.at("split_parent").get<std::string>();
        f.connected_centralizer = jc.value("connected_centralizer", false);
        g.classes.push_back(std::move(f));
      }
    } catch (const EngineError& e) {
      note(e, "group " + gname);
      continue;
    }
    if (m.groups.count(gname)) {
      rep.add("DuplicateName", "group " + gname + " defined twice");
      continue;
    }
    m.group_order.push_back(gname);
    m.groups.emplace(gname, std::make_shared<const GenericGroup>(std::move(g)));
  }

  for (const auto& jf : doc.value("class_functions", json::array())) {
    const std::string gname = jf.at("group").get<std::string>();
    const std::string fname = jf.at("name").get<std::string>();
    auto git = m.groups.find(gname);
    if (git == m.groups.end()) {
      rep.add("UnknownName", "class function " + fname + " names missing group " + gname);
      continue;
    }
    ClassFunction fn(git->second, fname);
    bool ok = true;
    for (const auto& [cls, jv] : jf.at("values").items()) {
      try {
        fn.set(cls, value_from_json(jv, fname + "(" + cls + ")"));
      } catch (const EngineError& e) {
        note(e, "class function " + fname);
        ok = false;
      }
    }
    if (!ok) continue;
    if (m.functions.count(fname)) {
      rep.add("DuplicateName", "class function " + fname + " defined twice");
      continue;
    }
    m.function_order.push_back(fname);
    m.functions.emplace(fname, std::move(fn));
  }

  for (const auto& jr : doc.value("registries", json::array())) {
    const std::string gname = jr.at("group").get<std::string>();
    auto git = m.groups.find(gname);
    if (git == m.groups.end()) {
      rep.add("UnknownName", "registry names missing group " + gname);
      continue;
    }
    DLRegistry reg;
    reg.group = git->second;
    bool ok = true;
    for (const auto& je : jr.at("entries")) {
      DLDatum d;
      d.label = je.at("label").get<std::string>();
      const std::string where = "registry entry " + d.label + " of " + gname;
      try {
        d.torus_order = value_from_json(je.at("torus_order"), where);
        d.orbit_size = value_from_json(je.at("orbit_size"), where);
        d.values = ClassFunction(git->second, "R[" + d.label + "]");
        for (const auto& [cls, jv] : je.at("values").items())
          d.values.set(cls, value_from_json(jv, where + " at " + cls));
        for (const auto& [irr, mult] : je.at("multiplicities").items())
          d.multiplicities[irr] = mult.get<long>();
      } catch (const EngineError& e) {
        note(e, where);
        ok = false;
      }
      reg.entries.push_back(std::move(d));
    }
    for (const auto& ji : jr.at("inverse_pairing"))
      reg.inverse_pairing.push_back(ji.get<std::size_t>());
    if (!ok) continue;
    if (m.registries.count(gname)) {
      rep.add("DuplicateName", "second registry for group " + gname);
      continue;
    }
    m.registry_order.push_back(gname);
    m.registries.emplace(gname, std::move(reg));
  }

  for (const auto& jt : doc.value("green_tables", json::array())) {
    const std::string name = jt.at("name").get<std::string>();
    GreenTable t;
    t.G_label = jt.at("G").get<std::string>();
    t.L_label = jt.at("L").get<std::string>();
    t.P_label = jt.value("P", "");
    for (const auto& ju : jt.at("u_classes")) t.u_classes.push_back(ju.get<std::string>());
    for (const auto& jv : jt.at("v_classes")) t.v_classes.push_back(jv.get<std::string>());
    bool ok = true;
    try {
      const auto& jq = jt.at("Q");
      t.Q = Matrix(t.u_classes.size(), t.v_classes.size());
      for (std::size_t i = 0; i < t.u_classes.size(); ++i)
        for (std::size_t j = 0; j < t.v_classes.size(); ++j)
          t.Q.at(i, j) = value_from_json(jq.at(i).at(j), "green table " + name);
      for (const auto& jw : jt.at("weights"))
        t.weights.push_back(value_from_json(jw, "weights of " + name));
    } catch (const EngineError& e) {
      note(e, "green table " + name);
      ok = false;
    } catch (const json::exception& e) {
      rep.add("DimensionMismatch", "green table " + name + ": " + e.what());
      ok = false;
    }
    if (!ok) continue;
    if (m.greens.count(name)) {
      rep.add("DuplicateName", "green table " + name + " defined twice");
      continue;
    }
    m.green_order.push_back(name);
    m.greens.emplace(name, std::move(t));
  }

  for (const auto& jm : doc.value("multiplicity_matrices", json::array())) {
    const std::string name = jm.at("name").get<std::string>();
    MultiplicityMatrix mm;
    mm.L_label = jm.value("L", "");
    mm.P_label = jm.value("P", "");
    for (const auto& jr : jm.at("rows")) mm.rows.push_back(jr.get<std::string>());
    for (const auto& jc : jm.at("cols")) mm.cols.push_back(jc.get<std::string>());
    for (const auto& jrow : jm.at("entries")) {
      std::vector<long> row;
      for (const auto& je : jrow) row.push_back(je.get<long>());
      mm.entries.push_back(std::move(row));
    }
    if (m.mults.count(name)) {
      rep.add("DuplicateName", "multiplicity matrix " + name + " defined twice");
      continue;
    }
    m.mult_order.push_back(name);
    m.mults.emplace(name, std::move(mm));
  }

  for (const auto& js : doc.value("split_data", json::array())) {
    const std::string gname = js.at("group").get<std::string>();
    SplitClassDatum d;
    d.parent = js.at("parent").get<std::string>();
    for (const auto& jc : js.at("children")) d.children.push_back(jc.get<std::string>());
    for (const auto& jc : js.at("chi_names")) d.chi_names.push_back(jc.get<std::string>());
    const std::size_t k = d.children.size();
    bool ok = true;
    try {
      d.coefficient_matrix = Matrix(k, k);
      d.value_matrix = Matrix(k, k);
      for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = 0; j < k; ++j) {
          d.coefficient_matrix.at(i, j) =
              value_from_json(js.at("coefficients").at(i).at(j),
                              "split datum " + d.parent);
          d.value_matrix.at(i, j) = value_from_json(
              js.at("values").at(i).at(j), "split datum " + d.parent);
        }
    } catch (const EngineError& e) {
      note(e, "split datum " + d.parent);
      ok = false;
    } catch (const json::exception& e) {
      rep.add("DimensionMismatch", "split datum " + d.parent + ": " + e.what());
      ok = false;
    }
    if (ok) m.split_data.emplace_back(gname, std::move(d));
  }

  for (const auto& js : doc.value("series", json::array())) {
    SeriesInfo s;
    s.label = js.at("label").get<std::string>();
    s.group = js.at("group").get<std::string>();
    for (const auto& jc : js.at("characters")) s.characters.push_back(jc.get<std::string>());
    s.method = js.value("method", "");
    s.green = js.value("green", "");
    if (js.contains("psi_of"))
      for (const auto& [k, v] : js.at("psi_of").items()) s.psi_of[k] = v.get<std::string>();
    if (js.contains("signs"))
      for (const auto& [k, v] : js.at("signs").items()) s.signs[k] = v.get<long>();
    s.levi = js.value("levi", "");
    s.mult = js.value("mult", "");
    if (js.contains("twists"))
      for (const auto& [k, v] : js.at("twists").items()) s.twists[k] = v.get<std::string>();
    m.series.push_back(std::move(s));
  }

  for (const auto& jn : doc.value("numeric_tables", json::array())) {
    NumericTable t;
    t.group = jn.at("group").get<std::string>();
    t.q = jn.at("q").get<long long>();
    bool ok = true;
    for (const auto& [chr, jvals] : jn.at("values").items())
      for (const auto& [cls, jv] : jvals.items()) {
        try {
          t.values[chr][cls] =
              value_from_json(jv, "numeric table " + t.group + "@" + std::to_string(t.q));
        } catch (const EngineError& e) {
          note(e, "numeric table " + t.group);
          ok = false;
        }
      }
    if (ok) m.numeric_tables.push_back(std::move(t));
  }

  return m;
}

void merge(ValidationReport& into, const ValidationReport& sub, const std::string& prefix) {
  for (const auto& i : sub.issues) into.add(i.code, prefix + ": " + i.detail);
}

}  // namespace

const GroupPtr& Model::group(const std::string& name) const {
  auto it = groups.find(name);
  if (it == groups.end()) fail(Errc::UnknownName, "no group named " + name);
  return it->second;
}

const ClassFunction& Model::function(const std::string& name) const {
  auto it = functions.find(name);
  if (it == functions.end()) fail(Errc::UnknownName, "no class function named " + name);
  return it->second;
}

const SeriesInfo& Model::series_named(const std::string& label) const {
  for (const auto& s : series)
    if (s.label == label) return s;
  fail(Errc::UnknownName, "no series labelled " + label);
}

ValidationReport validate_model(const Model& m) {
  ValidationReport rep;

  for (const auto& name : m.group_order)
    merge(rep, validate_group(*m.groups.at(name)), "group " + name);

  for (const auto& [gname, reg] : m.registries) {
    merge(rep, validate_registry(reg), "registry of " + gname);
    for (const auto& e : reg.entries)
      for (const auto& [irr, mult] : e.multiplicities) {
        auto it = m.functions.find(irr);
        if (it == m.functions.end() || it->second.group() != reg.group)
          rep.add("UnknownName", "registry of " + gname + ": entry " + e.label +
                                     " references unknown character " + irr);
      }
  }

  for (const auto& name : m.green_order) {
    const GreenTable& t = m.greens.at(name);
    merge(rep, validate_green(t), "green table " + name);
    auto git = m.groups.find(t.G_label);
    if (git == m.groups.end()) {
      rep.add("UnknownName", "green table " + name + " names missing group " + t.G_label);
    } else {
      for (const auto& u : t.u_classes)
        if (!git->second->has_class(u))
          rep.add("UnknownClass", "green table " + name + ": no class " + u +
                                      " in " + t.G_label);
    }
    auto lit = m.groups.find(t.L_label);
    if (lit == m.groups.end()) {
      rep.add("UnknownName", "green table " + name + " names missing group " + t.L_label);
    } else {
      for (std::size_t j = 0; j < t.v_classes.size(); ++j) {
        const auto& v = t.v_classes[j];
        if (!lit->second->has_class(v)) {
          rep.add("UnknownClass", "green table " + name + ": no class " + v +
                                      " in " + t.L_label);
          continue;
        }
        if (j < t.weights.size()) {
          const GenValue want =
              lit->second->order / lit->second->class_named(v).centralizer_order;
          try {
            if (!identity_equal(t.weights[j], want))
              rep.add("WeightMismatch",
                      "green table " + name + ": weight of " + v + " is " +
                          t.weights[j].to_string() + ", expected " + want.to_string());
          } catch (const EngineError& e) {
            rep.add("WeightMismatch", "green table " + name + ": " + e.what());
          }
        }
      }
    }
  }

  std::set<std::string> series_chars;
  for (const auto& [name, mm] : m.mults) {
    merge(rep, validate_mult(mm), "multiplicity matrix " + name);
    for (const auto& r : mm.rows)
      if (!m.functions.count(r))
        rep.add("UnknownName",
                "multiplicity matrix " + name + ": unknown row character " + r);
  }
  for (const auto& s : m.series)
    for (const auto& c : s.characters) series_chars.insert(c);
  for (const auto& [name, mm] : m.mults)
    for (const auto& c : mm.cols)
      if (!m.functions.count(c) && !series_chars.count(c))
        rep.add("UnknownName",
                "multiplicity matrix " + name + ": unknown column character " + c);

  for (const auto& [gname, d] : m.split_data) {
    auto git = m.groups.find(gname);
    if (git == m.groups.end()) {
      rep.add("UnknownName", "split datum " + d.parent + " names missing group " + gname);
      continue;
    }
    merge(rep, validate_split(git->second, d), "split datum " + d.parent);
  }

  std::set<std::string> labels, seen_chars;
  for (const auto& s : m.series) {
    if (!labels.insert(s.label).second)
      rep.add("DuplicateName", "series " + s.label + " defined twice");
    if (!m.groups.count(s.group))
      rep.add("UnknownName", "series " + s.label + " names missing group " + s.group);
    if (s.characters.empty())
      rep.add("EmptySeries", "series " + s.label + " has no characters");
    for (const auto& c : s.characters)
      if (!seen_chars.insert(c).second)
        rep.add("DuplicateName",
                "character " + c + " belongs to more than one series");
    if (!s.method.empty() && s.method != "ingested" && s.method != "uniform" &&
        s.method != "induce")
      rep.add("InvalidArgument", "series " + s.label + ": unknown method " + s.method);
    for (const auto& [c, sign] : s.signs) {
      if (sign != 1 && sign != -1)
        rep.add("InvalidArgument",
                "series " + s.label + ": sign of " + c + " must be ±1");
      if (std::find(s.characters.begin(), s.characters.end(), c) == s.characters.end())
        rep.add("UnknownName", "series " + s.label + ": sign for foreign character " + c);
    }
    if (!s.levi.empty() && !m.groups.count(s.levi))
      rep.add("UnknownName", "series " + s.label + " names missing subgroup " + s.levi);
    for (const auto& [psi, expr] : s.twists) {
      try {
        if (!parse_genvalue(expr).is_constant())
          rep.add("InvalidArgument",
                  "series " + s.label + ": twist of " + psi + " is not constant");
      } catch (const EngineError& e) {
        rep.add("ParseError", "series " + s.label + ": twist of " + psi + ": " + e.what());
      }
    }
  }

  for (const auto& t : m.numeric_tables) {
    auto git = m.groups.find(t.group);
    if (git == m.groups.end()) {
      rep.add("UnknownName", "numeric table names missing group " + t.group);
      continue;
    }
    if (t.q < 2)
      rep.add("InvalidArgument",
              "numeric table for " + t.group + " at q=" + std::to_string(t.q));
    for (const auto& [chr, vals] : t.values) {
      if (!m.functions.count(chr))
        rep.add("UnknownName", "numeric table for " + t.group +
                                   " references unknown character " + chr);
      for (const auto& [cls, v] : vals)
        if (!git->second->has_class(cls))
          rep.add("UnknownClass", "numeric table for " + t.group +
                                      " references unknown class " + cls);
    }
  }

  return rep;
}

Model ingest_string(const std::string& text, const std::string& origin) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::exception& e) {
    fail(Errc::ParseError, origin + ": " + e.what());
  }
  Builder b;
  Model m;
  try {
    m = b.build(doc);
  } catch (const json::exception& e) {
    fail(Errc::ParseError, origin + ": " + e.what());
  }
  ValidationReport rep = b.rep;
  merge(rep, validate_model(m), origin);
  if (!rep.ok()) fail(Errc::InconsistentTable, origin + ":\n" + rep.to_string());
  return m;
}

Model ingest(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) fail(Errc::IoError, "cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ingest_string(ss.str(), path);
}

std::string export_model(const Model& m) {
  json doc;

  if (!m.group_order.empty()) {
    json arr = json::array();
    for (const auto& name : m.group_order) {
      const GenericGroup& g = *m.groups.at(name);
      json jg;
      jg["name"] = g.name;
      jg["order"] = value_to_json(g.order);
      jg["complete"] = g.complete;
      json classes = json::array();
      for (const auto& f : g.classes) {
        json jc;
        jc["name"] = f.name;
        jc["centralizer"] = value_to_json(f.centralizer_order);
        jc["inverse"] = f.inverse_class;
        jc["unipotent"] = f.is_unipotent;
        if (!f.guard.is_trivial()) jc["guard"] = guard_to_json(f.guard);
        if (!identity_equal(f.family_size, GenValue(1)))
          jc["family_size"] = value_to_json(f.family_size);
        if (f.semisimple_label) jc["semisimple_label"] = *f.semisimple_label;
        if (f.split_parent) jc["split_parent"] = *f.split_parent;
        if (f.connected_centralizer) jc["connected_centralizer"] = true;
        classes.push_back(std::move(jc));
      }
      jg["classes"] = std::move(classes);
      arr.push_back(std::move(jg));
    }
    doc["groups"] = std::move(arr);
  }

  if (!m.function_order.empty()) {
    json arr = json::array();
    for (const auto& name : m.function_order) {
      const ClassFunction& f = m.functions.at(name);
      json jf;
      jf["group"] = f.group()->name;
      jf["name"] = name;
      json vals;
      for (const auto& [cls, v] : f.values()) vals[cls] = value_to_json(v);
      jf["values"] = std::move(vals);
      arr.push_back(std::move(jf));
    }
    doc["class_functions"] = std::move(arr);
  }

  if (!m.registry_order.empty()) {
    json arr = json::array();
    for (const auto& gname : m.registry_order) {
      const DLRegistry& reg = m.registries.at(gname);
      json jr;
      jr["group"] = gname;
      json entries = json::array();
      for (const auto& e : reg.entries) {
        json je;
        je["label"] = e.label;
        je["torus_order"] = value_to_json(e.torus_order);
        je["orbit_size"] = value_to_json(e.orbit_size);
        json vals;
        for (const auto& [cls, v] : e.values.values()) vals[cls] = value_to_json(v);
        je["values"] = std::move(vals);
        json mults;
        for (const auto& [irr, mult] : e.multiplicities) mults[irr] = mult;
        je["multiplicities"] = std::move(mults);
        entries.push_back(std::move(je));
      }
      jr["entries"] = std::move(entries);
      jr["inverse_pairing"] = reg.inverse_pairing;
      arr.push_back(std::move(jr));
    }
    doc["registries"] = std::move(arr);
  }

  if (!m.green_order.empty()) {
    json arr = json::array();
    for (const auto& name : m.green_order) {
      const GreenTable& t = m.greens.at(name);
      json jt;
      jt["name"] = name;
      jt["G"] = t.G_label;
      jt["L"] = t.L_label;
      if (!t.P_label.empty()) jt["P"] = t.P_label;
      jt["u_classes"] = t.u_classes;
      jt["v_classes"] = t.v_classes;
      json rows = json::array();
      for (std::size_t i = 0; i < t.Q.rows(); ++i) {
        json row = json::array();
        for (std::size_t j = 0; j < t.Q.cols(); ++j)
          row.push_back(value_to_json(t.Q.at(i, j)));
        rows.push_back(std::move(row));
      }
      jt["Q"] = std::move(rows);
      json ws = json::array();
      for (const auto& w : t.weights) ws.push_back(value_to_json(w));
      jt["weights"] = std::move(ws);
      arr.push_back(std::move(jt));
    }
    doc["green_tables"] = std::move(arr);
  }

  if (!m.mult_order.empty()) {
    json arr = json::array();
    for (const auto& name : m.mult_order) {
      const MultiplicityMatrix& mm = m.mults.at(name);
      json jm;
      jm["name"] = name;
      if (!mm.L_label.empty()) jm["L"] = mm.L_label;
      if (!mm.P_label.empty()) jm["P"] = mm.P_label;
      jm["rows"] = mm.rows;
      jm["cols"] = mm.cols;
      jm["entries"] = mm.entries;
      arr.push_back(std::move(jm));
    }
    doc["multiplicity_matrices"] = std::move(arr);
  }

  if (!m.split_data.empty()) {
    json arr = json::array();
    for (const auto& [gname, d] : m.split_data) {
      json js;
      js["group"] = gname;
      js["parent"] = d.parent;
      js["children"] = d.children;
      js["chi_names"] = d.chi_names;
      auto matrix = [](const Matrix& M) {
        json rows = json::array();
        for (std::size_t i = 0; i < M.rows(); ++i) {
          json row = json::array();
          for (std::size_t j = 0; j < M.cols(); ++j)
            row.push_back(value_to_json(M.at(i, j)));
          rows.push_back(std::move(row));
        }
        return rows;
      };
      js["coefficients"] = matrix(d.coefficient_matrix);
      js["values"] = matrix(d.value_matrix);
      arr.push_back(std::move(js));
    }
    doc["split_data"] = std::move(arr);
  }

  if (!m.series.empty()) {
    json arr = json::array();
    for (const auto& s : m.series) {
      json js;
      js["label"] = s.label;
      js["group"] = s.group;
      js["characters"] = s.characters;
      if (!s.method.empty()) js["method"] = s.method;
      if (!s.green.empty()) js["green"] = s.green;
      if (!s.psi_of.empty()) {
        json jp;
        for (const auto& [k, v] : s.psi_of) jp[k] = v;
        js["psi_of"] = std::move(jp);
      }
      if (!s.signs.empty()) {
        json jp;
        for (const auto& [k, v] : s.signs) jp[k] = v;
        js["signs"] = std::move(jp);
      }
      if (!s.levi.empty()) js["levi"] = s.levi;
      if (!s.mult.empty()) js["mult"] = s.mult;
      if (!s.twists.empty()) {
        json jp;
        for (const auto& [k, v] : s.twists) jp[k] = v;
        js["twists"] = std::move(jp);
      }
      arr.push_back(std::move(js));
    }
    doc["series"] = std::move(arr);
  }

  if (!m.numeric_tables.empty()) {
    json arr = json::array();
    for (const auto& t : m.numeric_tables) {
      json jn;
      jn["group"] = t.group;
      jn["q"] = t.q;
      json vals;
      for (const auto& [chr, cvals] : t.values) {
        json jc;
        for (const auto& [cls, v] : cvals) jc[cls] = value_to_json(v);
        vals[chr] = std::move(jc);
      }
      jn["values"] = std::move(vals);
      arr.push_back(std::move(jn));
    }
    doc["numeric_tables"] = std::move(arr);
  }

  return doc.dump(1) + "\n";
}

}  // namespace lietab
