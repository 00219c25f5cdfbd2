#ifndef LIETAB_TEST_FIXTURES_HPP
#define LIETAB_TEST_FIXTURES_HPP

// Shared hand-built table fragments used across the test binaries.  The same
// data exists as JSON under data/; tests that exercise ingestion compare the
// two representations, so keep them in sync.

#include <map>
#include <memory>
#include <string>
#include <vector>

#include "lietab/dl_registry.hpp"
#include "lietab/group.hpp"
#include "lietab/model.hpp"
#include "lietab/split.hpp"

namespace lietab::fixtures {

inline GenValue gv(const std::string& expr, Guard g = Guard()) {
  return parse_genvalue(expr, g);
}

inline Guard even_q() { return Guard::congruent(2, 0); }

// ---------------------------------------------------------------------------
// Unipotent fragment of Sp4(q), q even: six unipotent classes and the six
// unipotent characters restricted to them.
// ---------------------------------------------------------------------------

struct B2Fixture {
  GroupPtr G;
  std::vector<std::string> class_names;  // A1 A2 A31 A32 A41 A42
  std::vector<std::string> psi_names;    // psi_0 psi_9 ... psi_13
  std::map<std::string, ClassFunction> psi;
};

inline B2Fixture make_b2() {
  B2Fixture fx;
  GenericGroup g;
  g.name = "B2";
  g.order = gv("q^4*(q^2-1)*(q^4-1)");
  g.complete = false;  // semisimple and mixed classes are not listed

  auto cls = [](const std::string& n, const std::string& cent) {
    ClassFamily f;
    f.name = n;
    f.centralizer_order = gv(cent);
    f.inverse_class = n;
    f.is_unipotent = true;
    f.guard = even_q();
    return f;
  };
  g.classes = {cls("A1", "q^4*(q^2-1)*(q^4-1)"), cls("A2", "q^4*(q^2-1)"),
               cls("A31", "q^4*(q^2-1)"),        cls("A32", "q^4"),
               cls("A41", "2*q^2"),              cls("A42", "2*q^2")};
  fx.G = std::make_shared<const GenericGroup>(std::move(g));
  fx.class_names = {"A1", "A2", "A31", "A32", "A41", "A42"};
  fx.psi_names = {"psi_0", "psi_9", "psi_10", "psi_11", "psi_12", "psi_13"};

  const std::vector<std::vector<std::string>> rows = {
      {"1", "1", "1", "1", "1", "1"},
      {"(1/2)*q*(q+1)^2", "(1/2)*q*(q+1)", "(1/2)*q*(q+1)", "q/2", "q/2", "-q/2"},
      {"(1/2)*q*(q-1)^2", "-(1/2)*q*(q-1)", "-(1/2)*q*(q-1)", "q/2", "q/2", "-q/2"},
      {"(1/2)*q*(q^2+1)", "-(1/2)*q*(q-1)", "(1/2)*q*(q+1)", "q/2", "-q/2", "q/2"},
      {"(1/2)*q*(q^2+1)", "(1/2)*q*(q+1)", "-(1/2)*q*(q-1)", "q/2", "-q/2", "q/2"},
      {"q^4", "0", "0", "0", "0", "0"}};
  for (std::size_t i = 0; i < fx.psi_names.size(); ++i) {
    ClassFunction f(fx.G, fx.psi_names[i]);
    for (std::size_t j = 0; j < fx.class_names.size(); ++j)
      f.set(fx.class_names[j], gv(rows[i][j]));
    fx.psi.emplace(fx.psi_names[i], std::move(f));
  }
  return fx;
}

// ---------------------------------------------------------------------------
// F4(q), q even, 3|q-1: the fragment holding the three classes into which the
// rational points of one F-stable class split, together with the uniform part
// chi_0 and the two cuspidal characteristic functions chi_1, chi_2.
// ---------------------------------------------------------------------------

struct SplitFixture {
  GroupPtr G;
  std::vector<std::string> children;  // C1 C2 C3
  ClassFunction chi0, chi1, chi2;
  SplitClassDatum datum;
};

inline SplitFixture make_f4_split() {
  SplitFixture fx;
  Guard guard(6, {4});  // q even and q = 1 mod 3
  GenericGroup g;
  g.name = "F4";
  g.order = gv("q^24*(q^2-1)*(q^6-1)*(q^8-1)*(q^12-1)");
  g.complete = false;

  auto cls = [&](const std::string& n, const std::string& inv) {
    ClassFamily f;
    f.name = n;
    f.centralizer_order = gv("3*q^4");
    f.inverse_class = inv;
    f.is_unipotent = false;
    f.semisimple_label = "h3";
    f.guard = guard;
    f.split_parent = "h3_reg";
    return f;
  };
  g.classes = {cls("C1", "C1"), cls("C2", "C3"), cls("C3", "C2")};
  fx.G = std::make_shared<const GenericGroup>(std::move(g));
  fx.children = {"C1", "C2", "C3"};

  auto chi = [&](const std::string& name, const std::vector<std::string>& vals) {
    ClassFunction f(fx.G, name);
    for (std::size_t i = 0; i < 3; ++i) f.set(fx.children[i], gv(vals[i]));
    return f;
  };
  fx.chi0 = chi("chi_0", {"q^4", "q^4", "q^4"});
  fx.chi1 = chi("chi_1", {"q^4", "q^4*z(3)", "q^4*z(3)^2"});
  fx.chi2 = chi("chi_2", {"q^4", "q^4*z(3)^2", "q^4*z(3)"});

  fx.datum.parent = "h3_reg";
  fx.datum.children = fx.children;
  fx.datum.chi_names = {"chi_0", "chi_1", "chi_2"};
  const GenValue one(1), th(Cyclotomic::root_of_unity(3, 1)),
      th2(Cyclotomic::root_of_unity(3, 2));
  fx.datum.coefficient_matrix = Matrix(3, 3);
  const GenValue A[3][3] = {{one, one, one}, {one, th2, th}, {one, th, th2}};
  const ClassFunction* chis[3] = {&fx.chi0, &fx.chi1, &fx.chi2};
  fx.datum.value_matrix = Matrix(3, 3);
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 3; ++j) {
      fx.datum.coefficient_matrix.at(i, j) = A[i][j];
      fx.datum.value_matrix.at(i, j) = chis[j]->at(fx.children[i]);
    }
  return fx;
}

// A one-child datum on the order-6 table: the sole "split" class is 2a and
// chi_0 is its normalised indicator (which is uniform there).
inline SplitClassDatum make_order6_split_datum() {
  SplitClassDatum d;
  d.parent = "2a";
  d.children = {"2a"};
  d.chi_names = {"chi_0"};
  d.coefficient_matrix = Matrix(1, 1);
  d.coefficient_matrix.at(0, 0) = GenValue(1);
  d.value_matrix = Matrix(1, 1);
  d.value_matrix.at(0, 0) = GenValue(2);  // centralizer order of 2a
  return d;
}

// ---------------------------------------------------------------------------
// SL2(q), q even, as a generic table: the two parameterized torus families
// are single rows with generic family sizes.  Only the two irreducibles that
// exist uniformly in q (trivial and Steinberg) are carried.
// ---------------------------------------------------------------------------

struct SL2Fixture {
  GroupPtr G;
  std::vector<std::string> class_names;
  std::map<std::string, ClassFunction> irr;
  DLRegistry reg;
};

namespace detail {
inline DLDatum datum(const GroupPtr& G, const std::vector<std::string>& classes,
                     const std::string& label, const std::string& torus,
                     const std::string& orbit, const std::vector<std::string>& vals,
                     std::map<std::string, long> mults, Guard guard = Guard()) {
  DLDatum d;
  d.label = label;
  d.torus_order = gv(torus, guard);
  d.orbit_size = gv(orbit, guard);
  d.values = ClassFunction(G, "R[" + label + "]");
  for (std::size_t i = 0; i < vals.size(); ++i) d.values.set(classes[i], gv(vals[i], guard));
  d.multiplicities = std::move(mults);
  return d;
}
}  // namespace detail

inline SL2Fixture make_sl2_generic() {
  SL2Fixture fx;
  Guard ev = even_q();
  GenericGroup g;
  g.name = "SL2";
  g.order = gv("q^3-q");
  g.complete = true;

  auto cls = [&](const std::string& n, const std::string& cent, bool uni,
                 const std::string& family) {
    ClassFamily f;
    f.name = n;
    f.centralizer_order = gv(cent);
    f.inverse_class = n;
    f.is_unipotent = uni;
    f.guard = ev;
    f.family_size = gv(family);
    return f;
  };
  g.classes = {cls("id", "q^3-q", true, "1"), cls("u", "q", true, "1"),
               cls("c3", "q-1", false, "(q-2)/2"), cls("c4", "q+1", false, "q/2")};
  fx.G = std::make_shared<const GenericGroup>(std::move(g));
  fx.class_names = {"id", "u", "c3", "c4"};

  auto chr = [&](const std::string& name, const std::vector<std::string>& vals) {
    ClassFunction f(fx.G, name);
    for (std::size_t i = 0; i < vals.size(); ++i) f.set(fx.class_names[i], gv(vals[i]));
    return f;
  };
  fx.irr.emplace("triv", chr("triv", {"1", "1", "1", "1"}));
  fx.irr.emplace("st", chr("st", {"q", "0", "1", "-1"}));

  fx.reg.group = fx.G;
  fx.reg.entries = {
      detail::datum(fx.G, fx.class_names, "T,1", "q-1", "q*(q+1)/2",
                    {"q+1", "1", "2", "0"}, {{"triv", 1}, {"st", 1}}, ev),
      detail::datum(fx.G, fx.class_names, "T',1", "q+1", "q*(q-1)/2",
                    {"1-q", "1", "0", "2"}, {{"triv", 1}, {"st", -1}}, ev)};
  fx.reg.inverse_pairing = {0, 1};
  return fx;
}

// SL2(2): three classes, three irreducibles, constant values.
inline SL2Fixture make_sl2_q2() {
  SL2Fixture fx;
  GenericGroup g;
  g.name = "SL2q2";
  g.order = gv("6");
  g.complete = true;

  auto cls = [](const std::string& n, const std::string& cent, bool uni) {
    ClassFamily f;
    f.name = n;
    f.centralizer_order = parse_genvalue(cent);
    f.inverse_class = n;
    f.is_unipotent = uni;
    return f;
  };
  g.classes = {cls("1a", "6", true), cls("2a", "2", true), cls("3a", "3", false)};
  fx.G = std::make_shared<const GenericGroup>(std::move(g));
  fx.class_names = {"1a", "2a", "3a"};

  auto chr = [&](const std::string& name, const std::vector<std::string>& vals) {
    ClassFunction f(fx.G, name);
    for (std::size_t i = 0; i < vals.size(); ++i) f.set(fx.class_names[i], gv(vals[i]));
    return f;
  };
  fx.irr.emplace("triv", chr("triv", {"1", "1", "1"}));
  fx.irr.emplace("sgn", chr("sgn", {"1", "-1", "1"}));
  fx.irr.emplace("st", chr("st", {"2", "0", "-1"}));

  fx.reg.group = fx.G;
  fx.reg.entries = {
      detail::datum(fx.G, fx.class_names, "T,1", "1", "3", {"3", "1", "0"},
                    {{"triv", 1}, {"st", 1}}),
      detail::datum(fx.G, fx.class_names, "T',1", "3", "1", {"-1", "1", "2"},
                    {{"triv", 1}, {"st", -1}}),
      detail::datum(fx.G, fx.class_names, "T',w", "3", "2", {"-1", "1", "-1"},
                    {{"sgn", -1}})};
  fx.reg.inverse_pairing = {0, 1, 2};
  return fx;
}

// SL2(4): five classes, five irreducibles; the two cuspidal characters take
// values in the fifth cyclotomic field.
inline SL2Fixture make_sl2_q4() {
  SL2Fixture fx;
  GenericGroup g;
  g.name = "SL2q4";
  g.order = gv("60");
  g.complete = true;

  auto cls = [](const std::string& n, const std::string& cent, bool uni) {
    ClassFamily f;
    f.name = n;
    f.centralizer_order = parse_genvalue(cent);
    f.inverse_class = n;
    f.is_unipotent = uni;
    return f;
  };
  g.classes = {cls("1a", "60", true), cls("2a", "4", true), cls("3a", "3", false),
               cls("5a", "5", false), cls("5b", "5", false)};
  fx.G = std::make_shared<const GenericGroup>(std::move(g));
  fx.class_names = {"1a", "2a", "3a", "5a", "5b"};

  auto chr = [&](const std::string& name, const std::vector<std::string>& vals) {
    ClassFunction f(fx.G, name);
    for (std::size_t i = 0; i < vals.size(); ++i) f.set(fx.class_names[i], gv(vals[i]));
    return f;
  };
  fx.irr.emplace("triv", chr("triv", {"1", "1", "1", "1", "1"}));
  fx.irr.emplace("st", chr("st", {"4", "0", "1", "-1", "-1"}));
  fx.irr.emplace("pr", chr("pr", {"5", "1", "-1", "0", "0"}));
  fx.irr.emplace("theta1",
                 chr("theta1", {"3", "-1", "0", "-(z(5)+z(5)^4)", "-(z(5)^2+z(5)^3)"}));
  fx.irr.emplace("theta2",
                 chr("theta2", {"3", "-1", "0", "-(z(5)^2+z(5)^3)", "-(z(5)+z(5)^4)"}));

  fx.reg.group = fx.G;
  fx.reg.entries = {
      detail::datum(fx.G, fx.class_names, "T,1", "3", "10", {"5", "1", "2", "0", "0"},
                    {{"triv", 1}, {"st", 1}}),
      detail::datum(fx.G, fx.class_names, "T,a", "3", "20", {"5", "1", "-1", "0", "0"},
                    {{"pr", 1}}),
      detail::datum(fx.G, fx.class_names, "T',1", "5", "6", {"-3", "1", "0", "2", "2"},
                    {{"triv", 1}, {"st", -1}}),
      detail::datum(fx.G, fx.class_names, "T',m", "5", "12",
                    {"-3", "1", "0", "z(5)+z(5)^4", "z(5)^2+z(5)^3"}, {{"theta1", -1}}),
      detail::datum(fx.G, fx.class_names, "T',m2", "5", "12",
                    {"-3", "1", "0", "z(5)^2+z(5)^3", "z(5)+z(5)^4"}, {{"theta2", -1}})};
  fx.reg.inverse_pairing = {0, 1, 2, 3, 4};
  return fx;
}

// ---------------------------------------------------------------------------
// Assembled models mirroring the JSON files under data/.  Ingestion tests
// compare export_model of these builders byte-for-byte against the files, so
// any edit here must be reflected there (and vice versa).
// ---------------------------------------------------------------------------

inline Model make_f4_b2_model() {
  Model m;
  B2Fixture b2 = make_b2();
  SplitFixture f4 = make_f4_split();
  m.group_order = {"B2", "F4"};
  m.groups = {{"B2", b2.G}, {"F4", f4.G}};
  for (const auto& name : b2.psi_names) {
    m.function_order.push_back(name);
    m.functions.emplace(name, b2.psi.at(name));
  }
  for (const ClassFunction* f : {&f4.chi0, &f4.chi1, &f4.chi2}) {
    m.function_order.push_back(f->name());
    m.functions.emplace(f->name(), *f);
  }
  MultiplicityMatrix mm;
  mm.L_label = "B2";
  mm.rows = b2.psi_names;
  mm.cols = {"rho_h53"};
  for (const auto& name : b2.psi_names)
    mm.entries.push_back({name == "psi_10" ? 1L : 0L});
  m.mult_order = {"m_h53"};
  m.mults.emplace("m_h53", std::move(mm));
  m.split_data.emplace_back("F4", f4.datum);
  SeriesInfo s;
  s.label = "h53";
  s.group = "F4";
  s.characters = {"rho_h53"};
  s.levi = "B2";
  s.mult = "m_h53";
  m.series.push_back(std::move(s));
  return m;
}

// The split maximal torus of SL2 as a table of its own: the identity and one
// family holding the q-2 regular elements.
inline GroupPtr make_sl2_torus() {
  GenericGroup t;
  t.name = "T";
  t.order = gv("q-1");
  t.complete = true;
  ClassFamily one;
  one.name = "1";
  one.centralizer_order = gv("q-1");
  one.inverse_class = "1";
  one.is_unipotent = true;
  one.guard = even_q();
  ClassFamily reg;
  reg.name = "reg";
  reg.centralizer_order = gv("q-1");
  reg.inverse_class = "reg";
  reg.guard = even_q();
  reg.family_size = gv("q-2");
  t.classes = {one, reg};
  return std::make_shared<const GenericGroup>(std::move(t));
}

inline Model make_sl2_generic_model() {
  Model m;
  SL2Fixture fx = make_sl2_generic();
  GroupPtr T = make_sl2_torus();
  m.group_order = {"SL2", "T"};
  m.groups = {{"SL2", fx.G}, {"T", T}};
  for (const std::string name : {"triv", "st"}) {
    m.function_order.push_back(name);
    m.functions.emplace(name, fx.irr.at(name));
  }
  ClassFunction t_triv(T, "T_triv");
  t_triv.set("1", gv("1"));
  t_triv.set("reg", gv("1"));
  m.function_order.push_back("T_triv");
  m.functions.emplace("T_triv", std::move(t_triv));
  m.registry_order = {"SL2"};
  m.registries.emplace("SL2", fx.reg);
  MultiplicityMatrix mm;
  mm.L_label = "T";
  mm.rows = {"T_triv"};
  mm.cols = {"triv", "st"};
  mm.entries = {{1, 1}};
  m.mult_order = {"m_T"};
  m.mults.emplace("m_T", std::move(mm));
  SeriesInfo s;
  s.label = "principal";
  s.group = "SL2";
  s.characters = {"triv", "st"};
  s.method = "ingested";
  m.series.push_back(std::move(s));
  NumericTable nt;
  nt.group = "SL2";
  nt.q = 4;
  nt.values["triv"] = {{"id", GenValue(1)}, {"u", GenValue(1)},
                       {"c3", GenValue(1)}, {"c4", GenValue(1)}};
  nt.values["st"] = {{"id", GenValue(4)}, {"u", GenValue(0)},
                     {"c3", GenValue(1)}, {"c4", GenValue(-1)}};
  m.numeric_tables.push_back(std::move(nt));
  return m;
}

inline Model make_sl2_q2_model() {
  Model m;
  SL2Fixture fx = make_sl2_q2();
  m.group_order = {"SL2q2"};
  m.groups = {{"SL2q2", fx.G}};
  for (const std::string name : {"triv", "sgn", "st"}) {
    m.function_order.push_back(name);
    m.functions.emplace(name, fx.irr.at(name));
  }
  m.registry_order = {"SL2q2"};
  m.registries.emplace("SL2q2", fx.reg);
  m.split_data.emplace_back("SL2q2", make_order6_split_datum());
  NumericTable nt;
  nt.group = "SL2q2";
  nt.q = 2;
  nt.values["triv"] = {{"1a", GenValue(1)}, {"2a", GenValue(1)}, {"3a", GenValue(1)}};
  nt.values["sgn"] = {{"1a", GenValue(1)}, {"2a", GenValue(-1)}, {"3a", GenValue(1)}};
  nt.values["st"] = {{"1a", GenValue(2)}, {"2a", GenValue(0)}, {"3a", GenValue(-1)}};
  m.numeric_tables.push_back(std::move(nt));
  return m;
}

inline Model make_sl2_q4_model() {
  Model m;
  SL2Fixture fx = make_sl2_q4();
  m.group_order = {"SL2q4"};
  m.groups = {{"SL2q4", fx.G}};
  for (const std::string name : {"triv", "st", "pr", "theta1", "theta2"}) {
    m.function_order.push_back(name);
    m.functions.emplace(name, fx.irr.at(name));
  }
  m.registry_order = {"SL2q4"};
  m.registries.emplace("SL2q4", fx.reg);
  return m;
}

}  // namespace lietab::fixtures

#endif
