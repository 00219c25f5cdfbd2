#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <random>

#include "doctest.h"
#include "fixtures.hpp"
#include "lietab/errors.hpp"
#include "lietab/split.hpp"

using namespace lietab;
using namespace lietab::fixtures;

namespace {

bool has_issue(const ValidationReport& rep, const std::string& code) {
  for (const auto& i : rep.issues)
    if (i.code == code) return true;
  return false;
}

template <typename F>
void expect_code(Errc want, F&& f) {
  try {
    f();
    CHECK_MESSAGE(false, "expected an error");
  } catch (const EngineError& e) {
    CHECK(e.code() == want);
  }
}

}  // namespace

TEST_CASE("split datum validation") {
  auto fx = make_f4_split();
  CHECK(validate_split(fx.G, fx.datum).ok());

  auto d = fx.datum;
  d.chi_names.pop_back();
  CHECK(has_issue(validate_split(fx.G, d), "DimensionMismatch"));

  d = fx.datum;
  d.children[1] = "C1";
  CHECK(has_issue(validate_split(fx.G, d), "DuplicateClass"));

  d = fx.datum;
  d.children[1] = "nope";
  CHECK(has_issue(validate_split(fx.G, d), "UnknownClass"));

  d = fx.datum;
  d.parent = "other";
  CHECK(has_issue(validate_split(fx.G, d), "ChildrenNotSiblings"));

  d = fx.datum;
  d.coefficient_matrix.at(0, 1) = gv("q");
  CHECK(has_issue(validate_split(fx.G, d), "CoefficientNotConstant"));

  d = fx.datum;
  for (std::size_t j = 0; j < 3; ++j)
    d.coefficient_matrix.at(2, j) = d.coefficient_matrix.at(1, j);
  CHECK(has_issue(validate_split(fx.G, d), "SingularCoefficientMatrix"));

  d = fx.datum;
  d.coefficient_matrix.at(1, 0) = GenValue(2);  // invertible but wrong sums
  auto rep = validate_split(fx.G, d);
  CHECK(has_issue(rep, "ColumnSumMismatch"));
  CHECK(has_issue(rep, "IndicatorMismatch"));

  d = fx.datum;
  d.value_matrix.at(2, 1) = gv("q^4");
  CHECK(has_issue(validate_split(fx.G, d), "IndicatorMismatch"));
}

TEST_CASE("inverse closure of the children") {
  auto fx = make_f4_split();
  // C2 and C3 are mutually inverse, so a datum keeping only C1 and C2 leaves
  // the inverse of C2 outside.
  SplitClassDatum d;
  d.parent = "h3_reg";
  d.children = {"C1", "C2"};
  d.chi_names = {"a", "b"};
  d.coefficient_matrix = Matrix(2, 2);
  d.value_matrix = Matrix(2, 2);
  d.coefficient_matrix.at(0, 0) = GenValue(1);
  d.coefficient_matrix.at(1, 1) = GenValue(1);
  CHECK(has_issue(validate_split(fx.G, d), "InverseOutsideChildren"));
}

TEST_CASE("split evaluation from inner products") {
  auto fx = make_f4_split();
  const GenValue z(0), q4 = gv("q^4");

  auto vals = evaluate_on_split({z, q4, z}, fx.datum);
  REQUIRE(vals.size() == 3);
  CHECK(identity_equal(vals[0], gv("q^4")));
  CHECK(identity_equal(vals[1], gv("q^4*z(3)")));
  CHECK(identity_equal(vals[2], gv("q^4*z(3)^2")));

  // The first basis function contributes identically to every child.
  vals = evaluate_on_split({GenValue(1), z, z}, fx.datum);
  for (const auto& v : vals) CHECK(identity_equal(v, GenValue(1)));

  expect_code(Errc::DimensionMismatch,
              [&] { evaluate_on_split({z, q4}, fx.datum); });
}

TEST_CASE("split evaluation is invertible") {
  auto fx = make_f4_split();
  Matrix C(3, 3);  // the matrix of the evaluation map
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 3; ++j)
      C.at(i, j) = fx.datum.coefficient_matrix.at(i, j).conj();
  const Matrix Cinv = inverse(C);

  std::mt19937_64 rng(99u);
  for (int trial = 0; trial < 20; ++trial) {
    std::vector<GenValue> ip(3);
    for (auto& v : ip) {
      Cyclotomic c(static_cast<long>(rng() % 9) - 4);
      c = c + Cyclotomic::root_of_unity(3, 1) *
                  Cyclotomic(static_cast<long>(rng() % 9) - 4);
      v = GenValue(c) * gv("q^2");
    }
    const auto vals = evaluate_on_split(ip, fx.datum);
    const auto back = mat_vec(Cinv, vals);
    for (std::size_t j = 0; j < 3; ++j) CHECK(identity_equal(back[j], ip[j]));
  }
}

TEST_CASE("split basis reproduces the class indicators") {
  auto fx = make_f4_split();
  const ClassFunction* chis[3] = {&fx.chi0, &fx.chi1, &fx.chi2};

  for (std::size_t i = 0; i < 3; ++i) {
    std::vector<std::pair<GenValue, ClassFunction>> terms;
    for (std::size_t j = 0; j < 3; ++j)
      terms.push_back({fx.datum.coefficient_matrix.at(i, j), *chis[j]});
    auto eps = combine(terms);
    auto ind = indicator(fx.G, fx.children[i]);
    for (std::size_t l = 0; l < 3; ++l) {
      CHECK(identity_equal(eps.at(fx.children[l]), ind.at(fx.children[l])));
      const GenValue want = i == l ? gv("3*q^4") : GenValue(0);
      CHECK(identity_equal(eps.at(fx.children[l]), want));
    }
  }

  // Summing the indicators over the children kills the cuspidal parts.
  auto sum = combine({{GenValue(1), fx.chi0},
                      {GenValue(0), fx.chi1},
                      {GenValue(0), fx.chi2}});
  std::vector<std::pair<GenValue, ClassFunction>> all;
  for (std::size_t i = 0; i < 3; ++i) {
    for (std::size_t j = 0; j < 3; ++j)
      all.push_back({fx.datum.coefficient_matrix.at(i, j), *chis[j]});
  }
  auto total = combine(all);
  for (const auto& c : fx.children)
    CHECK(identity_equal(total.at(c), GenValue(3) * fx.chi0.at(c)));
}

TEST_CASE("degenerate one-child datum over the order-6 table") {
  auto sl2 = make_sl2_q2();
  auto d = make_order6_split_datum();
  CHECK(validate_split(sl2.G, d).ok());

  // chi_0 is the normalised indicator of 2a, and it is uniform.
  ClassFunction chi0(sl2.G, "chi_0");
  chi0.set("2a", d.value_matrix.at(0, 0));
  chi0.set("1a", GenValue(0));
  chi0.set("3a", GenValue(0));
  CHECK(is_uniform(chi0, sl2.reg));

  // ⟨ρ,χ_0⟩ from multiplicities alone equals ρ(2a) for every irreducible.
  const std::map<std::string, std::map<std::string, long>> mults = {
      {"triv", {{"T,1", 1}, {"T',1", 1}}},
      {"st", {{"T,1", 1}, {"T',1", -1}}},
      {"sgn", {{"T',w", -1}}}};
  for (const auto& [name, m] : mults) {
    const GenValue ip = chi0_inner(m, sl2.reg, d);
    const auto vals = evaluate_on_split({ip}, d);
    REQUIRE(vals.size() == 1);
    CHECK(identity_equal(vals[0], sl2.irr.at(name).at("2a")));
  }
}

TEST_CASE("degenerate datum over the order-60 table") {
  auto sl2 = make_sl2_q4();
  SplitClassDatum d;
  d.parent = "2a";
  d.children = {"2a"};
  d.chi_names = {"chi_0"};
  d.coefficient_matrix = Matrix(1, 1);
  d.coefficient_matrix.at(0, 0) = GenValue(1);
  d.value_matrix = Matrix(1, 1);
  d.value_matrix.at(0, 0) = GenValue(4);
  CHECK(validate_split(sl2.G, d).ok());

  const std::map<std::string, std::map<std::string, long>> mults = {
      {"triv", {{"T,1", 1}, {"T',1", 1}}},
      {"st", {{"T,1", 1}, {"T',1", -1}}},
      {"pr", {{"T,a", 1}}},
      {"theta1", {{"T',m", -1}}},
      {"theta2", {{"T',m2", -1}}}};
  for (const auto& [name, m] : mults) {
    const GenValue ip = chi0_inner(m, sl2.reg, d);
    CHECK(identity_equal(ip, sl2.irr.at(name).at("2a")));
  }
}

TEST_CASE("registry gaps are reported") {
  auto sl2 = make_sl2_q2();
  auto d = make_order6_split_datum();

  DLRegistry broken = sl2.reg;
  ClassFunction partial(sl2.G, "R[T,1]");
  partial.set("1a", GenValue(3));
  partial.set("3a", GenValue(0));
  broken.entries[0].values = partial;

  std::map<std::string, long> m = {{"T,1", 1}};
  expect_code(Errc::IncompleteRegistry, [&] { chi0_inner(m, broken, d); });

  // An entry with zero (or absent) multiplicity is never consulted.
  std::map<std::string, long> zero = {{"T,1", 0}, {"T',1", 2}};
  CHECK_NOTHROW(chi0_inner(zero, broken, d));
}
