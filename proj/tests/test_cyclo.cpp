#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "lietab/errors.hpp"
#include "lietab/genvalue.hpp"

using namespace lietab;

namespace {

GenValue gv(const std::string& s, Guard g = Guard()) { return parse_genvalue(s, g); }

Cyclotomic theta() { return Cyclotomic::root_of_unity(3); }

// Uniform small random cyclotomic in Q(zeta_n) for property tests.
Cyclotomic random_cyc(std::mt19937_64& rng, unsigned n) {
  std::uniform_int_distribution<long> num(-6, 6), den(1, 4);
  Cyclotomic acc;
  for (unsigned i = 0; i < 3; ++i) {
    Rational r(num(rng), den(rng));
    r.canonicalize();
    acc += Cyclotomic(r) * Cyclotomic::root_of_unity(n, num(rng));
  }
  return acc;
}

GenValue random_genvalue(std::mt19937_64& rng) {
  std::uniform_int_distribution<long> coeff(-5, 5);
  std::uniform_int_distribution<unsigned> deg(0, 3);
  Poly num, den;
  unsigned dn = deg(rng), dd = deg(rng) % 2;
  for (unsigned i = 0; i <= dn; ++i)
    num += Poly::monomial(Cyclotomic(coeff(rng)), i);
  for (unsigned i = 0; i <= dd; ++i)
    den += Poly::monomial(Cyclotomic(coeff(rng)), i);
  if (den.is_zero()) den = Poly(1);
  return GenValue::fraction(num, den);
}

}  // namespace

TEST_CASE("guards normalise, meet and print") {
  Guard all;
  CHECK(all.is_trivial());
  CHECK(all.to_string() == "all q");

  Guard g3 = Guard::congruent(3, 1);
  CHECK(g3.to_string() == "3|q-1");
  CHECK(g3.admits(4));
  CHECK(!g3.admits(2));

  // a redundant modulus collapses
  Guard redundant(6, {1, 4});
  CHECK(redundant == g3);

  Guard full(2, {0, 1});
  CHECK(full.is_trivial());

  Guard met = g3.meet(Guard::congruent(2, 0));
  CHECK(met.modulus() == 6);
  CHECK(met.residues() == std::set<unsigned>{4});

  CHECK_THROWS_AS(Guard(4, {}), EngineError);
  CHECK_THROWS_WITH_AS(Guard::congruent(3, 1).meet(Guard::congruent(3, 2)),
                       doctest::Contains("UnsatisfiableGuard"), EngineError);
}

TEST_CASE("third root of unity arithmetic") {
  Cyclotomic t = theta();
  CHECK(t * t * t == Cyclotomic(1));
  CHECK((t * (t * t)).is_one());
  CHECK(t.conj() == t * t);
  CHECK((Cyclotomic(1) + t + t * t).is_zero());
  CHECK(t.inverse() == t * t);
}

TEST_CASE("conductors embed and reduce") {
  // z(6) lies in Q(zeta_3)
  Cyclotomic z6 = Cyclotomic::root_of_unity(6);
  CHECK(z6.conductor() == 3);
  CHECK(z6 == -theta() * theta());

  // z(15)^5 = z(3)
  Cyclotomic z15 = Cyclotomic::root_of_unity(15);
  Cyclotomic p = z15;
  for (int i = 0; i < 4; ++i) p *= z15;
  CHECK(p == theta());

  // sums of conjugate pairs of 5th roots: the golden-ratio pair
  Cyclotomic z5 = Cyclotomic::root_of_unity(5);
  Cyclotomic a = z5 + z5.conj();
  Cyclotomic b = z5 * z5 + (z5 * z5).conj();
  CHECK(a + b == Cyclotomic(-1));
  CHECK(a * b == Cyclotomic(-1));
  CHECK(a.conductor() == 5);

  // rational values always land at conductor 1
  CHECK((z5 * z5 * z5 * z5 * z5).conductor() == 1);
  CHECK(Cyclotomic::root_of_unity(2) == Cyclotomic(-1));
  CHECK(Cyclotomic::root_of_unity(4).conductor() == 4);
}

TEST_CASE("cyclotomic field axioms on random samples") {
  std::mt19937_64 rng(20230306);
  for (int trial = 0; trial < 40; ++trial) {
    unsigned n = (trial % 2) ? 12 : 5;
    Cyclotomic a = random_cyc(rng, n), b = random_cyc(rng, n), c = random_cyc(rng, n);
    CHECK((a + b) + c == a + (b + c));
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * (b + c) == a * b + a * c);
    CHECK(a * b == b * a);
    if (!a.is_zero()) CHECK(a * a.inverse() == Cyclotomic(1));
    CHECK(a.conj().conj() == a);
    CHECK((a * b).conj() == a.conj() * b.conj());
    CHECK((a + b).conj() == a.conj() + b.conj());
  }
  CHECK_THROWS_AS(Cyclotomic().inverse(), EngineError);
}

TEST_CASE("conjugation fixes rationals") {
  Cyclotomic r(Rational(-7, 3));
  CHECK(r.conj() == r);
}

TEST_CASE("polynomial divrem and gcd") {
  Poly q = Poly::variable();
  Poly a = (q * q - Poly(1)) * (q + Poly(2));
  auto [quot, rem] = Poly::divrem(a, q + Poly(2));
  CHECK(rem.is_zero());
  CHECK(quot == q * q - Poly(1));

  Poly g = Poly::gcd((q - Poly(1)) * (q + Poly(3)), (q - Poly(1)) * (q - Poly(5)));
  CHECK(g == q - Poly(1));
}

TEST_CASE("parse and print: order polynomials and half-integer degrees") {
  GenValue order = gv("q^4*(q^2-1)*(q^4-1)");
  CHECK(order.numerator().degree() == 10);
  CHECK(order.is_polynomial());
  CHECK(order.eval_at(2) == Cyclotomic(16 * 3 * 15));

  GenValue deg9 = gv("(1/2)*q*(q+1)^2");
  CHECK(deg9.eval_at(2) == Cyclotomic(9));
  CHECK(deg9.to_string() == "1/2*q^3 + q^2 + 1/2*q");

  CHECK(gv("1").is_integer());
  CHECK(gv("1").integer_value() == 1);
}

TEST_CASE("printing round-trips to identical strings") {
  std::mt19937_64 rng(12345);
  for (int trial = 0; trial < 60; ++trial) {
    GenValue v = random_genvalue(rng);
    std::string s = v.to_string();
    GenValue back = parse_genvalue(s);
    CHECK(identity_equal(v, back));
    CHECK(back.to_string() == s);
  }
  // cyclotomic coefficients included
  GenValue w = GenValue(Poly::monomial(theta(), 2) + Poly::monomial(Cyclotomic(Rational(1, 2)), 1));
  std::string s = w.to_string();
  CHECK(parse_genvalue(s).to_string() == s);
}

TEST_CASE("parser rejects malformed input with positions") {
  CHECK_THROWS_WITH_AS(gv("q^"), doctest::Contains("ParseError"), EngineError);
  CHECK_THROWS_AS(gv("(q+1"), EngineError);
  CHECK_THROWS_AS(gv("q++"), EngineError);
  CHECK_THROWS_AS(gv("z(0)"), EngineError);
  CHECK_THROWS_AS(gv("2 3"), EngineError);
  CHECK_THROWS_AS(gv("1/0"), EngineError);
  CHECK_THROWS_AS(gv(""), EngineError);
}

TEST_CASE("eval_at respects guards and poles") {
  GenValue v = gv("(1/2)*q*(q-1)^2");
  CHECK(v.eval_at(2) == Cyclotomic(1));

  GenValue guarded = gv("q+1", Guard::congruent(3, 1));
  CHECK_THROWS_WITH_AS(guarded.eval_at(2), doctest::Contains("GuardViolation"), EngineError);
  CHECK(guarded.eval_at(4) == Cyclotomic(5));

  GenValue pole = gv("1/(q-2)");
  CHECK_THROWS_WITH_AS(pole.eval_at(2), doctest::Contains("DivisionByZero"), EngineError);

  GenValue q4 = gv("q^4");
  CHECK(q4.eval_at(2) == Cyclotomic(16));
}

TEST_CASE("eval_at is a ring homomorphism") {
  std::mt19937_64 rng(777);
  for (int trial = 0; trial < 25; ++trial) {
    GenValue a = random_genvalue(rng), b = random_genvalue(rng);
    for (long long q0 : {2, 3, 5, 11}) {
      if (a.denominator().eval(Cyclotomic((long)q0)).is_zero()) continue;
      if (b.denominator().eval(Cyclotomic((long)q0)).is_zero()) continue;
      CHECK((a * b).eval_at(q0) == a.eval_at(q0) * b.eval_at(q0));
      CHECK((a + b).eval_at(q0) == a.eval_at(q0) + b.eval_at(q0));
    }
  }
}

TEST_CASE("identity_equal on canonical forms") {
  CHECK(identity_equal(gv("q^2-1"), gv("(q-1)*(q+1)")));
  CHECK(!identity_equal(gv("q-1"), gv("q+1")));
  // guard intersection is mandatory
  GenValue a = gv("q", Guard::congruent(3, 1));
  GenValue b = gv("q", Guard::congruent(3, 2));
  CHECK_THROWS_AS(identity_equal(a, b), EngineError);
  // rational functions reduce before comparison
  CHECK(identity_equal(gv("(q^2-1)/(q-1)"), gv("q+1")));
}

TEST_CASE("identity_equal agrees with specialization at 50 admissible points") {
  std::mt19937_64 rng(999);
  for (int trial = 0; trial < 20; ++trial) {
    GenValue a = random_genvalue(rng), b = random_genvalue(rng);
    CHECK(identity_equal(a, b) == equal_by_specialization(a, b, 50));
    CHECK(identity_equal(a, a));
    CHECK(equal_by_specialization(a, a, 50));
  }
}

TEST_CASE("field axioms for guarded rational functions") {
  std::mt19937_64 rng(4242);
  for (int trial = 0; trial < 25; ++trial) {
    GenValue a = random_genvalue(rng), b = random_genvalue(rng), c = random_genvalue(rng);
    CHECK(identity_equal((a + b) + c, a + (b + c)));
    CHECK(identity_equal(a * (b + c), a * b + a * c));
    if (!a.is_zero()) CHECK(identity_equal(a * a.inverse(), GenValue(1)));
    CHECK(identity_equal(a.conj().conj(), a));
    CHECK(identity_equal((a * b).conj(), a.conj() * b.conj()));
  }
}

TEST_CASE("guard algebra flows through arithmetic") {
  GenValue a = gv("q", Guard::congruent(2, 0));
  GenValue b = gv("q+1", Guard::congruent(3, 1));
  GenValue c = a * b;
  CHECK(c.guard().modulus() == 6);
  CHECK(c.guard().residues() == std::set<unsigned>{4});
}
