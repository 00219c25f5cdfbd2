#ifndef LIETAB_GENVALUE_HPP
#define LIETAB_GENVALUE_HPP

#include <string>
#include <string_view>
#include <vector>

#include "lietab/guard.hpp"
#include "lietab/polynomial.hpp"

namespace lietab {

/// A congruence-guarded rational function in q with cyclotomic coefficients:
/// the universal value type for class sizes, character values and Green
/// functions.  Invariants: the fraction is reduced, the denominator is monic
/// and nonzero, the guard is satisfiable.  Arithmetic intersects guards.
class GenValue {
 public:
  GenValue() : num_(), den_(1) {}
  GenValue(long v) : num_(v), den_(1) {}
  GenValue(const Rational& v) : num_(Cyclotomic(v)), den_(1) {}
  GenValue(const Cyclotomic& v) : num_(v), den_(1) {}
  GenValue(const Poly& p) : num_(p), den_(1) {}

  static GenValue variable() { return GenValue(Poly::variable()); }

  /// Reduced num/den under the given guard; DivisionByZero if den = 0.
  static GenValue fraction(Poly num, Poly den, Guard guard = Guard());

  const Poly& numerator() const { return num_; }
  const Poly& denominator() const { return den_; }
  const Guard& guard() const { return guard_; }

  /// Same value restricted to guard()∧g; throws UnsatisfiableGuard.
  GenValue under_guard(const Guard& g) const;

  bool is_zero() const { return num_.is_zero(); }
  bool is_polynomial() const { return den_.degree() == 0; }
  bool is_constant() const { return is_polynomial() && num_.is_constant(); }
  bool is_integer() const;
  Cyclotomic constant_value() const;  // InvalidArgument if not constant
  long integer_value() const;         // InvalidArgument if not an integer

  GenValue operator-() const;
  friend GenValue operator+(const GenValue& a, const GenValue& b);
  friend GenValue operator-(const GenValue& a, const GenValue& b);
  friend GenValue operator*(const GenValue& a, const GenValue& b);
  friend GenValue operator/(const GenValue& a, const GenValue& b);  // DivisionByZero
  GenValue& operator+=(const GenValue& o) { return *this = *this + o; }
  GenValue& operator-=(const GenValue& o) { return *this = *this - o; }
  GenValue& operator*=(const GenValue& o) { return *this = *this * o; }
  GenValue& operator/=(const GenValue& o) { return *this = *this / o; }

  GenValue conj() const;
  GenValue inverse() const;
  GenValue pow(long e) const;

  /// Exact substitution q := q0.  GuardViolation if q0 is inadmissible,
  /// DivisionByZero if the denominator vanishes at q0.
  Cyclotomic eval_at(long long q0) const;

  /// Canonical rendering: "num" or "(num)/(den)"; guards are carried
  /// separately and never printed here.
  std::string to_string() const;

 private:
  Poly num_, den_;
  Guard guard_;

  void reduce();
};

/// True iff a and b agree for every q admitted by both guards; decided on
/// canonical forms.  Throws UnsatisfiableGuard when the guards are disjoint.
bool identity_equal(const GenValue& a, const GenValue& b);

/// Specialization-based equality check at `points` admissible integers
/// (a soundness cross-check for identity_equal; both must always agree).
bool equal_by_specialization(const GenValue& a, const GenValue& b, unsigned points);

/// Parses the expression grammar: integers, q, z(N), + - * / ^, parentheses.
/// Throws ParseError (with position) on malformed input.
GenValue parse_genvalue(std::string_view expr, Guard guard = Guard());

}  // namespace lietab

#endif
