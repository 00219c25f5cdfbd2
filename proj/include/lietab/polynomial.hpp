#ifndef LIETAB_POLYNOMIAL_HPP
#define LIETAB_POLYNOMIAL_HPP

#include <string>
#include <utility>
#include <vector>

#include "lietab/cyclotomic.hpp"

namespace lietab {

/// Dense univariate polynomial in q with cyclotomic coefficients.
class Poly {
 public:
  Poly() = default;
  Poly(const Cyclotomic& c) {
    if (!c.is_zero()) coeffs_.push_back(c);
  }
  Poly(long v) : Poly(Cyclotomic(v)) {}

  static Poly variable() { return monomial(Cyclotomic(1), 1); }
  static Poly monomial(const Cyclotomic& c, unsigned degree);

  /// -1 for the zero polynomial.
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }
  bool is_constant() const { return coeffs_.size() <= 1; }
  Cyclotomic coeff(size_t i) const { return i < coeffs_.size() ? coeffs_[i] : Cyclotomic(); }
  const Cyclotomic& leading() const;
  Cyclotomic constant_term() const { return coeff(0); }

  Poly operator-() const;
  friend Poly operator+(const Poly& a, const Poly& b);
  friend Poly operator-(const Poly& a, const Poly& b);
  friend Poly operator*(const Poly& a, const Poly& b);
  Poly& operator+=(const Poly& o) { return *this = *this + o; }
  Poly& operator-=(const Poly& o) { return *this = *this - o; }
  Poly& operator*=(const Poly& o) { return *this = *this * o; }
  friend bool operator==(const Poly& a, const Poly& b) { return a.coeffs_ == b.coeffs_; }

  /// Quotient and remainder; divisor must be nonzero (DivisionByZero).
  static std::pair<Poly, Poly> divrem(const Poly& a, const Poly& b);

  /// Exact quotient; throws InvalidArgument if the remainder is nonzero.
  static Poly div_exact(const Poly& a, const Poly& b);

  /// Monic gcd (1 for coprime, 0 only if both are 0).
  static Poly gcd(Poly a, Poly b);

  Poly conj() const;
  Cyclotomic eval(const Cyclotomic& x) const;
  Poly scaled(const Cyclotomic& c) const;
  Poly monic() const;

  /// Canonical rendering, terms in decreasing degree, e.g. "q^2 - 1/2*q + 3".
  std::string to_string() const;

 private:
  std::vector<Cyclotomic> coeffs_;  // ascending degree, trailing zeros trimmed

  void trim() {
    while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
  }
};

}  // namespace lietab

#endif
