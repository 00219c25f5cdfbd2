#ifndef LIETAB_CYCLOTOMIC_HPP
#define LIETAB_CYCLOTOMIC_HPP

#include <string>
#include <vector>

#include "lietab/rational.hpp"

namespace lietab {

/// An element of the cyclotomic field Q(zeta_N), stored on the power basis
/// zeta^0 .. zeta^{phi(N)-1} with coordinates reduced modulo the N-th
/// cyclotomic polynomial.  The conductor is always minimal for the element,
/// so the representation is a unique normal form: two values are equal iff
/// conductor and coordinates coincide.  All operations are exact.
class Cyclotomic {
 public:
  Cyclotomic() : conductor_(1), coords_{Rational(0)} {}
  Cyclotomic(long v) : conductor_(1), coords_{Rational(v)} {}
  Cyclotomic(const Rational& v) : conductor_(1), coords_{v} {}

  /// zeta_n^power, with zeta_n = exp(2*pi*i/n).
  static Cyclotomic root_of_unity(unsigned n, long power = 1);

  unsigned conductor() const { return conductor_; }
  const std::vector<Rational>& coords() const { return coords_; }

  bool is_zero() const { return conductor_ == 1 && coords_[0] == 0; }
  bool is_one() const { return conductor_ == 1 && coords_[0] == 1; }
  bool is_rational() const { return conductor_ == 1; }

  /// Throws InvalidArgument when the value is not rational.
  const Rational& rational_value() const;

  /// Complex conjugation zeta -> zeta^{-1}.
  Cyclotomic conj() const;

  /// The Galois map zeta -> zeta^k; requires gcd(k, conductor) = 1.
  Cyclotomic galois(long k) const;

  /// Throws DivisionByZero on 0.
  Cyclotomic inverse() const;

  Cyclotomic operator-() const;
  Cyclotomic& operator+=(const Cyclotomic& o) { return *this = *this + o; }
  Cyclotomic& operator-=(const Cyclotomic& o) { return *this = *this - o; }
  Cyclotomic& operator*=(const Cyclotomic& o) { return *this = *this * o; }

  friend Cyclotomic operator+(const Cyclotomic& a, const Cyclotomic& b);
  friend Cyclotomic operator-(const Cyclotomic& a, const Cyclotomic& b);
  friend Cyclotomic operator*(const Cyclotomic& a, const Cyclotomic& b);
  friend Cyclotomic operator/(const Cyclotomic& a, const Cyclotomic& b);
  friend bool operator==(const Cyclotomic& a, const Cyclotomic& b);

  /// Canonical rendering in the expression grammar, e.g.
  /// "1 + (-1)*z(5)^2"; rationals render as plain fractions.
  std::string to_string() const;

  /// Monic coefficients of the N-th cyclotomic polynomial (degree phi(N)).
  static const std::vector<Rational>& cyclotomic_polynomial(unsigned n);

 private:
  unsigned conductor_;
  std::vector<Rational> coords_;  // size phi(conductor_)

  Cyclotomic(unsigned conductor, std::vector<Rational> coords)
      : conductor_(conductor), coords_(std::move(coords)) {}

  /// Re-express in Q(zeta_n) for a multiple n of the conductor.
  std::vector<Rational> embedded_coords(unsigned n) const;

  void reduce_conductor();
};

}  // namespace lietab

#endif
