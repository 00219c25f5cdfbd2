#include "lietab/polynomial.hpp"

#include <sstream>

#include "lietab/errors.hpp"

namespace lietab {

Poly Poly::monomial(const Cyclotomic& c, unsigned degree) {
  Poly p;
  if (c.is_zero()) return p;
  p.coeffs_.assign(degree + 1, Cyclotomic());
  p.coeffs_[degree] = c;
  return p;
}

const Cyclotomic& Poly::leading() const {
  if (coeffs_.empty()) fail(Errc::InvalidArgument, "leading coefficient of zero polynomial");
  return coeffs_.back();
}

Poly Poly::operator-() const {
  Poly out = *this;
  for (auto& c : out.coeffs_) c = -c;
  return out;
}

Poly operator+(const Poly& a, const Poly& b) {
  Poly out = a;
  if (out.coeffs_.size() < b.coeffs_.size()) out.coeffs_.resize(b.coeffs_.size());
  for (size_t i = 0; i < b.coeffs_.size(); ++i) out.coeffs_[i] += b.coeffs_[i];
  out.trim();
  return out;
}

Poly operator-(const Poly& a, const Poly& b) { return a + (-b); }

Poly operator*(const Poly& a, const Poly& b) {
  if (a.is_zero() || b.is_zero()) return Poly();
  Poly out;
  out.coeffs_.assign(a.coeffs_.size() + b.coeffs_.size() - 1, Cyclotomic());
  for (size_t i = 0; i < a.coeffs_.size(); ++i) {
    if (a.coeffs_[i].is_zero()) continue;
    for (size_t j = 0; j < b.coeffs_.size(); ++j) {
      if (b.coeffs_[j].is_zero()) continue;
      out.coeffs_[i + j] += a.coeffs_[i] * b.coeffs_[j];
    }
  }
  out.trim();
  return out;
}

std::pair<Poly, Poly> Poly::divrem(const Poly& a, const Poly& b) {
  if (b.is_zero()) fail(Errc::DivisionByZero, "polynomial division by zero");
  Poly rem = a;
  int db = b.degree();
  int dq = rem.degree() - db;
  if (dq < 0) return {Poly(), rem};
  Poly quot;
  quot.coeffs_.assign(dq + 1, Cyclotomic());
  Cyclotomic lead_inv = b.leading().inverse();
  for (int k = dq; k >= 0; --k) {
    Cyclotomic c = rem.coeff(k + db) * lead_inv;
    quot.coeffs_[k] = c;
    if (!c.is_zero())
      for (int i = 0; i <= db; ++i) rem.coeffs_[k + i] -= c * b.coeffs_[i];
    rem.coeffs_.resize(k + db);
  }
  rem.trim();
  quot.trim();
  return {std::move(quot), std::move(rem)};
}

Poly Poly::div_exact(const Poly& a, const Poly& b) {
  auto [q, r] = divrem(a, b);
  if (!r.is_zero()) fail(Errc::InvalidArgument, "non-exact polynomial division");
  return q;
}

Poly Poly::gcd(Poly a, Poly b) {
  while (!b.is_zero()) {
    Poly r = divrem(a, b).second;
    a = std::move(b);
    b = std::move(r);
  }
  if (a.is_zero()) return a;
  return a.monic();
}

Poly Poly::conj() const {
  Poly out = *this;
  for (auto& c : out.coeffs_) c = c.conj();
  return out;
}

Cyclotomic Poly::eval(const Cyclotomic& x) const {
  Cyclotomic acc;
  for (size_t i = coeffs_.size(); i-- > 0;) acc = acc * x + coeffs_[i];
  return acc;
}

Poly Poly::scaled(const Cyclotomic& c) const {
  if (c.is_zero()) return Poly();
  Poly out = *this;
  for (auto& k : out.coeffs_) k *= c;
  return out;
}

Poly Poly::monic() const {
  if (is_zero()) return *this;
  if (leading().is_one()) return *this;
  return scaled(leading().inverse());
}

std::string Poly::to_string() const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (size_t i = coeffs_.size(); i-- > 0;) {
    const Cyclotomic& c = coeffs_[i];
    if (c.is_zero()) continue;
    std::string mono = (i == 0) ? "" : (i == 1 ? "q" : "q^" + std::to_string(i));
    if (c.is_rational()) {
      Rational r = c.rational_value();
      bool neg = r < 0;
      Rational mag = neg ? Rational(-r) : r;
      if (first)
        os << (neg ? "-" : "");
      else
        os << (neg ? " - " : " + ");
      if (mono.empty())
        os << rat_to_string(mag);
      else if (mag == 1)
        os << mono;
      else
        os << rat_to_string(mag) << "*" << mono;
    } else {
      if (!first) os << " + ";
      os << "(" << c.to_string() << ")";
      if (!mono.empty()) os << "*" << mono;
    }
    first = false;
  }
  return os.str();
}

}  // namespace lietab
