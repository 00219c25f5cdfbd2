#include "lietab/cyclotomic.hpp"

#include <map>
#include <mutex>
#include <numeric>
#include <sstream>

#include "lietab/errors.hpp"

namespace lietab {

namespace {

unsigned totient(unsigned n) {
  unsigned result = n;
  for (unsigned p = 2; p * p <= n; ++p) {
    if (n % p == 0) {
      while (n % p == 0) n /= p;
      result -= result / p;
    }
  }
  if (n > 1) result -= result / n;
  return result;
}

using Coeffs = std::vector<Rational>;  // dense, ascending degree, trimmed

void trim(Coeffs& c) {
  while (!c.empty() && c.back() == 0) c.pop_back();
}

// Remainder of a modulo the monic polynomial m, in place.
void mod_monic(Coeffs& a, const Coeffs& m) {
  int dm = static_cast<int>(m.size()) - 1;
  while (static_cast<int>(a.size()) - 1 >= dm) {
    Rational lead = a.back();
    int shift = static_cast<int>(a.size()) - 1 - dm;
    if (lead != 0)
      for (int i = 0; i < dm; ++i) a[shift + i] -= lead * m[i];
    a.pop_back();
    trim(a);
  }
}

// Exact quotient a / b for monic b dividing a.
Coeffs div_exact(Coeffs a, const Coeffs& b) {
  int db = static_cast<int>(b.size()) - 1;
  int dq = static_cast<int>(a.size()) - 1 - db;
  if (dq < 0) return {};
  Coeffs q(dq + 1, Rational(0));
  for (int k = dq; k >= 0; --k) {
    Rational c = (k + db < static_cast<int>(a.size())) ? a[k + db] : Rational(0);
    q[k] = c;
    if (c != 0)
      for (int i = 0; i <= db; ++i) a[k + i] -= c * b[i];
  }
  trim(a);
  if (!a.empty()) fail(Errc::InvalidArgument, "non-exact polynomial division");
  return q;
}

std::mutex cache_mutex;

const Coeffs& cyclo_poly_cached(unsigned n) {
  static std::map<unsigned, Coeffs> cache;
  std::lock_guard<std::mutex> lock(cache_mutex);
  auto it = cache.find(n);
  if (it != cache.end()) return it->second;

  // Phi_n = (x^n - 1) / prod_{d|n, d<n} Phi_d, computed bottom-up so every
  // divisor is already in the cache.
  std::vector<unsigned> divisors;
  for (unsigned d = 1; d < n; ++d)
    if (n % d == 0) divisors.push_back(d);
  for (unsigned d : divisors) {
    if (!cache.count(d)) {
      // fill recursively without re-locking
      Coeffs num(d + 1, Rational(0));
      num[0] = -1;
      num[d] = 1;
      for (unsigned e = 1; e < d; ++e)
        if (d % e == 0) num = div_exact(std::move(num), cache.at(e));
      cache.emplace(d, std::move(num));
    }
  }
  Coeffs num(n + 1, Rational(0));
  num[0] = -1;
  num[n] = 1;
  for (unsigned d : divisors) num = div_exact(std::move(num), cache.at(d));
  return cache.emplace(n, std::move(num)).first->second;
}

// Coordinates of zeta_n^k (k reduced mod n) on the power basis.
Coeffs power_coords(unsigned n, unsigned k) {
  Coeffs p(k + 1, Rational(0));
  p[k] = 1;
  mod_monic(p, cyclo_poly_cached(n));
  p.resize(totient(n), Rational(0));
  return p;
}

// Exact solve of the column system B y = x (B columns given as vectors); returns
// empty optional-like flag via bool.  Gaussian elimination over Q.
bool solve_columns(const std::vector<Coeffs>& columns, const Coeffs& rhs, Coeffs* out) {
  size_t rows = rhs.size(), cols = columns.size();
  std::vector<Coeffs> m(rows, Coeffs(cols + 1, Rational(0)));
  for (size_t j = 0; j < cols; ++j)
    for (size_t i = 0; i < rows; ++i) m[i][j] = columns[j][i];
  for (size_t i = 0; i < rows; ++i) m[i][cols] = rhs[i];

  std::vector<size_t> pivot_row(cols, SIZE_MAX);
  size_t r = 0;
  for (size_t j = 0; j < cols && r < rows; ++j) {
    size_t p = r;
    while (p < rows && m[p][j] == 0) ++p;
    if (p == rows) continue;
    std::swap(m[p], m[r]);
    Rational inv = 1 / m[r][j];
    for (size_t k = j; k <= cols; ++k) m[r][k] *= inv;
    for (size_t i = 0; i < rows; ++i) {
      if (i == r || m[i][j] == 0) continue;
      Rational f = m[i][j];
      for (size_t k = j; k <= cols; ++k) m[i][k] -= f * m[r][k];
    }
    pivot_row[j] = r;
    ++r;
  }
  // consistency: no row of the form (0 ... 0 | nonzero)
  for (size_t i = r; i < rows; ++i)
    if (m[i][cols] != 0) return false;
  out->assign(cols, Rational(0));
  for (size_t j = 0; j < cols; ++j)
    if (pivot_row[j] != SIZE_MAX) (*out)[j] = m[pivot_row[j]][cols];
  return true;
}

}  // namespace

const std::vector<Rational>& Cyclotomic::cyclotomic_polynomial(unsigned n) {
  return cyclo_poly_cached(n);
}

Cyclotomic Cyclotomic::root_of_unity(unsigned n, long power) {
  if (n == 0) fail(Errc::InvalidArgument, "root of unity order must be positive");
  long k = power % static_cast<long>(n);
  if (k < 0) k += n;
  unsigned g = std::gcd(n, static_cast<unsigned>(k == 0 ? n : k));
  // zeta_n^k is a primitive (n/g)-th root; store it there directly.
  unsigned order = (k == 0) ? 1 : n / g;
  unsigned exp = (k == 0) ? 0 : static_cast<unsigned>(k) / g;
  Cyclotomic out(order, power_coords(order, exp % order));
  out.reduce_conductor();
  return out;
}

const Rational& Cyclotomic::rational_value() const {
  if (!is_rational()) fail(Errc::InvalidArgument, "value " + to_string() + " is not rational");
  return coords_[0];
}

std::vector<Rational> Cyclotomic::embedded_coords(unsigned n) const {
  if (n == conductor_) return coords_;
  if (n % conductor_ != 0) fail(Errc::InvalidArgument, "embedding requires divisible conductor");
  unsigned step = n / conductor_;
  Coeffs acc(totient(n), Rational(0));
  for (size_t i = 0; i < coords_.size(); ++i) {
    if (coords_[i] == 0) continue;
    Coeffs p = power_coords(n, static_cast<unsigned>(i) * step % n);
    for (size_t k = 0; k < acc.size(); ++k) acc[k] += coords_[i] * p[k];
  }
  return acc;
}

void Cyclotomic::reduce_conductor() {
  if (conductor_ == 1) return;
  // Rational fast path.
  bool rational = true;
  for (size_t i = 1; i < coords_.size(); ++i)
    if (coords_[i] != 0) {
      rational = false;
      break;
    }
  if (rational) {
    Rational v = coords_[0];
    conductor_ = 1;
    coords_ = {v};
    return;
  }
  for (unsigned m = 2; m < conductor_; ++m) {
    if (conductor_ % m != 0) continue;
    std::vector<Coeffs> columns;
    unsigned phi_m = totient(m);
    columns.reserve(phi_m);
    unsigned step = conductor_ / m;
    for (unsigned j = 0; j < phi_m; ++j)
      columns.push_back(power_coords(conductor_, j * step % conductor_));
    Coeffs sol;
    if (solve_columns(columns, coords_, &sol)) {
      // verify: solve_columns only checks consistency of the system
      conductor_ = m;
      coords_ = std::move(sol);
      coords_.resize(phi_m, Rational(0));
      return;
    }
  }
}

Cyclotomic operator+(const Cyclotomic& a, const Cyclotomic& b) {
  if (a.conductor_ == 1 && b.conductor_ == 1) return Cyclotomic(a.coords_[0] + b.coords_[0]);
  unsigned n = std::lcm(a.conductor_, b.conductor_);
  auto ca = a.embedded_coords(n);
  auto cb = b.embedded_coords(n);
  for (size_t i = 0; i < ca.size(); ++i) ca[i] += cb[i];
  Cyclotomic out(n, std::move(ca));
  out.reduce_conductor();
  return out;
}

Cyclotomic operator-(const Cyclotomic& a, const Cyclotomic& b) { return a + (-b); }

Cyclotomic Cyclotomic::operator-() const {
  Cyclotomic out = *this;
  for (auto& c : out.coords_) c = -c;
  return out;
}

Cyclotomic operator*(const Cyclotomic& a, const Cyclotomic& b) {
  if (a.conductor_ == 1 && b.conductor_ == 1) return Cyclotomic(a.coords_[0] * b.coords_[0]);
  if (a.conductor_ == 1) {
    if (a.coords_[0] == 0) return Cyclotomic();
    Cyclotomic out = b;
    for (auto& c : out.coords_) c *= a.coords_[0];
    out.reduce_conductor();
    return out;
  }
  if (b.conductor_ == 1) return b * a;
  unsigned n = std::lcm(a.conductor_, b.conductor_);
  auto ca = a.embedded_coords(n);
  auto cb = b.embedded_coords(n);
  std::vector<Rational> prod(ca.size() + cb.size() - 1, Rational(0));
  for (size_t i = 0; i < ca.size(); ++i) {
    if (ca[i] == 0) continue;
    for (size_t j = 0; j < cb.size(); ++j)
      if (cb[j] != 0) prod[i + j] += ca[i] * cb[j];
  }
  mod_monic(prod, cyclo_poly_cached(n));
  prod.resize(totient(n), Rational(0));
  Cyclotomic out(n, std::move(prod));
  out.reduce_conductor();
  return out;
}

Cyclotomic Cyclotomic::inverse() const {
  if (is_zero()) fail(Errc::DivisionByZero, "inverse of zero");
  if (conductor_ == 1) return Cyclotomic(1 / coords_[0]);
  // Extended Euclid: u*a + v*Phi_N = 1 in Q[x].
  Coeffs r0 = cyclo_poly_cached(conductor_);
  Coeffs r1 = coords_;
  trim(r1);
  Coeffs u0{}, u1{Rational(1)};  // coefficients of a
  while (true) {
    // divide r0 by r1
    Coeffs q;
    Coeffs rem = r0;
    int d1 = static_cast<int>(r1.size()) - 1;
    Rational lead_inv = 1 / r1.back();
    int dq = static_cast<int>(rem.size()) - 1 - d1;
    if (dq >= 0) {
      q.assign(dq + 1, Rational(0));
      for (int k = dq; k >= 0; --k) {
        Rational c = rem[k + d1] * lead_inv;
        q[k] = c;
        if (c != 0)
          for (int i = 0; i <= d1; ++i) rem[k + i] -= c * r1[i];
        rem.pop_back();
      }
      trim(rem);
    }
    // u_next = u0 - q*u1
    Coeffs qu(q.size() + u1.size(), Rational(0));
    for (size_t i = 0; i < q.size(); ++i)
      if (q[i] != 0)
        for (size_t j = 0; j < u1.size(); ++j) qu[i + j] += q[i] * u1[j];
    trim(qu);
    Coeffs u_next = u0;
    u_next.resize(std::max(u_next.size(), qu.size()), Rational(0));
    for (size_t i = 0; i < qu.size(); ++i) u_next[i] -= qu[i];
    trim(u_next);
    if (rem.empty()) {
      // r1 is the gcd; it must be a nonzero constant since Phi_N has no
      // rational roots shared with a nonzero a of smaller degree.
      if (r1.size() != 1)
        fail(Errc::DivisionByZero, "inverse failed: element not invertible");
      Rational inv = 1 / r1[0];
      for (auto& c : u1) c *= inv;
      u1.resize(totient(conductor_), Rational(0));
      Cyclotomic out(conductor_, std::move(u1));
      out.reduce_conductor();
      return out;
    }
    r0 = std::move(r1);
    r1 = std::move(rem);
    u0 = std::move(u1);
    u1 = std::move(u_next);
  }
}

Cyclotomic operator/(const Cyclotomic& a, const Cyclotomic& b) { return a * b.inverse(); }

Cyclotomic Cyclotomic::galois(long k) const {
  if (conductor_ == 1) return *this;
  long km = k % static_cast<long>(conductor_);
  if (km < 0) km += conductor_;
  if (std::gcd(static_cast<unsigned>(km), conductor_) != 1)
    fail(Errc::InvalidArgument, "galois exponent not coprime to conductor");
  Coeffs acc(totient(conductor_), Rational(0));
  for (size_t i = 0; i < coords_.size(); ++i) {
    if (coords_[i] == 0) continue;
    Coeffs p = power_coords(conductor_, static_cast<unsigned>(i * km % conductor_));
    for (size_t t = 0; t < acc.size(); ++t) acc[t] += coords_[i] * p[t];
  }
  Cyclotomic out(conductor_, std::move(acc));
  out.reduce_conductor();
  return out;
}

Cyclotomic Cyclotomic::conj() const { return galois(-1); }

bool operator==(const Cyclotomic& a, const Cyclotomic& b) {
  return a.conductor_ == b.conductor_ && a.coords_ == b.coords_;
}

std::string Cyclotomic::to_string() const {
  if (conductor_ == 1) return rat_to_string(coords_[0]);
  std::ostringstream os;
  bool first = true;
  for (size_t i = 0; i < coords_.size(); ++i) {
    if (coords_[i] == 0) continue;
    if (!first) os << " + ";
    if (i == 0) {
      os << rat_to_string(coords_[0]);
    } else {
      if (coords_[i] != 1) os << "(" << rat_to_string(coords_[i]) << ")*";
      os << "z(" << conductor_ << ")";
      if (i > 1) os << "^" << i;
    }
    first = false;
  }
  if (first) os << "0";
  return os.str();
}

}  // namespace lietab
