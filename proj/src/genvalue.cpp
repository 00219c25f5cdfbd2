#include "lietab/genvalue.hpp"

#include <cctype>

#include "lietab/errors.hpp"

namespace lietab {

void GenValue::reduce() {
  if (den_.is_zero()) fail(Errc::DivisionByZero, "zero denominator");
  if (num_.is_zero()) {
    den_ = Poly(1);
    return;
  }
  Poly g = Poly::gcd(num_, den_);
  if (g.degree() > 0) {
    num_ = Poly::div_exact(num_, g);
    den_ = Poly::div_exact(den_, g);
  }
  if (!den_.leading().is_one()) {
    Cyclotomic inv = den_.leading().inverse();
    num_ = num_.scaled(inv);
    den_ = den_.scaled(inv);
  }
}

GenValue GenValue::fraction(Poly num, Poly den, Guard guard) {
  GenValue v;
  v.num_ = std::move(num);
  v.den_ = std::move(den);
  v.guard_ = std::move(guard);
  v.reduce();
  return v;
}

GenValue GenValue::under_guard(const Guard& g) const {
  GenValue out = *this;
  out.guard_ = guard_.meet(g);
  return out;
}

bool GenValue::is_integer() const {
  if (!is_constant()) return false;
  Cyclotomic c = num_.constant_term();
  return c.is_rational() && rat_is_integer(c.rational_value());
}

Cyclotomic GenValue::constant_value() const {
  if (!is_constant()) fail(Errc::InvalidArgument, "value " + to_string() + " is not constant");
  return num_.constant_term();
}

long GenValue::integer_value() const {
  if (!is_integer()) fail(Errc::InvalidArgument, "value " + to_string() + " is not an integer");
  Rational r = constant_value().rational_value();
  if (!r.get_num().fits_slong_p())
    fail(Errc::InvalidArgument, "integer value out of machine range");
  return r.get_num().get_si();
}

GenValue GenValue::operator-() const {
  GenValue out = *this;
  out.num_ = -out.num_;
  return out;
}

GenValue operator+(const GenValue& a, const GenValue& b) {
  return GenValue::fraction(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_,
                            a.guard_.meet(b.guard_));
}

GenValue operator-(const GenValue& a, const GenValue& b) { return a + (-b); }

GenValue operator*(const GenValue& a, const GenValue& b) {
  return GenValue::fraction(a.num_ * b.num_, a.den_ * b.den_, a.guard_.meet(b.guard_));
}

GenValue operator/(const GenValue& a, const GenValue& b) {
  if (b.is_zero()) fail(Errc::DivisionByZero, "division by the zero function");
  return GenValue::fraction(a.num_ * b.den_, a.den_ * b.num_, a.guard_.meet(b.guard_));
}

GenValue GenValue::conj() const {
  GenValue out = *this;
  out.num_ = out.num_.conj();
  out.den_ = out.den_.conj();
  out.reduce();
  return out;
}

GenValue GenValue::inverse() const {
  if (is_zero()) fail(Errc::DivisionByZero, "inverse of the zero function");
  return fraction(den_, num_, guard_);
}

GenValue GenValue::pow(long e) const {
  if (e < 0) return inverse().pow(-e);
  GenValue acc(1);
  acc = acc.under_guard(guard_);
  GenValue base = *this;
  while (e > 0) {
    if (e & 1) acc *= base;
    base *= base;
    e >>= 1;
  }
  return acc;
}

Cyclotomic GenValue::eval_at(long long q0) const {
  if (!guard_.admits(q0))
    fail(Errc::GuardViolation,
         "q=" + std::to_string(q0) + " violates guard " + guard_.to_string());
  Cyclotomic x(static_cast<long>(q0));
  Cyclotomic d = den_.eval(x);
  if (d.is_zero())
    fail(Errc::DivisionByZero, "denominator vanishes at q=" + std::to_string(q0));
  return num_.eval(x) / d;
}

std::string GenValue::to_string() const {
  if (den_ == Poly(1)) return num_.to_string();
  return "(" + num_.to_string() + ")/(" + den_.to_string() + ")";
}

bool identity_equal(const GenValue& a, const GenValue& b) {
  GenValue diff = a - b;  // meets guards; throws UnsatisfiableGuard if disjoint
  return diff.is_zero();
}

bool equal_by_specialization(const GenValue& a, const GenValue& b, unsigned points) {
  Guard g = a.guard().meet(b.guard());
  unsigned found = 0;
  for (long long q0 = 2; found < points; ++q0) {
    if (!g.admits(q0)) continue;
    Cyclotomic da = a.denominator().eval(Cyclotomic(static_cast<long>(q0)));
    Cyclotomic db = b.denominator().eval(Cyclotomic(static_cast<long>(q0)));
    if (da.is_zero() || db.is_zero()) continue;  // finitely many poles
    ++found;
    if (!(a.eval_at(q0) == b.eval_at(q0))) return false;
  }
  return true;
}

// ---------------------------------------------------------------------------
// Expression parser
//
//   expr   := term (('+'|'-') term)*
//   term   := factor (('*'|'/') factor)*
//   factor := ('-'|'+')* power
//   power  := atom ('^' ['-'] digits)?
//   atom   := digits | 'q' | 'z' '(' digits ')' | '(' expr ')'

namespace {

class Parser {
 public:
  Parser(std::string_view src, Guard guard) : src_(src), guard_(std::move(guard)) {}

  GenValue run() {
    GenValue v = expr();
    skip_ws();
    if (pos_ != src_.size()) err("unexpected trailing input");
    return v.under_guard(guard_);
  }

 private:
  std::string_view src_;
  size_t pos_ = 0;
  Guard guard_;

  [[noreturn]] void err(const std::string& what) {
    fail(Errc::ParseError, what + " at position " + std::to_string(pos_) + " in \"" +
                               std::string(src_) + "\"");
  }

  void skip_ws() {
    while (pos_ < src_.size() && std::isspace(static_cast<unsigned char>(src_[pos_]))) ++pos_;
  }

  bool eat(char c) {
    skip_ws();
    if (pos_ < src_.size() && src_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  char peek() {
    skip_ws();
    return pos_ < src_.size() ? src_[pos_] : '\0';
  }

  unsigned long digits() {
    skip_ws();
    if (pos_ >= src_.size() || !std::isdigit(static_cast<unsigned char>(src_[pos_])))
      err("expected digits");
    unsigned long v = 0;
    while (pos_ < src_.size() && std::isdigit(static_cast<unsigned char>(src_[pos_]))) {
      v = v * 10 + static_cast<unsigned long>(src_[pos_] - '0');
      if (v > 1000000000ul) err("numeric literal too large");
      ++pos_;
    }
    return v;
  }

  GenValue expr() {
    GenValue v = term();
    while (true) {
      if (eat('+'))
        v += term();
      else if (eat('-'))
        v -= term();
      else
        return v;
    }
  }

  GenValue term() {
    GenValue v = factor();
    while (true) {
      if (eat('*')) {
        v *= factor();
      } else if (eat('/')) {
        GenValue d = factor();
        if (d.is_zero()) err("division by zero");
        v /= d;
      } else {
        return v;
      }
    }
  }

  GenValue factor() {
    bool neg = false;
    while (true) {
      if (eat('-'))
        neg = !neg;
      else if (eat('+'))
        ;
      else
        break;
    }
    GenValue v = power();
    return neg ? -v : v;
  }

  GenValue power() {
    GenValue base = atom();
    if (eat('^')) {
      bool neg = eat('-');
      long e = static_cast<long>(digits());
      if (neg && base.is_zero()) err("zero to a negative power");
      base = base.pow(neg ? -e : e);
    }
    return base;
  }

  GenValue atom() {
    char c = peek();
    if (c == '(') {
      eat('(');
      GenValue v = expr();
      if (!eat(')')) err("expected ')'");
      return v;
    }
    if (c == 'q') {
      ++pos_;
      return GenValue::variable();
    }
    if (c == 'z') {
      ++pos_;
      if (!eat('(')) err("expected '(' after z");
      unsigned long n = digits();
      if (n == 0) err("root-of-unity order must be positive");
      if (n > 10000) err("root-of-unity order too large");
      if (!eat(')')) err("expected ')'");
      return GenValue(Cyclotomic::root_of_unity(static_cast<unsigned>(n)));
    }
    if (std::isdigit(static_cast<unsigned char>(c)))
      return GenValue(static_cast<long>(digits()));
    err("expected a value");
  }
};

}  // namespace

GenValue parse_genvalue(std::string_view expr, Guard guard) {
  return Parser(expr, std::move(guard)).run();
}

}  // namespace lietab
