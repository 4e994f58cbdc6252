#include "routh/eps.hpp"

#include <ostream>
#include <sstream>

namespace routh {

namespace {

// Appends `c*sym^k` to `os`, including the joining sign.
void append_term(std::ostringstream& os, const Rational& c, std::size_t k, const char* sym,
                 bool first) {
  const bool negative = c.sign() < 0;
  if (first) {
    if (negative) os << '-';
  } else {
    os << (negative ? " - " : " + ");
  }
  const Rational mag = abs(c);
  if (k == 0) {
    os << mag;
    return;
  }
  if (mag != Rational(1)) os << mag << '*';
  os << sym;
  if (k > 1) os << '^' << k;
}

}  // namespace

EpsRat::EpsRat(EpsPoly numerator, EpsPoly denominator)
    : num_(std::move(numerator)), den_(std::move(denominator)) {
  if (den_.is_zero()) throw DivisionByZero("EpsRat with zero denominator");
  normalize();
}

EpsRat EpsRat::epsilon() { return EpsRat(EpsPoly{0, 1}, EpsPoly::constant(1), Canonical{}); }

void EpsRat::normalize() {
  if (num_.is_zero()) {
    den_ = EpsPoly::constant(1);
    return;
  }
  if (den_.degree() > 0 && num_.degree() > 0) {
    const EpsPoly g = gcd(num_, den_);
    if (g.degree() > 0) {
      num_ = divmod(num_, g).first;
      den_ = divmod(den_, g).first;
    }
  }
  // Common powers of e are covered by the gcd when both sides have degree > 0;
  // a constant side cannot share a factor.
  const Rational scale = Rational(1) / den_.lowest();
  if (scale != Rational(1)) {
    num_ *= scale;
    den_ *= scale;
  }
}

EpsRat EpsRat::operator-() const { return EpsRat(-num_, den_, Canonical{}); }

EpsRat operator+(const EpsRat& x, const EpsRat& y) {
  if (x.den_ == y.den_) return EpsRat(x.num_ + y.num_, x.den_);
  return EpsRat(x.num_ * y.den_ + y.num_ * x.den_, x.den_ * y.den_);
}

EpsRat operator-(const EpsRat& x, const EpsRat& y) { return x + (-y); }

EpsRat operator*(const EpsRat& x, const EpsRat& y) {
  if (x.is_zero() || y.is_zero()) return EpsRat();
  return EpsRat(x.num_ * y.num_, x.den_ * y.den_);
}

EpsRat operator/(const EpsRat& x, const EpsRat& y) {
  if (y.is_zero()) throw DivisionByZero("EpsRat division by zero");
  if (x.is_zero()) return EpsRat();
  return EpsRat(x.num_ * y.den_, x.den_ * y.num_);
}

std::string EpsRat::to_string() const {
  if (is_eps_free()) return (num_.is_zero() ? Rational(0) : num_[0] / den_[0]).to_string();
  if (den_ == EpsPoly::constant(1)) return render_ascending(num_);
  return "(" + render_ascending(num_) + ")/(" + render_ascending(den_) + ")";
}

int sign(const EpsRat& x) {
  if (x.is_zero()) return 0;
  return x.numerator().lowest().sign() * x.denominator().lowest().sign();
}

std::variant<Rational, PoleAtZero> limit(const EpsRat& x) {
  const Rational d = x.denominator()[0];
  if (d.is_zero()) return PoleAtZero{};
  return x.numerator()[0] / d;
}

Rational substitute(const EpsRat& x, const Rational& eps) {
  const Rational d = evaluate(x.denominator(), eps);
  if (d.is_zero()) throw DivisionByZero("substitution hits a pole");
  return evaluate(x.numerator(), eps) / d;
}

std::string render_ascending(const EpsPoly& p, const char* symbol) {
  if (p.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (std::size_t k = 0; k < p.coefficients().size(); ++k) {
    const Rational& c = p.coefficients()[k];
    if (c.is_zero()) continue;
    append_term(os, c, k, symbol, first);
    first = false;
  }
  return os.str();
}

std::ostream& operator<<(std::ostream& os, const EpsRat& x) { return os << x.to_string(); }

}  // namespace routh
