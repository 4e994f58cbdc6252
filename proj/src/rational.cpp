#include "routh/rational.hpp"

#include <cctype>
#include <cmath>
#include <ostream>

#include "routh/error.hpp"

namespace routh {

namespace {

bool is_integer_literal(std::string_view s) {
  if (!s.empty() && (s.front() == '-' || s.front() == '+')) s.remove_prefix(1);
  if (s.empty()) return false;
  for (char c : s) {
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

mpz_class parse_integer(std::string_view s) {
  std::string digits(s.front() == '+' ? s.substr(1) : s);
  return mpz_class(digits, 10);
}

}  // namespace

Rational::Rational(const mpz_class& numerator, const mpz_class& denominator) {
  if (denominator == 0) throw DivisionByZero("rational with zero denominator");
  value_ = mpq_class(numerator, denominator);
  value_.canonicalize();
}

Rational::Rational(const mpq_class& value) : value_(value) { value_.canonicalize(); }

Rational Rational::parse(std::string_view text) {
  const std::string_view s = trim(text);
  const auto slash = s.find('/');
  if (slash == std::string_view::npos) {
    const auto dot = s.find('.');
    if (dot != std::string_view::npos) {
      // Terminating decimal, e.g. "-1.25".
      const auto whole = s.substr(0, dot);
      const auto frac = s.substr(dot + 1);
      const bool whole_ok = is_integer_literal(whole) || whole.empty() || whole == "-" || whole == "+";
      if (!whole_ok || frac.empty() || !is_integer_literal(frac) || frac.front() == '-' ||
          frac.front() == '+') {
        throw ParseError("not a number: '" + std::string(s) + "'");
      }
      const bool negative = !whole.empty() && whole.front() == '-';
      std::string digits(whole.empty() || whole == "-" || whole == "+" ? "0" : std::string(whole));
      if (digits.front() == '-' || digits.front() == '+') digits.erase(0, 1);
      digits += frac;
      mpz_class scale;
      mpz_ui_pow_ui(scale.get_mpz_t(), 10, frac.size());
      const mpz_class magnitude(digits, 10);
      return Rational(negative ? mpz_class(-magnitude) : magnitude, scale);
    }
    if (!is_integer_literal(s)) throw ParseError("not a number: '" + std::string(s) + "'");
    return Rational(parse_integer(s), mpz_class(1));
  }
  const auto num = trim(s.substr(0, slash));
  const auto den = trim(s.substr(slash + 1));
  if (!is_integer_literal(num) || !is_integer_literal(den) || den.front() == '-' ||
      den.front() == '+') {
    throw ParseError("not a fraction: '" + std::string(s) + "'");
  }
  const mpz_class d = parse_integer(den);
  if (d == 0) throw ParseError("zero denominator in '" + std::string(s) + "'");
  return Rational(parse_integer(num), d);
}

Rational Rational::from_double(double value) {
  if (!std::isfinite(value)) throw InvalidArgument("non-finite value");
  return Rational(mpq_class(value));
}

Rational Rational::approximate(double value, long max_denominator) {
  if (!std::isfinite(value)) throw InvalidArgument("non-finite value");
  if (max_denominator < 1) throw InvalidArgument("max_denominator must be >= 1");
  const mpq_class target(value);
  const mpz_class bound(max_denominator);

  // Convergents p/q of the exact binary value of `value`.
  mpz_class p0 = 0, q0 = 1, p1 = 1, q1 = 0;
  mpq_class rest = target;
  while (true) {
    mpz_class a;
    mpz_fdiv_q(a.get_mpz_t(), rest.get_num_mpz_t(), rest.get_den_mpz_t());
    const mpz_class q2 = a * q1 + q0;
    if (q2 > bound) {
      // Largest admissible semiconvergent, compared with the last convergent.
      const mpz_class k = (bound - q0) / q1;
      const mpq_class semi(k * p1 + p0, k * q1 + q0);
      const mpq_class last(p1, q1);
      mpq_class ds = semi - target, dl = last - target;
      return Rational(abs(ds) < abs(dl) ? mpq_class(semi) : last);
    }
    const mpz_class p2 = a * p1 + p0;
    p0 = p1; q0 = q1; p1 = p2; q1 = q2;
    const mpq_class frac = rest - mpq_class(a);
    if (frac == 0) return Rational(mpq_class(p1, q1));
    rest = 1 / frac;
  }
}

std::string Rational::to_string() const { return value_.get_str(10); }

Rational& Rational::operator+=(const Rational& other) {
  value_ += other.value_;
  return *this;
}

Rational& Rational::operator-=(const Rational& other) {
  value_ -= other.value_;
  return *this;
}

Rational& Rational::operator*=(const Rational& other) {
  value_ *= other.value_;
  return *this;
}

Rational& Rational::operator/=(const Rational& other) {
  if (other.is_zero()) throw DivisionByZero("rational division by zero");
  value_ /= other.value_;
  return *this;
}

Rational abs(const Rational& x) { return x.sign() < 0 ? -x : x; }

std::ostream& operator<<(std::ostream& os, const Rational& x) { return os << x.to_string(); }

}  // namespace routh
