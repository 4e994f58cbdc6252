#pragma once

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace routh {

/// Exact rational number in lowest terms with a positive denominator.
/// Zero is 0/1. Backed by GMP.
class Rational {
 public:
  Rational() = default;
  Rational(long value) : value_(value) {}  // NOLINT: implicit by design of the scalar
  Rational(int value) : value_(static_cast<long>(value)) {}  // NOLINT
  Rational(const mpz_class& numerator, const mpz_class& denominator);
  explicit Rational(const mpq_class& value);

  /// Parses "n", "-n/d" or a terminating decimal "-1.25", surrounding blanks
  /// allowed. Throws ParseError.
  static Rational parse(std::string_view text);
  /// Exact binary value of a finite double.
  static Rational from_double(double value);
  /// Best rational approximation with denominator <= max_denominator
  /// (continued-fraction convergents and semiconvergents).
  static Rational approximate(double value, long max_denominator);

  const mpz_class& numerator() const { return value_.get_num(); }
  const mpz_class& denominator() const { return value_.get_den(); }
  const mpq_class& raw() const { return value_; }

  int sign() const { return sgn(value_); }
  bool is_zero() const { return sign() == 0; }
  bool is_integer() const { return value_.get_den() == 1; }
  double to_double() const { return value_.get_d(); }
  std::string to_string() const;

  Rational operator-() const { return Rational(mpq_class(-value_)); }
  Rational& operator+=(const Rational& other);
  Rational& operator-=(const Rational& other);
  Rational& operator*=(const Rational& other);
  /// Throws DivisionByZero.
  Rational& operator/=(const Rational& other);

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

  friend bool operator==(const Rational& a, const Rational& b) {
    return a.value_ == b.value_;
  }
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    const int c = cmp(a.value_, b.value_);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
  }

 private:
  mpq_class value_{0};
};

Rational abs(const Rational& x);
std::ostream& operator<<(std::ostream& os, const Rational& x);

}  // namespace routh
