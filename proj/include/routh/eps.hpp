#pragma once

#include <iosfwd>
#include <string>
#include <variant>

#include "routh/poly.hpp"
#include "routh/rational.hpp"

namespace routh {

/// Polynomial in the formal infinitesimal e, ascending powers.
using EpsPoly = Poly<Rational>;

/// Marker returned by `limit` when a value blows up as e -> 0+.
struct PoleAtZero {
  friend bool operator==(PoleAtZero, PoleAtZero) { return true; }
};

/// Element of Q(e), the field of rational functions in a positive
/// infinitesimal e, ordered by sign as e -> 0+.
///
/// Canonical form: numerator and denominator are coprime and the lowest
/// nonzero coefficient of the denominator is exactly 1. Structural equality
/// is therefore value equality.
class EpsRat {
 public:
  EpsRat() : den_(EpsPoly::constant(1)) {}
  EpsRat(const Rational& value) : num_(EpsPoly::constant(value)), den_(EpsPoly::constant(1)) {}  // NOLINT
  EpsRat(long value) : EpsRat(Rational(value)) {}  // NOLINT
  EpsRat(int value) : EpsRat(Rational(value)) {}   // NOLINT
  /// Throws DivisionByZero for a zero denominator.
  EpsRat(EpsPoly numerator, EpsPoly denominator);

  /// The infinitesimal itself.
  static EpsRat epsilon();

  const EpsPoly& numerator() const { return num_; }
  const EpsPoly& denominator() const { return den_; }

  bool is_zero() const { return num_.is_zero(); }
  bool is_eps_free() const { return num_.degree() <= 0 && den_.degree() == 0; }

  EpsRat operator-() const;
  friend EpsRat operator+(const EpsRat& x, const EpsRat& y);
  friend EpsRat operator-(const EpsRat& x, const EpsRat& y);
  friend EpsRat operator*(const EpsRat& x, const EpsRat& y);
  /// Throws DivisionByZero.
  friend EpsRat operator/(const EpsRat& x, const EpsRat& y);
  EpsRat& operator+=(const EpsRat& y) { return *this = *this + y; }
  EpsRat& operator-=(const EpsRat& y) { return *this = *this - y; }
  EpsRat& operator*=(const EpsRat& y) { return *this = *this * y; }
  EpsRat& operator/=(const EpsRat& y) { return *this = *this / y; }

  friend bool operator==(const EpsRat& a, const EpsRat& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }

  /// `(6 - 7*e)/(e)` in general, `2*e` when the denominator is 1, a plain
  /// fraction when e-free.
  std::string to_string() const;

 private:
  struct Canonical {};
  EpsRat(EpsPoly numerator, EpsPoly denominator, Canonical)
      : num_(std::move(numerator)), den_(std::move(denominator)) {}
  void normalize();

  EpsPoly num_;
  EpsPoly den_;
};

/// Sign of x for every sufficiently small e > 0.
int sign(const EpsRat& x);

/// Value at e = 0, or PoleAtZero when the denominator vanishes there.
std::variant<Rational, PoleAtZero> limit(const EpsRat& x);

/// Exact substitution of a concrete rational value for e.
Rational substitute(const EpsRat& x, const Rational& eps);

/// Ascending-power rendering with `symbol` as the indeterminate, e.g. `6 - 7*e`.
std::string render_ascending(const EpsPoly& p, const char* symbol = "e");

std::ostream& operator<<(std::ostream& os, const EpsRat& x);

}  // namespace routh
