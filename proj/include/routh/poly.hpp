#pragma once

#include <algorithm>
#include <cstddef>
#include <initializer_list>
#include <utility>
#include <vector>

#include "routh/error.hpp"

namespace routh {

/// Dense univariate polynomial over a field-like scalar, coefficients stored
/// in ascending powers and kept trimmed (no trailing zero coefficients).
///
/// The same type serves the characteristic polynomial in the Laplace
/// variable and the numerator/denominator polynomials in the formal
/// infinitesimal; the indeterminate is only a rendering concern.
template <typename Scalar>
class Poly {
 public:
  using scalar_type = Scalar;

  Poly() = default;
  explicit Poly(std::vector<Scalar> ascending) : coeffs_(std::move(ascending)) { trim(); }
  Poly(std::initializer_list<Scalar> ascending) : coeffs_(ascending) { trim(); }

  static Poly constant(const Scalar& c) { return Poly(std::vector<Scalar>{c}); }
  static Poly monomial(const Scalar& c, std::size_t power) {
    std::vector<Scalar> v(power + 1, Scalar(0));
    v[power] = c;
    return Poly(std::move(v));
  }

  bool is_zero() const { return coeffs_.empty(); }
  /// -1 for the zero polynomial.
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  /// Index of the lowest nonzero coefficient; -1 for the zero polynomial.
  int order() const {
    for (std::size_t k = 0; k < coeffs_.size(); ++k) {
      if (!is_zero_scalar(coeffs_[k])) return static_cast<int>(k);
    }
    return -1;
  }

  /// Coefficient of x^k; zero beyond the degree.
  Scalar operator[](std::size_t k) const { return k < coeffs_.size() ? coeffs_[k] : Scalar(0); }
  const Scalar& leading() const { return coeffs_.back(); }
  const Scalar& lowest() const { return coeffs_[static_cast<std::size_t>(order())]; }
  const std::vector<Scalar>& coefficients() const { return coeffs_; }

  Poly operator-() const {
    Poly r = *this;
    for (auto& c : r.coeffs_) c = -c;
    return r;
  }

  Poly& operator+=(const Poly& o) {
    if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size(), Scalar(0));
    for (std::size_t k = 0; k < o.coeffs_.size(); ++k) coeffs_[k] += o.coeffs_[k];
    trim();
    return *this;
  }
  Poly& operator-=(const Poly& o) {
    if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size(), Scalar(0));
    for (std::size_t k = 0; k < o.coeffs_.size(); ++k) coeffs_[k] -= o.coeffs_[k];
    trim();
    return *this;
  }
  Poly& operator*=(const Scalar& s) {
    if (is_zero_scalar(s)) {
      coeffs_.clear();
      return *this;
    }
    for (auto& c : coeffs_) c *= s;
    return *this;
  }

  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
  friend Poly operator*(Poly a, const Scalar& s) { return a *= s; }
  friend Poly operator*(const Scalar& s, Poly a) { return a *= s; }
  friend Poly operator*(const Poly& a, const Poly& b) {
    if (a.is_zero() || b.is_zero()) return Poly();
    std::vector<Scalar> out(a.coeffs_.size() + b.coeffs_.size() - 1, Scalar(0));
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
      if (is_zero_scalar(a.coeffs_[i])) continue;
      for (std::size_t j = 0; j < b.coeffs_.size(); ++j) out[i + j] += a.coeffs_[i] * b.coeffs_[j];
    }
    return Poly(std::move(out));
  }
  friend Poly& operator*=(Poly& a, const Poly& b) { return a = a * b; }

  friend bool operator==(const Poly& a, const Poly& b) { return a.coeffs_ == b.coeffs_; }

  /// Multiplies by x^k (k may be negative when the low coefficients vanish).
  Poly shifted(int k) const {
    if (is_zero() || k == 0) return *this;
    std::vector<Scalar> v;
    if (k > 0) {
      v.assign(static_cast<std::size_t>(k), Scalar(0));
      v.insert(v.end(), coeffs_.begin(), coeffs_.end());
    } else {
      v.assign(coeffs_.begin() + std::min<std::ptrdiff_t>(-k, std::ssize(coeffs_)), coeffs_.end());
    }
    return Poly(std::move(v));
  }

 private:
  static bool is_zero_scalar(const Scalar& s) { return s == Scalar(0); }
  void trim() {
    while (!coeffs_.empty() && is_zero_scalar(coeffs_.back())) coeffs_.pop_back();
  }

  std::vector<Scalar> coeffs_;
};

/// Horner evaluation; `T` may differ from the coefficient type (e.g. complex
/// evaluation of exact coefficients through a conversion functor).
template <typename Scalar, typename T, typename Convert>
T evaluate(const Poly<Scalar>& p, const T& x, Convert&& convert) {
  T acc = T(0);
  const auto& c = p.coefficients();
  for (auto it = c.rbegin(); it != c.rend(); ++it) acc = acc * x + convert(*it);
  return acc;
}

template <typename Scalar>
Scalar evaluate(const Poly<Scalar>& p, const Scalar& x) {
  return evaluate(p, x, [](const Scalar& c) { return c; });
}

template <typename Scalar>
Poly<Scalar> derivative(const Poly<Scalar>& p) {
  if (p.degree() < 1) return Poly<Scalar>();
  std::vector<Scalar> v(static_cast<std::size_t>(p.degree()));
  for (std::size_t k = 1; k <= v.size(); ++k) v[k - 1] = p[k] * Scalar(static_cast<long>(k));
  return Poly<Scalar>(std::move(v));
}

/// Euclidean division over a field. Throws DivisionByZero for a zero divisor.
template <typename Scalar>
std::pair<Poly<Scalar>, Poly<Scalar>> divmod(const Poly<Scalar>& a, const Poly<Scalar>& b) {
  if (b.is_zero()) throw DivisionByZero("polynomial division by zero");
  if (a.degree() < b.degree()) return {Poly<Scalar>(), a};
  std::vector<Scalar> rem = a.coefficients();
  std::vector<Scalar> quot(static_cast<std::size_t>(a.degree() - b.degree() + 1), Scalar(0));
  const auto db = static_cast<std::size_t>(b.degree());
  const Scalar& lead = b.leading();
  for (std::size_t k = quot.size(); k-- > 0;) {
    const Scalar q = rem[k + db] / lead;
    quot[k] = q;
    if (q == Scalar(0)) continue;
    for (std::size_t j = 0; j <= db; ++j) rem[k + j] -= q * b[j];
  }
  rem.resize(db);
  return {Poly<Scalar>(std::move(quot)), Poly<Scalar>(std::move(rem))};
}

/// Monic greatest common divisor; gcd(0, 0) = 0.
template <typename Scalar>
Poly<Scalar> gcd(Poly<Scalar> a, Poly<Scalar> b) {
  while (!b.is_zero()) {
    auto r = divmod(a, b).second;
    a = std::move(b);
    b = std::move(r);
  }
  if (a.is_zero()) return a;
  return a * (Scalar(1) / a.leading());
}

}  // namespace routh
