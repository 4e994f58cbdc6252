#pragma once

#include <complex>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "routh/poly.hpp"
#include "routh/rational.hpp"

namespace routh {

/// Characteristic polynomial in the Laplace variable, exact coefficients,
/// ascending storage.
using Polynomial = Poly<Rational>;
using Complex = std::complex<double>;

/// Accepts a descending coefficient list ("1,0,0,0,1", blanks also separate)
/// or sparse terms over `s` ("s^4 + 1", "3/2*s^2 - s + 2").
/// Throws ParseError or EmptyPolynomial.
Polynomial parse_poly(std::string_view text);

/// Descending sparse form over `s`; parse_poly(render(p)) == p.
std::string render(const Polynomial& p);

/// Descending coefficients as fraction strings, leading coefficient first.
std::vector<std::string> descending_coefficients(const Polynomial& p);

Complex evaluate(const Polynomial& p, Complex z);

/// Monic polynomial with the given roots. Non-real roots must come in
/// conjugate pairs (1e-12); throws UnpairedComplexRoot otherwise. The exact
/// product of the binary root values is used whenever it is real with
/// denominators <= 1e6, else the floating product is rounded coefficientwise.
Polynomial from_roots(std::span<const Complex> roots);

/// Returns (k, q) with p = s^k * q and q(0) != 0.
std::pair<int, Polynomial> strip_origin_roots(const Polynomial& p);

}  // namespace routh
