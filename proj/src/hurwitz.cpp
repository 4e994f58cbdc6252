#include "routh/hurwitz.hpp"

#include <algorithm>
#include <stdexcept>
#include <utility>

#include "routh/error.hpp"

namespace routh {

namespace {

using IntMatrix = std::vector<std::vector<mpz_class>>;

// Clears denominators: returns the integer matrix L*m and L.
std::pair<IntMatrix, mpz_class> integer_scaled(const ExactMatrix& m) {
  mpz_class lcm = 1;
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    for (Eigen::Index j = 0; j < m.cols(); ++j) {
      mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), m(i, j).denominator().get_mpz_t());
    }
  }
  IntMatrix out(static_cast<std::size_t>(m.rows()),
                std::vector<mpz_class>(static_cast<std::size_t>(m.cols())));
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    for (Eigen::Index j = 0; j < m.cols(); ++j) {
      out[i][j] = m(i, j).numerator() * (lcm / m(i, j).denominator());
    }
  }
  return {std::move(out), lcm};
}

void exact_divide(mpz_class& value, const mpz_class& divisor) {
  if (!mpz_divisible_p(value.get_mpz_t(), divisor.get_mpz_t())) {
    throw std::logic_error("Bareiss step left a remainder");
  }
  mpz_divexact(value.get_mpz_t(), value.get_mpz_t(), divisor.get_mpz_t());
}

// One Bareiss step eliminating below pivot k.
void bareiss_step(IntMatrix& a, std::size_t k, std::size_t n, const mpz_class& previous) {
  for (std::size_t i = k + 1; i < n; ++i) {
    for (std::size_t j = k + 1; j < n; ++j) {
      a[i][j] = a[k][k] * a[i][j] - a[i][k] * a[k][j];
      exact_divide(a[i][j], previous);
    }
    a[i][k] = 0;
  }
}

// Determinant of the leading n x n block of an integer matrix.
mpz_class integer_determinant(IntMatrix a, std::size_t n) {
  mpz_class previous = 1;
  int sign = 1;
  for (std::size_t k = 0; k < n; ++k) {
    if (a[k][k] == 0) {
      std::size_t swap = k + 1;
      while (swap < n && a[swap][k] == 0) ++swap;
      if (swap == n) return 0;
      std::swap(a[k], a[swap]);
      sign = -sign;
    }
    bareiss_step(a, k, n, previous);
    previous = a[k][k];
  }
  return sign * previous;
}

Rational unscale(const mpz_class& scaled, const mpz_class& lcm, std::size_t k) {
  mpz_class denom;
  mpz_pow_ui(denom.get_mpz_t(), lcm.get_mpz_t(), k);
  return Rational(scaled, denom);
}

}  // namespace

ExactMatrix hurwitz_matrix(const Polynomial& p) {
  const int n = p.degree();
  if (n < 1) throw DegreeTooSmall("Hurwitz matrix needs degree >= 1");
  if (p.leading().sign() < 0) throw NegativeLeadingCoefficient("leading coefficient must be positive");
  ExactMatrix h(n, n);
  for (int i = 1; i <= n; ++i) {
    for (int j = 1; j <= n; ++j) {
      const int k = n - 2 * j + i;
      h(i - 1, j - 1) = (k >= 0 && k <= n) ? p[static_cast<std::size_t>(k)] : Rational(0);
    }
  }
  return h;
}

std::vector<Rational> leading_minors(const ExactMatrix& m) {
  if (m.rows() != m.cols()) throw InvalidArgument("leading minors need a square matrix");
  const auto n = static_cast<std::size_t>(m.rows());
  auto [a, lcm] = integer_scaled(m);
  std::vector<Rational> minors;
  minors.reserve(n);

  // Without pivoting, pivot k of the Bareiss elimination is the (k+1)-th
  // leading minor of the integer matrix.
  mpz_class previous = 1;
  std::size_t k = 0;
  const IntMatrix original = a;
  for (; k < n; ++k) {
    if (a[k][k] == 0) break;
    minors.push_back(unscale(a[k][k], lcm, k + 1));
    bareiss_step(a, k, n, previous);
    previous = a[k][k];
  }
  if (k < n) {
    minors.push_back(Rational(0));
    for (std::size_t size = k + 2; size <= n; ++size) {
      minors.push_back(unscale(integer_determinant(original, size), lcm, size));
    }
  }
  return minors;
}

Rational determinant(const ExactMatrix& m) {
  if (m.rows() != m.cols()) throw InvalidArgument("determinant needs a square matrix");
  const auto n = static_cast<std::size_t>(m.rows());
  if (n == 0) return Rational(1);
  auto [a, lcm] = integer_scaled(m);
  return unscale(integer_determinant(std::move(a), n), lcm, n);
}

HurwitzDecision hurwitz_stable(const Polynomial& p) {
  if (!p.is_zero() && p[0].is_zero()) throw OriginRoot("constant term is zero");
  HurwitzDecision d;
  d.minors = leading_minors(hurwitz_matrix(p));
  d.stable = std::all_of(d.minors.begin(), d.minors.end(), [](const Rational& x) { return x.sign() > 0; });
  return d;
}

}  // namespace routh
