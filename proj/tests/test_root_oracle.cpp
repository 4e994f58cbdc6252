#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <cmath>
#include <random>

#include "routh/error.hpp"
#include "routh/root_oracle.hpp"

using namespace routh;

namespace {

std::vector<Complex> well_separated_roots(std::mt19937_64& rng, int n) {
  // Distinct grid points, at least 0.5 apart.
  std::vector<Complex> roots;
  auto far_enough = [&](Complex z) {
    return std::all_of(roots.begin(), roots.end(), [&](Complex w) { return std::abs(z - w) >= 0.5; });
  };
  while (static_cast<int>(roots.size()) < n) {
    const double re = (static_cast<int>(rng() % 17) - 8) / 2.0 + 0.25;
    if (n - static_cast<int>(roots.size()) >= 2 && rng() % 2) {
      const double im = (1 + static_cast<int>(rng() % 6)) / 2.0;
      if (far_enough({re, im}) && far_enough({re, -im})) {
        roots.emplace_back(re, im);
        roots.emplace_back(re, -im);
      }
    } else if (far_enough({re, 0.0})) {
      roots.emplace_back(re, 0.0);
    }
  }
  return roots;
}

bool lex_less(Complex a, Complex b) { return a.real() != b.real() ? a.real() < b.real() : a.imag() < b.imag(); }

}  // namespace

TEST_CASE("find_roots examples") {
  const RootSet a = find_roots(Polynomial{-1, 0, 1});
  REQUIRE(a.roots.size() == 2);
  CHECK(a.converged);
  CHECK(std::abs(a.roots[0] - Complex(-1, 0)) < 1e-12);
  CHECK(std::abs(a.roots[1] - Complex(1, 0)) < 1e-12);

  const RootSet b = find_roots(Polynomial{1, 0, 1});
  CHECK(std::abs(b.roots[0] - Complex(0, -1)) < 1e-12);
  CHECK(std::abs(b.roots[1] - Complex(0, 1)) < 1e-12);

  const RootSet c = find_roots(Polynomial{1, 0, 0, 0, 1});
  const double h = std::sqrt(0.5);  // primitive 8th roots of unity
  const Complex expected[] = {{-h, -h}, {-h, h}, {h, -h}, {h, h}};
  REQUIRE(c.roots.size() == 4);
  for (int i = 0; i < 4; ++i) CHECK(std::abs(c.roots[i] - expected[i]) < 1e-9);
  CHECK(c.max_residual < 1e-12);

  CHECK_THROWS_AS(find_roots(Polynomial{3}), DegreeTooSmall);
}

TEST_CASE("non-convergence is reported, not thrown") {
  const RootSet r = find_roots(Polynomial{1, 0, 0, 0, 1}, 1e-13, 1);
  CHECK_FALSE(r.converged);
  CHECK(r.roots.size() == 4);
  CHECK(std::isfinite(r.max_residual));
}

TEST_CASE("half_plane_counts") {
  CHECK(half_plane_counts(find_roots(Polynomial{1, 0, 0, 0, 1})) == HalfPlaneCounts{2, 2, 0, 1e-8});
  const std::vector<Complex> cubic{-1.0, -2.0, 3.0};
  CHECK(half_plane_counts(find_roots(from_roots(cubic))) == HalfPlaneCounts{2, 1, 0, 1e-8});
  RootSet pair;
  pair.roots = Eigen::VectorXcd(2);
  pair.roots << Complex(0, 1), Complex(0, -1);
  CHECK(half_plane_counts(pair) == HalfPlaneCounts{0, 0, 2, 1e-8});
  // Tolerance scales with magnitude.
  RootSet big;
  big.roots = Eigen::VectorXcd(1);
  big.roots << Complex(5e-6, 1000.0);
  CHECK(half_plane_counts(big).axis == 1);
}

TEST_CASE("Vieta, residual, conjugate symmetry and round trip on random root sets") {
  std::mt19937_64 rng(99);
  for (int trial = 0; trial < 200; ++trial) {
    const int n = 1 + static_cast<int>(rng() % 8);
    auto roots = well_separated_roots(rng, n);
    const Polynomial p = from_roots(roots);
    const RootSet r = find_roots(p);
    REQUIRE(r.converged);
    CHECK(r.max_residual < 1e-6);

    Complex sum = 0.0, prod = 1.0;
    for (const Complex& z : r.roots) {
      sum += z;
      prod *= z;
    }
    const double lead = p.leading().to_double();
    const double sum_expected = -p[static_cast<std::size_t>(n - 1)].to_double() / lead;
    const double prod_expected = (n % 2 ? -1.0 : 1.0) * p[0].to_double() / lead;
    CHECK(std::abs(sum - sum_expected) <= 1e-6 * std::max(1.0, std::abs(sum_expected)));
    CHECK(std::abs(prod - prod_expected) <= 1e-6 * std::max(1.0, std::abs(prod_expected)));

    for (const Complex& z : r.roots) {
      const double d = std::abs(z.imag()) == 0.0
                           ? 0.0
                           : (r.roots.array() - std::conj(z)).abs().minCoeff();
      CHECK(d <= 1e-8);
    }

    for (const Complex& z : roots) CHECK((r.roots.array() - z).abs().minCoeff() < 1e-6);
    CHECK(std::is_sorted(r.roots.begin(), r.roots.end(), lex_less));
  }
}
