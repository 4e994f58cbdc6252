#include "routh/root_oracle.hpp"

#include <algorithm>
#include <cmath>
#include <vector>

#include "routh/error.hpp"

namespace routh {

namespace {

constexpr double kPairingTolerance = 1e-6;

// Replaces near-conjugate pairs with exact conjugates and snaps the
// imaginary part of unpaired near-real roots to zero.
void symmetrise(Eigen::VectorXcd& z) {
  const Eigen::Index n = z.size();
  std::vector<bool> done(static_cast<std::size_t>(n), false);
  for (Eigen::Index i = 0; i < n; ++i) {
    if (done[i]) continue;
    done[i] = true;
    Eigen::Index best = -1;
    double best_dist = 0.0;
    for (Eigen::Index j = 0; j < n; ++j) {
      if (done[j]) continue;
      const double d = std::abs(z[j] - std::conj(z[i]));
      if (best < 0 || d < best_dist) {
        best = j;
        best_dist = d;
      }
    }
    const double scale = std::max(1.0, std::abs(z[i]));
    const bool near_real = std::abs(z[i].imag()) <= kPairingTolerance * scale;
    if (best >= 0 && best_dist <= kPairingTolerance * scale && !near_real) {
      const double re = 0.5 * (z[i].real() + z[best].real());
      const double im = 0.5 * (std::abs(z[i].imag()) + std::abs(z[best].imag()));
      z[i] = {re, -im};
      z[best] = {re, im};
      done[best] = true;
    } else if (near_real) {
      z[i] = {z[i].real(), 0.0};
    }
  }
}

}  // namespace

RootSet find_roots(const Polynomial& p, double tol, int max_iter) {
  const int n = p.degree();
  if (n < 1) throw DegreeTooSmall("root finding needs degree >= 1");
  Eigen::VectorXcd monic(n + 1);
  const Rational lead = p.leading();
  for (int k = 0; k <= n; ++k) monic[k] = (p[static_cast<std::size_t>(k)] / lead).to_double();

  auto eval = [&](Complex z) {
    Complex acc = 0.0;
    for (int k = n; k >= 0; --k) acc = acc * z + monic[k];
    return acc;
  };

  Eigen::VectorXcd z(n);
  const Complex seed(0.4, 0.9);
  Complex power = seed;
  for (int k = 0; k < n; ++k, power *= seed) z[k] = power;

  RootSet out;
  for (int iter = 0; iter < max_iter && !out.converged; ++iter) {
    bool small = true;
    for (int i = 0; i < n; ++i) {
      Complex denom = 1.0;
      for (int j = 0; j < n; ++j) {
        if (j != i) denom *= z[i] - z[j];
      }
      // Coincident estimates: nudge instead of dividing by zero.
      if (denom == Complex(0.0)) denom = Complex(tol, tol);
      const Complex step = eval(z[i]) / denom;
      z[i] -= step;
      if (!(std::abs(step) < tol * (1.0 + std::abs(z[i])))) small = false;
    }
    out.converged = small;
  }

  symmetrise(z);
  std::vector<Complex> sorted(z.begin(), z.end());
  std::sort(sorted.begin(), sorted.end(), [](const Complex& a, const Complex& b) {
    return a.real() != b.real() ? a.real() < b.real() : a.imag() < b.imag();
  });
  out.roots = Eigen::Map<Eigen::VectorXcd>(sorted.data(), n);
  for (int i = 0; i < n; ++i) out.max_residual = std::max(out.max_residual, std::abs(eval(out.roots[i])));
  return out;
}

HalfPlaneCounts half_plane_counts(const RootSet& r, double delta) {
  HalfPlaneCounts c;
  c.delta = delta;
  for (const Complex& z : r.roots) {
    const double bound = delta * std::max(1.0, std::abs(z));
    if (z.real() > bound) {
      ++c.rhp;
    } else if (z.real() < -bound) {
      ++c.lhp;
    } else {
      ++c.axis;
    }
  }
  return c;
}

}  // namespace routh
