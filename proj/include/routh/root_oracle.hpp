#pragma once

#include <Eigen/Dense>

#include "routh/polynomial.hpp"

namespace routh {

struct RootSet {
  /// Sorted by (re, im); conjugate pairs are symmetrised.
  Eigen::VectorXcd roots;
  /// Largest |p(root)| for the monic-normalised polynomial.
  double max_residual = 0.0;
  bool converged = false;
};

struct HalfPlaneCounts {
  int lhp = 0;
  int rhp = 0;
  int axis = 0;
  double delta = 0.0;
  friend bool operator==(const HalfPlaneCounts&, const HalfPlaneCounts&) = default;
};

/// Simultaneous (Weierstrass / Durand-Kerner) iteration on the monic
/// polynomial, starting from (0.4 + 0.9i)^k, k = 1..n. Stops when the
/// largest step is below tol * (1 + |z|). Throws DegreeTooSmall for n < 1.
RootSet find_roots(const Polynomial& p, double tol = 1e-13, int max_iter = 1000);

/// A root is RHP when re > delta * max(1, |root|), LHP when re < -that,
/// on the axis otherwise.
HalfPlaneCounts half_plane_counts(const RootSet& r, double delta = 1e-8);

}  // namespace routh
