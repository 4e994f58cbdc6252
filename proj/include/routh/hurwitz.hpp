#pragma once

#include <vector>

#include <Eigen/Core>

#include "routh/polynomial.hpp"
#include "routh/rational.hpp"

namespace Eigen {

template <>
struct NumTraits<routh::Rational> : GenericNumTraits<routh::Rational> {
  using Real = routh::Rational;
  using NonInteger = routh::Rational;
  using Nested = routh::Rational;
  using Literal = routh::Rational;
  enum {
    IsComplex = 0,
    IsInteger = 0,
    IsSigned = 1,
    RequireInitialization = 1,
    ReadCost = 1,
    AddCost = 3,
    MulCost = 3
  };
  // Exact scalar: no rounding, and stream output prints full precision.
  static inline int digits10() { return 0; }
  static inline int max_digits10() { return 0; }
  static inline routh::Rational epsilon() { return routh::Rational(0); }
  static inline routh::Rational dummy_precision() { return routh::Rational(0); }
};

}  // namespace Eigen

namespace routh {

using ExactMatrix = Eigen::Matrix<Rational, Eigen::Dynamic, Eigen::Dynamic>;

/// n x n Hurwitz matrix, H(i, j) = a_{n - 2j + i} with 1-based i, j and
/// coefficients outside 0..n read as zero. Requires degree >= 1 and a
/// positive leading coefficient.
ExactMatrix hurwitz_matrix(const Polynomial& p);

/// Leading principal minors of a square matrix, k = 1..n, from one
/// fraction-free (Bareiss) elimination over the integers after clearing
/// denominators. A vanishing pivot falls back to pivoted Bareiss on each
/// remaining leading block.
std::vector<Rational> leading_minors(const ExactMatrix& m);

/// Bareiss determinant with row pivoting.
Rational determinant(const ExactMatrix& m);

struct HurwitzDecision {
  bool stable = false;
  std::vector<Rational> minors;
};

/// Stable iff every leading principal minor is positive. Requires a positive
/// leading coefficient and p(0) != 0.
HurwitzDecision hurwitz_stable(const Polynomial& p);

}  // namespace routh
