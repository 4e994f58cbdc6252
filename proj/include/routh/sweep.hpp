#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "routh/polynomial.hpp"
#include "routh/routh_array.hpp"

namespace routh {

/// Descending coefficient list in which exactly one position is the literal
/// `K`.
class ParametricPolynomial {
 public:
  /// Throws NoParameter, MultipleParameters or ParseError.
  static ParametricPolynomial parse(std::string_view text);
  Polynomial at(const Rational& k) const;

 private:
  std::vector<std::optional<Rational>> descending_;
};

struct SweepSample {
  Rational value;
  Verdict verdict;
};

struct SweepResult {
  std::string parameter = "K";
  Rational lo;
  Rational hi;
  int steps = 0;
  /// Maximal runs of consecutive Stable samples, (first, last) sample values.
  std::vector<std::pair<Rational, Rational>> intervals;
  std::vector<SweepSample> samples;
};

/// "lo:hi" with each side an integer, fraction or decimal.
std::pair<Rational, Rational> parse_range(std::string_view text);

/// Classifies `steps` uniform samples lo + i (hi - lo) / (steps - 1) with
/// the Auto policy. A sample that cannot be analysed is Undetermined.
SweepResult sweep(const ParametricPolynomial& p, const Rational& lo, const Rational& hi, int steps);

}  // namespace routh
