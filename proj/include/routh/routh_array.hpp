#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "routh/eps.hpp"
#include "routh/polynomial.hpp"
#include "routh/root_oracle.hpp"

namespace routh {

/// How degenerate rows are repaired while the array is built.
///
/// Every policy replaces a zero leading entry of a non-zero row with e.
/// They differ on a row that vanishes entirely:
///  - SingleEpsilon gives up (PolicyUnsupported);
///  - EpsilonRow replaces every entry of the row with e;
///  - DerivativeRow substitutes the coefficients of the derivative of the
///    auxiliary polynomial built from the row above.
/// Auto behaves as DerivativeRow.
enum class Policy { SingleEpsilon, EpsilonRow, DerivativeRow, Auto };

std::string_view to_string(Policy policy);
/// Accepts the CLI names auto | single-eps | eps-row | derivative.
Policy parse_policy(std::string_view name);

enum class EventKind { ZeroFirstElement, ZeroRow, LeadingSignFlip, OriginRootsStripped };

std::string_view to_string(EventKind kind);

struct SpecialEvent {
  EventKind kind;
  /// Power label of the affected row; empty for polynomial-level events.
  std::optional<int> row_power;
  std::string remedy;
  friend bool operator==(const SpecialEvent&, const SpecialEvent&) = default;
};

using RouthRow = std::vector<EpsRat>;

struct RouthArray {
  int degree = 0;
  /// rows[i] is the row for power degree - i.
  std::vector<RouthRow> rows;
  std::vector<SpecialEvent> events;
  Policy policy = Policy::Auto;

  int power_of(std::size_t row_index) const { return degree - static_cast<int>(row_index); }
};

enum class Verdict { Stable, Unstable, MarginalOrSymmetric, Undetermined };

std::string_view to_string(Verdict verdict);

struct OracleSummary {
  RootSet roots;
  HalfPlaneCounts counts;
  /// Routh rhp_count equals the oracle's rhp count.
  bool agreement = false;
};

struct StabilityReport {
  Polynomial input;
  RouthArray array;
  /// +1 / -1 per row, top to bottom.
  std::vector<int> first_column_signs;
  int sign_changes = 0;
  int rhp_count = 0;
  Verdict verdict = Verdict::Undetermined;
  std::vector<SpecialEvent> events;
  std::optional<OracleSummary> oracle_check;
};

/// Builds the array for p (degree >= 1, p(0) != 0, positive leading
/// coefficient). Row p holds floor(p/2) + 1 entries; entries of later rows
/// follow r[i][j] = (r[i-1][0] r[i-2][j+1] - r[i-2][0] r[i-1][j+1]) / r[i-1][0].
/// Each row is checked for a full zero row first, then for a zero leading
/// entry, and repaired before the next row is computed.
///
/// Throws DegreeTooSmall, OriginRoot, NegativeLeadingCoefficient,
/// PolicyUnsupported and EpsContaminatedRow.
RouthArray build_array(const Polynomial& p, Policy policy);

struct SignSequence {
  std::vector<int> signs;
  int changes = 0;
};

SignSequence count_sign_changes(const RouthArray& a);

/// A(s) = sum_j row[j] s^(power - 2j). Throws EpsContaminatedRow when an
/// entry depends on e.
Polynomial auxiliary_polynomial(const RouthRow& row, int power);

/// Strips origin roots, flips a negative leading coefficient, builds the
/// array, counts sign changes and, with `with_oracle`, attaches the
/// numerical root counts. Errors from build_array propagate.
StabilityReport classify(const Polynomial& p, Policy policy, bool with_oracle = false);

/// Verdict from the sign changes and the events recorded.
Verdict verdict_for(int sign_changes, const std::vector<SpecialEvent>& events);

}  // namespace routh
