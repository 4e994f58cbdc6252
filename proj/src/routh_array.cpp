#include "routh/routh_array.hpp"

#include <algorithm>

#include "routh/error.hpp"

namespace routh {

namespace {

EpsRat entry(const RouthRow& row, std::size_t j) { return j < row.size() ? row[j] : EpsRat(); }

std::size_t row_width(int power) { return static_cast<std::size_t>(power / 2 + 1); }

RouthRow next_row(const RouthRow& above2, const RouthRow& above1, int power) {
  const EpsRat& pivot = above1.front();
  RouthRow row(row_width(power));
  for (std::size_t j = 0; j < row.size(); ++j) {
    row[j] = (pivot * entry(above2, j + 1) - above2.front() * entry(above1, j + 1)) / pivot;
  }
  return row;
}

void remediate(RouthArray& a, std::size_t index) {
  RouthRow& row = a.rows[index];
  const int power = a.power_of(index);
  const bool all_zero = std::all_of(row.begin(), row.end(), [](const EpsRat& x) { return x.is_zero(); });
  if (all_zero) {
    switch (a.policy) {
      case Policy::SingleEpsilon:
        throw PolicyUnsupported("row s^" + std::to_string(power) +
                                " vanishes entirely; single-eps handles only a zero leading entry");
      case Policy::EpsilonRow:
        std::fill(row.begin(), row.end(), EpsRat::epsilon());
        a.events.push_back({EventKind::ZeroRow, power, "all entries replaced by e"});
        return;
      case Policy::DerivativeRow:
      case Policy::Auto: {
        const Polynomial aux = auxiliary_polynomial(a.rows[index - 1], power + 1);
        const Polynomial d = derivative(aux);
        for (std::size_t j = 0; j < row.size(); ++j) {
          row[j] = EpsRat(d[static_cast<std::size_t>(power) - 2 * j]);
        }
        a.events.push_back({EventKind::ZeroRow, power,
                            "auxiliary A(s) = " + render(aux) + ", replaced by A'(s) = " + render(d)});
        return;
      }
    }
  }
  if (row.front().is_zero()) {
    row.front() = EpsRat::epsilon();
    a.events.push_back({EventKind::ZeroFirstElement, power, "leading entry replaced by e"});
  }
}

}  // namespace

std::string_view to_string(Policy policy) {
  switch (policy) {
    case Policy::SingleEpsilon: return "single-eps";
    case Policy::EpsilonRow: return "eps-row";
    case Policy::DerivativeRow: return "derivative";
    case Policy::Auto: return "auto";
  }
  return "?";
}

Policy parse_policy(std::string_view name) {
  for (Policy p : {Policy::Auto, Policy::SingleEpsilon, Policy::EpsilonRow, Policy::DerivativeRow}) {
    if (to_string(p) == name) return p;
  }
  throw InvalidArgument("unknown policy '" + std::string(name) + "'");
}

std::string_view to_string(EventKind kind) {
  switch (kind) {
    case EventKind::ZeroFirstElement: return "ZeroFirstElement";
    case EventKind::ZeroRow: return "ZeroRow";
    case EventKind::LeadingSignFlip: return "LeadingSignFlip";
    case EventKind::OriginRootsStripped: return "OriginRootsStripped";
  }
  return "?";
}

std::string_view to_string(Verdict verdict) {
  switch (verdict) {
    case Verdict::Stable: return "Stable";
    case Verdict::Unstable: return "Unstable";
    case Verdict::MarginalOrSymmetric: return "MarginalOrSymmetric";
    case Verdict::Undetermined: return "Undetermined";
  }
  return "?";
}

RouthArray build_array(const Polynomial& p, Policy policy) {
  if (p.degree() < 1) throw DegreeTooSmall("Routh array needs degree >= 1");
  if (p[0].is_zero()) throw OriginRoot("constant term is zero; strip origin roots first");
  if (p.leading().sign() < 0) throw NegativeLeadingCoefficient("leading coefficient must be positive");

  RouthArray a;
  a.degree = p.degree();
  a.policy = policy;
  const auto n = static_cast<std::size_t>(a.degree);
  for (int r = 0; r < 2; ++r) {
    RouthRow row(row_width(a.degree - r));
    for (std::size_t j = 0; j < row.size(); ++j) {
      const std::size_t k = n - static_cast<std::size_t>(r) - 2 * j;
      row[j] = EpsRat(p[k]);
    }
    a.rows.push_back(std::move(row));
  }
  remediate(a, 1);
  for (std::size_t i = 2; i <= n; ++i) {
    a.rows.push_back(next_row(a.rows[i - 2], a.rows[i - 1], a.power_of(i)));
    remediate(a, i);
  }
  return a;
}

SignSequence count_sign_changes(const RouthArray& a) {
  SignSequence s;
  for (const RouthRow& row : a.rows) {
    s.signs.push_back(sign(row.front()));
    if (s.signs.size() > 1 && s.signs.back() != s.signs[s.signs.size() - 2]) ++s.changes;
  }
  return s;
}

Polynomial auxiliary_polynomial(const RouthRow& row, int power) {
  std::vector<Rational> v(static_cast<std::size_t>(power) + 1, Rational(0));
  for (std::size_t j = 0; j < row.size(); ++j) {
    if (!row[j].is_eps_free()) {
      throw EpsContaminatedRow("auxiliary polynomial for row s^" + std::to_string(power) +
                               " would depend on e (entry " + row[j].to_string() + ")");
    }
    const int k = power - 2 * static_cast<int>(j);
    if (k < 0) break;
    v[static_cast<std::size_t>(k)] = std::get<Rational>(limit(row[j]));
  }
  return Polynomial(std::move(v));
}

Verdict verdict_for(int sign_changes, const std::vector<SpecialEvent>& events) {
  if (sign_changes > 0) return Verdict::Unstable;
  const bool symmetric = std::any_of(events.begin(), events.end(), [](const SpecialEvent& e) {
    return e.kind == EventKind::ZeroRow || e.kind == EventKind::OriginRootsStripped;
  });
  return symmetric ? Verdict::MarginalOrSymmetric : Verdict::Stable;
}

StabilityReport classify(const Polynomial& p, Policy policy, bool with_oracle) {
  if (p.is_zero()) throw EmptyPolynomial("polynomial is identically zero");
  if (p.degree() < 1) throw DegreeTooSmall("a constant has no roots to classify");

  StabilityReport report;
  report.input = p;
  auto [origin, q] = strip_origin_roots(p);
  if (origin > 0) {
    report.events.push_back({EventKind::OriginRootsStripped, std::nullopt,
                             "factored out s^" + std::to_string(origin)});
  }
  if (q.leading().sign() < 0) {
    q = -q;
    report.events.push_back({EventKind::LeadingSignFlip, std::nullopt, "polynomial multiplied by -1"});
  }

  if (q.degree() == 0) {
    report.array.degree = 0;
    report.array.policy = policy;
    report.array.rows.push_back({EpsRat(q[0])});
  } else {
    report.array = build_array(q, policy);
  }
  report.events.insert(report.events.end(), report.array.events.begin(), report.array.events.end());

  const SignSequence s = count_sign_changes(report.array);
  report.first_column_signs = s.signs;
  report.sign_changes = s.changes;
  report.rhp_count = s.changes;
  report.verdict = verdict_for(s.changes, report.events);

  if (with_oracle) {
    OracleSummary o;
    o.roots = find_roots(p);
    o.counts = half_plane_counts(o.roots);
    o.agreement = o.counts.rhp == report.rhp_count;
    report.oracle_check = std::move(o);
  }
  return report;
}

}  // namespace routh
