// Acceptance suite: one PASS/FAIL line per criterion, non-zero exit if any
// criterion fails.

#include <sys/wait.h>

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <fstream>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "routh/differential.hpp"
#include "routh/document.hpp"
#include "routh/eps.hpp"
#include "routh/hurwitz.hpp"
#include "routh/root_oracle.hpp"
#include "routh/routh_array.hpp"
#include "routh/sweep.hpp"

using namespace routh;

namespace {

using Clock = std::chrono::steady_clock;

struct Outcome {
  bool pass = true;
  std::string detail;
  void require(bool ok, const std::string& what) {
    if (!ok) {
      pass = false;
      if (!detail.empty()) detail += "; ";
      detail += what;
    }
  }
};

double millis_since(Clock::time_point t0) {
  return std::chrono::duration<double, std::milli>(Clock::now() - t0).count();
}

std::string run_cli(const std::string& args, int* code = nullptr) {
  const std::string cmd = std::string(ROUTH_CLI_PATH) + " " + args;
  FILE* pipe = popen(cmd.c_str(), "r");
  std::string out;
  if (!pipe) return out;
  char buf[4096];
  while (std::size_t n = fread(buf, 1, sizeof buf, pipe)) out.append(buf, n);
  const int status = pclose(pipe);
  if (code) *code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return out;
}

const Polynomial kQuartic{1, 0, 0, 0, 1};

// Shared between criteria 4 and 6.
CorpusSummary& differential_corpus() {
  static CorpusSummary summary = [] {
    CorpusOptions opt;
    opt.count = 1000;
    opt.min_degree = 2;
    opt.max_degree = 8;
    opt.seed = 42;
    return run_corpus(opt);
  }();
  return summary;
}

Outcome quartic_eps_row() {
  Outcome o;
  const auto t0 = Clock::now();
  const StabilityReport r = classify(kQuartic, Policy::EpsilonRow);
  const Document doc = analysis_document(r, Policy::EpsilonRow);
  const double ms = millis_since(t0);
  o.require(r.first_column_signs == std::vector<int>{1, 1, -1, 1, 1}, "signs");
  o.require(r.sign_changes == 2, "sign_changes");
  o.require(r.rhp_count == 2, "rhp_count");
  o.require(r.verdict == Verdict::Unstable, "verdict");
  o.require(r.events.size() == 1 && r.events[0].kind == EventKind::ZeroRow && r.events[0].row_power == 3,
            "events");
  const EpsRat e = EpsRat::epsilon();
  const std::vector<EpsRat> first_column{1, e, -1, 2 * e, 1};
  for (std::size_t i = 0; i < first_column.size(); ++i) {
    o.require(r.array.rows[i].front() == first_column[i], "first column entry " + std::to_string(i));
  }
  o.require(ms < 10.0, "runtime " + std::to_string(ms) + " ms");

  int code = -1;
  const Document cli = Document::parse(run_cli("analyze --coeffs \"1,0,0,0,1\" --policy eps-row --json", &code));
  o.require(code == 1, "cli exit code");
  o.require(cli["signs"] == Document({"+", "+", "-", "+", "+"}) && cli["sign_changes"] == 2 &&
                cli["rhp_count"] == 2 && cli["verdict"] == "Unstable" && cli["events"].size() == 1 &&
                cli["events"][0]["row_power"] == 3,
            "cli document");
  if (o.pass) o.detail = "signs + + - + +, 2 changes, ZeroRow at s^3, " + std::to_string(ms) + " ms";
  return o;
}

Outcome quartic_derivative() {
  Outcome o;
  const StabilityReport r = classify(kQuartic, Policy::DerivativeRow);
  o.require(r.sign_changes == 2, "sign_changes");
  o.require(r.first_column_signs == std::vector<int>{1, 1, 1, -1, 1}, "signs");
  int code = -1;
  const Document cli = Document::parse(run_cli("analyze --coeffs \"1,0,0,0,1\" --policy derivative --json", &code));
  o.require(cli["sign_changes"] == 2 && code == 1, "cli");
  o.require(classify(kQuartic, Policy::EpsilonRow).sign_changes == r.sign_changes, "policies disagree");
  if (o.pass) o.detail = "derivative and eps-row both give 2";
  return o;
}

Outcome quartic_roots() {
  Outcome o;
  const RootSet r = find_roots(kQuartic);
  const double v = 0.707106781186547524;
  const Complex expected[] = {{-v, -v}, {-v, v}, {v, -v}, {v, v}};
  o.require(r.roots.size() == 4, "root count");
  double worst = 0.0;
  for (int i = 0; i < 4 && r.roots.size() == 4; ++i) worst = std::max(worst, std::abs(r.roots[i] - expected[i]));
  o.require(worst <= 1e-9, "max root error " + std::to_string(worst));
  const HalfPlaneCounts c = half_plane_counts(r);
  o.require(c.lhp == 2 && c.rhp == 2 && c.axis == 0, "half-plane counts");
  if (o.pass) {
    std::ostringstream os;
    os << "+-0.707106781 +-0.707106781i, max error " << worst << ", counts (2, 2, 0)";
    o.detail = os.str();
  }
  return o;
}

Outcome differential() {
  Outcome o;
  const auto t0 = Clock::now();
  const CorpusSummary& s = differential_corpus();
  const double ms = millis_since(t0);
  int routh_vs_oracle = 0;
  for (const auto& c : s.cases) {
    if (c.report && c.report->rhp_count == c.report->oracle_check->counts.rhp) ++routh_vs_oracle;
  }
  o.require(routh_vs_oracle == 1000, "agreement " + std::to_string(routh_vs_oracle) + "/1000");
  o.require(s.agreements == 1000, "constructed-root agreement " + std::to_string(s.agreements) + "/1000");
  o.require(ms < 30000.0, "runtime " + std::to_string(ms) + " ms");
  if (!o.pass) std::cout << corpus_text(s);
  if (o.pass) {
    o.detail = "1000/1000 agree, " + std::to_string(s.cases_with_events) + " with events, " + std::to_string(ms) +
               " ms";
  }
  return o;
}

Outcome stable_corpus() {
  Outcome o;
  CorpusOptions opt;
  opt.count = 500;
  opt.seed = 2024;
  opt.stable_only = true;
  const CorpusSummary s = run_corpus(opt);
  int good = 0;
  for (const auto& c : s.cases) {
    const bool ok = c.report && c.report->events.empty() && c.report->verdict == Verdict::Stable &&
                    std::all_of(c.report->first_column_signs.begin(), c.report->first_column_signs.end(),
                                [](int x) { return x == 1; });
    if (ok) {
      ++good;
    } else {
      std::cout << "  counterexample: " << render(c.polynomial) << "\n";
    }
  }
  o.require(good == 500, std::to_string(good) + "/500 stable without events");
  if (o.pass) o.detail = "500/500 event-free, all-positive, Stable";
  return o;
}

Rational cofactor_determinant(const ExactMatrix& m) {
  const Eigen::Index n = m.rows();
  if (n == 1) return m(0, 0);
  Rational det(0);
  for (Eigen::Index j = 0; j < n; ++j) {
    ExactMatrix minor(n - 1, n - 1);
    for (Eigen::Index r = 1; r < n; ++r) {
      for (Eigen::Index c = 0, cc = 0; c < n; ++c) {
        if (c != j) minor(r - 1, cc++) = m(r, c);
      }
    }
    const Rational term = m(0, j) * cofactor_determinant(minor);
    det += (j % 2 == 0) ? term : -term;
  }
  return det;
}

Outcome routh_hurwitz() {
  Outcome o;
  int compared = 0, agreed = 0;
  for (const auto& c : differential_corpus().cases) {
    if (!c.report || !c.report->events.empty()) continue;
    ++compared;
    if (hurwitz_stable(c.polynomial).stable == (c.report->sign_changes == 0)) {
      ++agreed;
    } else {
      std::cout << "  counterexample: " << render(c.polynomial) << "\n";
    }
  }
  o.require(compared > 0 && agreed == compared,
            "Hurwitz/Routh " + std::to_string(agreed) + "/" + std::to_string(compared));

  std::mt19937_64 rng(6);
  std::uniform_int_distribution<int> entry(-9, 9);
  int matched = 0;
  for (int trial = 0; trial < 200; ++trial) {
    const Eigen::Index n = 1 + static_cast<Eigen::Index>(trial % 5);
    ExactMatrix m(n, n);
    for (Eigen::Index i = 0; i < n; ++i) {
      for (Eigen::Index j = 0; j < n; ++j) m(i, j) = Rational(entry(rng));
    }
    const auto minors = leading_minors(m);
    bool ok = determinant(m) == cofactor_determinant(m);
    for (Eigen::Index k = 1; k <= n; ++k) ok = ok && minors[k - 1] == cofactor_determinant(m.topLeftCorner(k, k));
    if (ok) ++matched;
  }
  o.require(matched == 200, "Bareiss/cofactor " + std::to_string(matched) + "/200");
  if (o.pass) o.detail = std::to_string(agreed) + "/" + std::to_string(compared) + " event-free agree, 200/200 matrices";
  return o;
}

EpsRat random_eps(std::mt19937_64& rng) {
  std::uniform_int_distribution<int> coef(-5, 5);
  while (true) {
    std::vector<Rational> n(1 + rng() % 4), d(1 + rng() % 3);
    for (auto& c : n) c = Rational(coef(rng), 1 + static_cast<int>(rng() % 4));
    for (auto& c : d) c = Rational(coef(rng));
    EpsPoly den(d);
    if (!den.is_zero()) return EpsRat(EpsPoly(n), den);
  }
}

Rational eval_at(const EpsPoly& p, const Rational& x) {
  Rational acc(0), power(1);
  for (const Rational& c : p.coefficients()) {
    acc += c * power;
    power *= x;
  }
  return acc;
}

Outcome eps_field() {
  Outcome o;
  std::mt19937_64 rng(7);
  int axioms = 0, multiplicative = 0, numeric = 0;
  for (int i = 0; i < 10000; ++i) {
    const EpsRat a = random_eps(rng), b = random_eps(rng), c = random_eps(rng);
    const bool ok = (a + b) + c == a + (b + c) && (a * b) * c == a * (b * c) && a + b == b + a && a * b == b * a &&
                    a * (b + c) == a * b + a * c && a + (-a) == EpsRat() && a + EpsRat() == a &&
                    a * EpsRat(1) == a && (a.is_zero() || a * (EpsRat(1) / a) == EpsRat(1));
    if (ok) ++axioms;
  }
  for (int i = 0; i < 10000; ++i) {
    const EpsRat a = random_eps(rng), b = random_eps(rng);
    if (sign(a * b) == sign(a) * sign(b)) ++multiplicative;
  }
  const Rational tiny(mpz_class(1), mpz_class(1000000000));
  for (int i = 0; i < 10000; ++i) {
    const EpsRat a = random_eps(rng);
    const Rational value = eval_at(a.numerator(), tiny) / eval_at(a.denominator(), tiny);
    if (sign(a) == value.sign()) ++numeric;
  }
  o.require(axioms == 10000, "axioms " + std::to_string(axioms) + "/10000");
  o.require(multiplicative == 10000, "multiplicative " + std::to_string(multiplicative) + "/10000");
  o.require(numeric == 10000, "numeric sign " + std::to_string(numeric) + "/10000");
  if (o.pass) o.detail = "field axioms, multiplicative sign, sign at e = 1e-9: 10000/10000 each";
  return o;
}

Outcome gain_sweep() {
  Outcome o;
  const Rational lo(0), hi(12);
  const SweepResult r = sweep(ParametricPolynomial::parse("1,3,3,K"), lo, hi, 1200);
  const Rational step = (hi - lo) / Rational(1199);
  o.require(r.intervals.size() == 1, std::to_string(r.intervals.size()) + " intervals");
  if (r.intervals.size() == 1) {
    const auto& [a, b] = r.intervals[0];
    o.require(abs(a - Rational(0)) <= step, "lower endpoint " + a.to_string());
    o.require(abs(b - Rational(9)) <= step, "upper endpoint " + b.to_string());
    if (o.pass) o.detail = "(" + format_real(a.to_double()) + ", " + format_real(b.to_double()) + ")";
  }
  return o;
}

Outcome golden_file() {
  Outcome o;
  const std::string args = "analyze --coeffs \"1,0,0,0,1\" --policy eps-row --json";
  const std::string first = run_cli(args);
  const std::string second = run_cli(args);
  std::ifstream in(std::string(ROUTH_GOLDEN_DIR) + "/analyze_quartic_eps_row.json", std::ios::binary);
  std::stringstream golden;
  golden << in.rdbuf();
  o.require(!first.empty(), "no output");
  o.require(first == second, "runs differ");
  o.require(first == golden.str(), "differs from golden file");
  o.require(serialize(analysis_document(classify(kQuartic, Policy::EpsilonRow), Policy::EpsilonRow)) == first,
            "library and CLI documents differ");
  if (o.pass) o.detail = "byte-identical (" + std::to_string(first.size()) + " bytes)";
  return o;
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria{
      {"1 quartic under eps-row", quartic_eps_row},
      {"2 quartic under derivative", quartic_derivative},
      {"3 quartic roots", quartic_roots},
      {"4 differential corpus", differential},
      {"5 stable corpus", stable_corpus},
      {"6 Routh-Hurwitz equivalence", routh_hurwitz},
      {"7 e-field properties", eps_field},
      {"8 gain sweep", gain_sweep},
      {"9 golden document", golden_file},
  };
  int failures = 0;
  for (const auto& [name, check] : criteria) {
    Outcome o;
    try {
      o = check();
    } catch (const std::exception& e) {
      o.pass = false;
      o.detail = std::string("exception: ") + e.what();
    }
    if (!o.pass) ++failures;
    std::cout << (o.pass ? "[PASS] " : "[FAIL] ") << name << ": " << o.detail << std::endl;
  }
  std::cout << (criteria.size() - static_cast<std::size_t>(failures)) << "/" << criteria.size()
            << " acceptance criteria passed" << std::endl;
  return failures == 0 ? 0 : 1;
}
