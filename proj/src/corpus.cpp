#include "routh/differential.hpp"

#include <algorithm>
#include <thread>

#include "routh/error.hpp"

namespace routh {

namespace {

constexpr std::uint32_t kGridSteps = 20;  // quarters up to 5
constexpr double kGridUnit = 0.25;

double signed_grid_value(CorpusRng& rng, bool force_negative) {
  const double magnitude = kGridUnit * (1 + rng.below(kGridSteps));
  const bool negative = force_negative || rng.below(2) == 0;
  return negative ? -magnitude : magnitude;
}

void analyse(CorpusCase& c) {
  try {
    c.report = classify(c.polynomial, Policy::Auto, true);
    c.agreement = c.report->oracle_check->agreement && c.report->rhp_count == c.constructed_rhp;
  } catch (const Error& e) {
    c.error = e.what();
    c.agreement = false;
  }
}

}  // namespace

std::vector<Complex> random_roots(CorpusRng& rng, int degree, bool stable_only) {
  std::vector<Complex> roots;
  while (static_cast<int>(roots.size()) < degree) {
    const int remaining = degree - static_cast<int>(roots.size());
    if (remaining >= 2 && rng.below(2) == 1) {
      while (true) {
        const double re = signed_grid_value(rng, stable_only);
        const double im = kGridUnit * (1 + rng.below(kGridSteps));
        if (re * re + im * im <= 25.0) {
          roots.emplace_back(re, im);
          roots.emplace_back(re, -im);
          break;
        }
      }
    } else {
      roots.emplace_back(signed_grid_value(rng, stable_only), 0.0);
    }
  }
  return roots;
}

std::vector<const CorpusCase*> CorpusSummary::disagreements() const {
  std::vector<const CorpusCase*> out;
  for (const auto& c : cases) {
    if (!c.agreement) out.push_back(&c);
  }
  return out;
}

CorpusSummary run_corpus(const CorpusOptions& options) {
  if (options.count < 1) throw InvalidArgument("corpus count must be >= 1");
  if (options.min_degree < 1 || options.max_degree > 12 || options.min_degree > options.max_degree) {
    throw InvalidArgument("corpus degrees must satisfy 1 <= min <= max <= 12");
  }
  CorpusSummary summary;
  summary.options = options;
  summary.cases.resize(static_cast<std::size_t>(options.count));

  CorpusRng rng(options.seed);
  const auto span = static_cast<std::uint32_t>(options.max_degree - options.min_degree + 1);
  for (std::size_t i = 0; i < summary.cases.size(); ++i) {
    CorpusCase& c = summary.cases[i];
    c.index = i;
    const int degree = options.min_degree + static_cast<int>(rng.below(span));
    c.roots = random_roots(rng, degree, options.stable_only);
    c.polynomial = from_roots(c.roots);
    c.constructed_rhp = static_cast<int>(
        std::count_if(c.roots.begin(), c.roots.end(), [](const Complex& z) { return z.real() > 0; }));
  }

  unsigned threads = options.threads ? options.threads : std::max(1u, std::thread::hardware_concurrency());
  threads = std::min<unsigned>(threads, static_cast<unsigned>(summary.cases.size()));
  if (threads <= 1) {
    for (auto& c : summary.cases) analyse(c);
  } else {
    std::vector<std::jthread> pool;
    for (unsigned t = 0; t < threads; ++t) {
      pool.emplace_back([&summary, t, threads] {
        for (std::size_t i = t; i < summary.cases.size(); i += threads) analyse(summary.cases[i]);
      });
    }
  }

  for (const auto& c : summary.cases) {
    if (c.agreement) ++summary.agreements;
    if (!c.report) continue;
    ++summary.verdicts[c.report->verdict];
    if (!c.report->events.empty()) ++summary.cases_with_events;
    for (const auto& e : c.report->events) ++summary.event_counts[e.kind];
  }
  return summary;
}

Comparison compare_policies(const Polynomial& p) {
  if (p.degree() < 1) throw DegreeTooSmall("comparison needs degree >= 1");
  Comparison cmp;
  cmp.input = p;
  for (Policy policy : {Policy::SingleEpsilon, Policy::EpsilonRow, Policy::DerivativeRow}) {
    PolicyOutcome o{policy, std::nullopt, {}};
    try {
      o.report = classify(p, policy, false);
    } catch (const PolicyUnsupported& e) {
      o.error = std::string("PolicyUnsupported: ") + e.what();
    } catch (const EpsContaminatedRow& e) {
      o.error = std::string("EpsContaminatedRow: ") + e.what();
    }
    cmp.outcomes.push_back(std::move(o));
  }
  cmp.roots = find_roots(p);
  cmp.counts = half_plane_counts(cmp.roots);
  return cmp;
}

}  // namespace routh
