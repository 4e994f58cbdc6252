#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "routh/polynomial.hpp"
#include "routh/routh_array.hpp"

namespace routh {

/// 64-bit linear congruential generator, x <- a*x + c mod 2^64 with
/// a = 6364136223846793005 and c = 1442695040888963407 (Knuth's MMIX
/// constants). Bounded draws use the high 32 bits, so sequences are
/// identical on every platform.
class CorpusRng {
 public:
  explicit CorpusRng(std::uint64_t seed) : engine_(seed) {}
  std::uint64_t next() { return engine_(); }
  /// Uniform-ish integer in [0, n), n <= 2^32.
  std::uint32_t below(std::uint32_t n) {
    return static_cast<std::uint32_t>(((next() >> 32) * static_cast<std::uint64_t>(n)) >> 32);
  }

 private:
  std::linear_congruential_engine<std::uint64_t, 6364136223846793005ULL, 1442695040888963407ULL, 0>
      engine_;
};

struct CorpusOptions {
  int count = 1000;
  int min_degree = 2;
  int max_degree = 8;
  std::uint64_t seed = 42;
  /// Draw every root from the open left half-plane.
  bool stable_only = false;
  /// 0 picks std::thread::hardware_concurrency().
  unsigned threads = 0;
};

/// Roots on the quarter grid: |Re| in {0.25, ..., 5}, |Im| in {0.25, ..., 5},
/// |root| <= 5, conjugate-closed. Exactly representable, so the expanded
/// polynomial is exact.
std::vector<Complex> random_roots(CorpusRng& rng, int degree, bool stable_only);

struct CorpusCase {
  std::size_t index = 0;
  std::vector<Complex> roots;
  Polynomial polynomial;
  /// Roots with Re > 0 by construction.
  int constructed_rhp = 0;
  std::optional<StabilityReport> report;
  std::string error;
  bool agreement = false;
};

struct CorpusSummary {
  CorpusOptions options;
  std::vector<CorpusCase> cases;
  int agreements = 0;
  int cases_with_events = 0;
  std::map<EventKind, int> event_counts;
  std::map<Verdict, int> verdicts;

  std::vector<const CorpusCase*> disagreements() const;
};

/// Generates the polynomials sequentially from the seed, then runs the Auto
/// policy with the oracle on each (possibly on worker threads). Results are
/// stored by sample index.
CorpusSummary run_corpus(const CorpusOptions& options);

struct PolicyOutcome {
  Policy policy;
  std::optional<StabilityReport> report;
  /// Set when the policy could not finish (e.g. PolicyUnsupported).
  std::string error;
  Verdict verdict() const { return report ? report->verdict : Verdict::Undetermined; }
};

struct Comparison {
  Polynomial input;
  std::vector<PolicyOutcome> outcomes;  // single-eps, eps-row, derivative
  RootSet roots;
  HalfPlaneCounts counts;
};

/// Runs every concrete policy side by side against the oracle. Policy
/// failures become Undetermined outcomes rather than exceptions.
Comparison compare_policies(const Polynomial& p);

}  // namespace routh
