// routh: command-line front end for the Routh array analysis library.
//
//   routh analyze --coeffs "1,0,0,0,1" --policy eps-row [--oracle] [--json]
//   routh compare --coeffs "1,0,-7,-6" [--json]
//   routh corpus  --count 1000 --max-degree 8 --seed 42 [--json]
//   routh sweep   --coeffs "1,3,3,K" --range 0:12 --steps 1200 [--json]
//
// Exit codes: 0 Stable, 1 Unstable, 2 Marginal/Undetermined, 64 usage,
// 65 data error.

#include <cstdint>
#include <iostream>
#include <string>

#include "CLI11.hpp"
#include "routh/document.hpp"
#include "routh/error.hpp"

namespace {

constexpr int kExitUsage = 64;
constexpr int kExitData = 65;

int exit_code(routh::Verdict v) {
  switch (v) {
    case routh::Verdict::Stable: return 0;
    case routh::Verdict::Unstable: return 1;
    default: return 2;
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Routh array stability analysis with exact e-arithmetic"};
  app.require_subcommand(1);
  app.set_version_flag("--version", routh::kVersion);

  bool json = false;
  std::string coeffs;
  std::string policy_name = "auto";
  bool oracle = false;

  auto* analyze = app.add_subcommand("analyze", "Build the Routh array and classify one polynomial");
  analyze->add_option("--coeffs", coeffs, "Descending coefficients or sparse terms over s")->required();
  analyze->add_option("--policy", policy_name, "Degenerate-case policy")
      ->check(CLI::IsMember({"auto", "single-eps", "eps-row", "derivative"}));
  analyze->add_flag("--oracle", oracle, "Cross-check with numerical roots");
  analyze->add_flag("--json", json, "Machine-readable output");

  auto* compare = app.add_subcommand("compare", "Run every policy side by side against the root oracle");
  compare->add_option("--coeffs", coeffs, "Descending coefficients or sparse terms over s")->required();
  compare->add_flag("--json", json, "Machine-readable output");

  routh::CorpusOptions corpus_options;
  auto* corpus = app.add_subcommand("corpus", "Differential check on seeded random polynomials");
  corpus->add_option("--count", corpus_options.count, "Number of polynomials")->check(CLI::PositiveNumber);
  corpus->add_option("--max-degree", corpus_options.max_degree, "Largest degree")->check(CLI::Range(2, 12));
  corpus->add_option("--min-degree", corpus_options.min_degree, "Smallest degree")->check(CLI::Range(1, 12));
  corpus->add_option("--seed", corpus_options.seed, "Generator seed");
  corpus->add_flag("--stable-only", corpus_options.stable_only, "Draw only left half-plane roots");
  corpus->add_option("--threads", corpus_options.threads, "Worker threads (0 = all cores)");
  corpus->add_flag("--json", json, "Machine-readable output");

  std::string range = "0:1";
  int steps = 100;
  bool samples = false;
  auto* sweep = app.add_subcommand("sweep", "Scan one coefficient K for stable intervals");
  sweep->add_option("--coeffs", coeffs, "Descending coefficients, exactly one being K")->required();
  sweep->add_option("--range", range, "lo:hi (use --range=-1:1 for a negative lo)");
  sweep->add_option("--steps", steps, "Number of samples")->check(CLI::Range(2, 10000000));
  sweep->add_flag("--samples", samples, "List every sample verdict");
  sweep->add_flag("--json", json, "Machine-readable output");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : kExitUsage;
  }

  try {
    if (analyze->parsed()) {
      const routh::Policy policy = routh::parse_policy(policy_name);
      const auto report = routh::classify(routh::parse_poly(coeffs), policy, oracle);
      std::cout << (json ? routh::serialize(routh::analysis_document(report, policy))
                         : routh::analysis_text(report, policy));
      return exit_code(report.verdict);
    }
    if (compare->parsed()) {
      const auto cmp = routh::compare_policies(routh::parse_poly(coeffs));
      std::cout << (json ? routh::serialize(routh::comparison_document(cmp)) : routh::comparison_text(cmp));
      return 0;
    }
    if (corpus->parsed()) {
      if (corpus_options.min_degree > corpus_options.max_degree) {
        std::cerr << "error: --min-degree exceeds --max-degree\n";
        return kExitUsage;
      }
      const auto summary = routh::run_corpus(corpus_options);
      std::cout << (json ? routh::serialize(routh::corpus_document(summary)) : routh::corpus_text(summary));
      return summary.agreements == static_cast<int>(summary.cases.size()) ? 0 : 1;
    }
    if (sweep->parsed()) {
      const auto param = routh::ParametricPolynomial::parse(coeffs);
      const auto [lo, hi] = routh::parse_range(range);
      const auto result = routh::sweep(param, lo, hi, steps);
      std::cout << (json ? routh::serialize(routh::sweep_document(result, samples))
                         : routh::sweep_text(result, samples));
      return 0;
    }
  } catch (const routh::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return e.is_usage() ? kExitUsage : kExitData;
  }
  return kExitUsage;
}
