#pragma once

#include <string>

#include "json.hpp"

#include "routh/differential.hpp"
#include "routh/routh_array.hpp"
#include "routh/sweep.hpp"

namespace routh {

inline constexpr const char* kVersion = "0.1.0";

using Document = nlohmann::ordered_json;

/// Decimal string with 12 significant digits; negative zero prints as "0".
std::string format_real(double value);

/// Machine-readable analysis with top-level keys, in order: input, policy,
/// array, events, signs, sign_changes, rhp_count, verdict, oracle, version.
Document analysis_document(const StabilityReport& report, Policy policy);
Document comparison_document(const Comparison& cmp);
Document corpus_document(const CorpusSummary& summary);
Document sweep_document(const SweepResult& result, bool with_samples);

/// Serialised form used for every emitted document (2-space indent,
/// trailing newline).
std::string serialize(const Document& doc);

std::string analysis_text(const StabilityReport& report, Policy policy);
std::string comparison_text(const Comparison& cmp);
std::string corpus_text(const CorpusSummary& summary);
std::string sweep_text(const SweepResult& result, bool with_samples);

}  // namespace routh
