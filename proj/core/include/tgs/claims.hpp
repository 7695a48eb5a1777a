#pragma once

#include <filesystem>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "tgs/analysis.hpp"
#include "tgs/congruence.hpp"
#include "tgs/options.hpp"

namespace tgs {

/// Claims file:
///   {"title": "...", "structure": {...} or "relative/path.json",
///    "claims": [{"kind": "prime", "set": [0,2], "holds": true, "note": "..."}, ...]}
///
/// Kinds: axioms, ideal, prime, semiprime, maximal, primary (set + holds);
/// radical (set + equals); jacobson (equals); semisimple, simple (holds);
/// spectrum, maximal_ideals, semiprime_ideals (equals: list of sets);
/// components (count); idempotent_count_equals_components (holds);
/// decomposition (idempotent, generated, complement).
struct ClaimOutcome {
  std::string kind;
  std::string subject;
  std::string claimed;
  std::string computed;
  bool agrees = true;
  std::string note;
  /// Replayable evidence for the computed side; nonempty whenever agrees is false.
  std::vector<std::string> witnesses;
};

struct ClaimsReport {
  std::string title;
  std::string structure_id;
  bool axioms_pass = false;
  std::vector<ClaimOutcome> outcomes;
  CongruenceCensus census;

  std::size_t conflicts() const;
  ReportJson to_json() const;
};

bool is_claims_document(const nlohmann::json& j);

ClaimsReport evaluate_claims(const nlohmann::json& doc, const std::filesystem::path& base_dir,
                             const AnalysisOptions& options = {});
ClaimsReport load_claims(const std::filesystem::path& path, const AnalysisOptions& options = {});

std::string claims_text(const ClaimsReport& report);

}  // namespace tgs
