#pragma once

#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "tgs/check.hpp"
#include "tgs/element_set.hpp"
#include "tgs/options.hpp"
#include "tgs/structure.hpp"
#include "tgs/verdict.hpp"

namespace tgs {

/// Bumped on any change to the field layout of analysis or classification JSON.
inline constexpr int kReportSchemaVersion = 1;

using ReportJson = nlohmann::ordered_json;

struct AnalysisRequest {
  AnalysisOptions options;
  bool theorems = true;
  /// Largest module carrier tried by the primitive-ideal search (capped at |T|).
  int primitive_carrier_cap = 3;
};

struct AnalysisReport {
  ReportJson json;
  bool axioms_pass = false;
  bool asserted_hold = true;
  std::vector<CheckResult> checks;
};

/// Axioms, ideal lattice, radicals, congruences, spectrum, decompositions,
/// CRT families, modules and the theorem suite. Stops after the axiom
/// section when the axioms fail.
AnalysisReport analyze(const GammaStructure& s, const AnalysisRequest& request = {});

/// Plain-text rendering of an analysis report.
std::string analysis_text(const AnalysisReport& report);

ReportJson witness_json(const Witness& w);
ReportJson verdict_json(const Verdict& v);
ReportJson check_json(const CheckResult& c);
ReportJson set_json(const GammaStructure& s, ElementSet set);
ReportJson options_json(const AnalysisOptions& options);

/// Fixed-width ASCII table.
std::string ascii_table(const std::vector<std::string>& header, const std::vector<std::vector<std::string>>& rows);

}  // namespace tgs
