#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "tgs/analysis.hpp"
#include "tgs/enumerate.hpp"
#include "tgs/options.hpp"
#include "tgs/structure.hpp"

namespace tgs {

/// Published counts for one order (one parameter), kept for side-by-side comparison.
struct ReferenceRow {
  int order = 0;
  int structures = 0;
  int simple = 0;
  int semisimple = 0;
  std::string spec;
};

std::optional<ReferenceRow> reference_row(int order, int gamma);

/// Isomorphism-invariant numbers for one structure.
struct StructureSummary {
  std::string id;
  int order = 0;
  bool additive_group = false;
  int ideals = 0;
  int primes = 0;
  int semiprimes = 0;
  int maximals = 0;
  int primaries = 0;
  int jacobson_size = 0;
  int idempotents = 0;
  bool simple = false;
  bool semisimple = false;
  int spec_points = 0;
  int components = 0;
  int congruences = -1;  // -1 when not scanned
  int collisions = -1;

  friend bool operator==(const StructureSummary&, const StructureSummary&) = default;
};

StructureSummary summarize(const GammaStructure& s, const AnalysisOptions& options = {});
ReportJson summary_json(const StructureSummary& s);

/// "1-point", "2-point", "0-2 points": the range of Spec sizes over a corpus.
std::string spec_range(const std::vector<StructureSummary>& summaries);

struct Comparison {
  ReferenceRow reference;
  int structures = 0;
  int simple = 0;
  int semisimple = 0;
  std::string spec;
  bool structures_match = false;
  bool simple_match = false;
  bool semisimple_match = false;
  bool spec_match = false;
};

struct ClassifyOptions {
  int jobs = 1;
  EnumerationLimits limits = EnumerationLimits::from_environment();
  AnalysisOptions analysis;
};

struct ClassificationReport {
  int order = 0;
  int gamma = 0;
  std::size_t additive_monoids = 0;
  std::size_t before_dedup = 0;
  std::size_t non_isomorphic = 0;
  /// Canonical representatives sorted by canonical form, with their summaries.
  std::vector<GammaStructure> representatives;
  std::vector<StructureSummary> summaries;
  std::optional<Comparison> comparison;
  bool partial = false;
  std::string partial_reason;

  ReportJson to_json() const;
  std::string to_text() const;
};

/// Enumerate, deduplicate by canonical form and summarize. A resource cap
/// yields a report marked partial rather than an exception.
ClassificationReport classify(int order, int gamma, const ClassifyOptions& options = {});

/// Writes sNNN.json per representative plus report.json and report.txt.
void write_classification(const ClassificationReport& report, const std::filesystem::path& out_dir);

}  // namespace tgs
