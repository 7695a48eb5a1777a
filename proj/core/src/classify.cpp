#include "tgs/classify.hpp"

#include <algorithm>
#include <cstdio>
#include <map>
#include <sstream>

#include "tgs/canonical.hpp"
#include "tgs/congruence.hpp"
#include "tgs/decomposition.hpp"
#include "tgs/errors.hpp"
#include "tgs/ideals.hpp"
#include "tgs/json_io.hpp"
#include "tgs/parallel.hpp"
#include "tgs/radicals.hpp"
#include "tgs/spectrum.hpp"

namespace tgs {

std::optional<ReferenceRow> reference_row(int order, int gamma) {
  if (gamma != 1) return std::nullopt;
  switch (order) {
    case 2: return ReferenceRow{2, 1, 1, 1, "1-point"};
    case 3: return ReferenceRow{3, 3, 1, 2, "2-point"};
    case 4: return ReferenceRow{4, 6, 2, 4, "up to 3-points"};
    default: return std::nullopt;
  }
}

StructureSummary summarize(const GammaStructure& s, const AnalysisOptions& options) {
  StructureSummary r;
  r.id = canonical_form(s, {options.gamma_relabeling}).hash_hex();
  r.order = s.order();
  r.additive_group = s.is_additive_group();
  const auto lattice = ideal_lattice(s, options);
  r.ideals = static_cast<int>(lattice.ideals.size());
  for (const auto& t : lattice.tags) {
    r.primes += t.prime;
    r.semiprimes += t.semiprime;
    r.maximals += t.maximal;
    r.primaries += t.primary;
  }
  r.jacobson_size = jacobson_radical(s).size();
  r.idempotents = find_idempotents(s).size();
  r.simple = is_simple(s);
  r.semisimple = is_semisimple(s);
  r.spec_points = r.primes;
  r.components = connected_components(s).component_count;
  if (const auto census = congruence_census(s, 0); census.computed) {
    r.congruences = static_cast<int>(census.congruences);
    r.collisions = static_cast<int>(census.collisions);
  }
  return r;
}

ReportJson summary_json(const StructureSummary& s) {
  ReportJson j;
  j["id"] = s.id;
  j["order"] = s.order;
  j["additive_group"] = s.additive_group;
  j["ideals"] = s.ideals;
  j["primes"] = s.primes;
  j["semiprimes"] = s.semiprimes;
  j["maximals"] = s.maximals;
  j["primaries"] = s.primaries;
  j["jacobson_size"] = s.jacobson_size;
  j["idempotents"] = s.idempotents;
  j["simple"] = s.simple;
  j["semisimple"] = s.semisimple;
  j["spec_points"] = s.spec_points;
  j["components"] = s.components;
  j["congruences"] = s.congruences;
  j["collisions"] = s.collisions;
  return j;
}

std::string spec_range(const std::vector<StructureSummary>& summaries) {
  if (summaries.empty()) return "none";
  const auto [lo, hi] = std::minmax_element(summaries.begin(), summaries.end(),
                                            [](const auto& a, const auto& b) { return a.spec_points < b.spec_points; });
  if (lo->spec_points == hi->spec_points) return std::to_string(lo->spec_points) + "-point";
  return std::to_string(lo->spec_points) + "-" + std::to_string(hi->spec_points) + " points";
}

ClassificationReport classify(int order, int gamma, const ClassifyOptions& options) {
  ClassificationReport r;
  r.order = order;
  r.gamma = gamma;
  EnumerationResult found;
  try {
    found = enumerate_structures(order, gamma, {options.jobs, options.limits});
  } catch (const ResourceError& e) {
    r.partial = true;
    r.partial_reason = e.what();
    if (!e.progress().empty()) r.partial_reason += " (" + e.progress() + ")";
    return r;
  }
  r.additive_monoids = found.additive_monoids;
  r.before_dedup = found.structures.size();

  const CanonicalOptions copt{options.analysis.gamma_relabeling};
  std::vector<std::string> forms(found.structures.size());
  parallel_for(found.structures.size(), options.jobs,
               [&](std::size_t i) { forms[i] = canonical_form(found.structures[i], copt).bytes; });
  std::map<std::string, std::size_t> first;
  for (std::size_t i = 0; i < forms.size(); ++i) first.emplace(forms[i], i);
  for (const auto& [form, i] : first) r.representatives.push_back(canonical_representative(found.structures[i], copt));
  r.non_isomorphic = r.representatives.size();

  r.summaries.resize(r.representatives.size());
  parallel_for(r.representatives.size(), options.jobs,
               [&](std::size_t i) { r.summaries[i] = summarize(r.representatives[i], options.analysis); });

  if (auto ref = reference_row(order, gamma)) {
    Comparison c;
    c.reference = *ref;
    c.structures = static_cast<int>(r.non_isomorphic);
    for (const auto& s : r.summaries) {
      c.simple += s.simple;
      c.semisimple += s.semisimple;
    }
    c.spec = spec_range(r.summaries);
    c.structures_match = c.structures == ref->structures;
    c.simple_match = c.simple == ref->simple;
    c.semisimple_match = c.semisimple == ref->semisimple;
    c.spec_match = c.spec == ref->spec;
    r.comparison = c;
  }
  return r;
}

ReportJson ClassificationReport::to_json() const {
  ReportJson j;
  j["schema_version"] = kReportSchemaVersion;
  j["order"] = order;
  j["gamma"] = gamma;
  j["partial"] = partial;
  if (partial) j["partial_reason"] = partial_reason;
  j["additive_monoids"] = additive_monoids;
  j["structures_before_dedup"] = before_dedup;
  j["structures_non_isomorphic"] = non_isomorphic;
  ReportJson list = ReportJson::array();
  for (std::size_t i = 0; i < summaries.size(); ++i) {
    ReportJson x = summary_json(summaries[i]);
    char name[32];
    std::snprintf(name, sizeof name, "s%03zu.json", i);
    x["file"] = name;
    list.push_back(x);
  }
  j["structures"] = list;
  if (comparison) {
    const auto& c = *comparison;
    auto column = [](const auto& published, const auto& computed, bool match) {
      ReportJson x;
      x["published"] = published;
      x["computed"] = computed;
      x["match"] = match;
      return x;
    };
    ReportJson cj;
    cj["structures"] = column(c.reference.structures, c.structures, c.structures_match);
    cj["simple"] = column(c.reference.simple, c.simple, c.simple_match);
    cj["semisimple"] = column(c.reference.semisimple, c.semisimple, c.semisimple_match);
    cj["spec"] = column(c.reference.spec, c.spec, c.spec_match);
    j["comparison"] = cj;
  } else {
    j["comparison"] = nullptr;
  }
  return j;
}

std::string ClassificationReport::to_text() const {
  std::ostringstream out;
  out << "order " << order << ", gamma " << gamma << (partial ? "  PARTIAL: " + partial_reason : "") << "\n"
      << "additive monoids " << additive_monoids << ", structures before dedup " << before_dedup
      << ", non-isomorphic " << non_isomorphic << "\n\n";
  if (comparison) {
    const auto& c = *comparison;
    auto flag = [](bool m) { return std::string(m ? "match" : "MISMATCH"); };
    out << ascii_table({"column", "published", "computed", "flag"},
                       {{"structures", std::to_string(c.reference.structures), std::to_string(c.structures),
                         flag(c.structures_match)},
                        {"simple", std::to_string(c.reference.simple), std::to_string(c.simple), flag(c.simple_match)},
                        {"semisimple", std::to_string(c.reference.semisimple), std::to_string(c.semisimple),
                         flag(c.semisimple_match)},
                        {"Spec", c.reference.spec, c.spec, flag(c.spec_match)}})
        << "\n";
  }
  std::vector<std::vector<std::string>> rows;
  for (std::size_t i = 0; i < summaries.size(); ++i) {
    const auto& s = summaries[i];
    rows.push_back({std::to_string(i), s.id, s.additive_group ? "group" : "monoid", std::to_string(s.ideals),
                    std::to_string(s.primes), std::to_string(s.semiprimes), std::to_string(s.maximals),
                    std::to_string(s.jacobson_size), std::to_string(s.idempotents), s.simple ? "yes" : "-",
                    s.semisimple ? "yes" : "-", std::to_string(s.components), std::to_string(s.congruences),
                    std::to_string(s.collisions)});
  }
  out << ascii_table({"#", "id", "addition", "ideals", "primes", "semiprimes", "maximals", "|J|", "idempotents",
                      "simple", "semisimple", "components", "congruences", "collisions"},
                     rows);
  return out.str();
}

void write_classification(const ClassificationReport& report, const std::filesystem::path& out_dir) {
  std::error_code ec;
  std::filesystem::create_directories(out_dir, ec);
  if (ec) throw IoError("cannot create " + out_dir.string() + ": " + ec.message());
  for (std::size_t i = 0; i < report.representatives.size(); ++i) {
    char name[32];
    std::snprintf(name, sizeof name, "s%03zu.json", i);
    save_structure(report.representatives[i], out_dir / name);
  }
  write_text_file(out_dir / "report.json", report.to_json().dump(2) + "\n");
  write_text_file(out_dir / "report.txt", report.to_text());
}

}  // namespace tgs
