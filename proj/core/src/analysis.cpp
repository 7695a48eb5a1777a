#include "tgs/analysis.hpp"

#include <algorithm>
#include <sstream>

#include "tgs/axioms.hpp"
#include "tgs/canonical.hpp"
#include "tgs/congruence.hpp"
#include "tgs/decomposition.hpp"
#include "tgs/errors.hpp"
#include "tgs/gamma_modules.hpp"
#include "tgs/ideals.hpp"
#include "tgs/radicals.hpp"
#include "tgs/spectrum.hpp"
#include "tgs/theorems.hpp"

namespace tgs {

ReportJson witness_json(const Witness& w) {
  ReportJson j;
  j["law"] = w.law;
  j["elements"] = w.elements;
  j["params"] = w.params;
  j["detail"] = w.detail;
  j["replay"] = describe(w);
  return j;
}

ReportJson verdict_json(const Verdict& v) {
  ReportJson j;
  j["holds"] = v.holds;
  if (v.witness) j["witness"] = witness_json(*v.witness);
  return j;
}

ReportJson check_json(const CheckResult& c) {
  ReportJson j;
  j["id"] = c.id;
  j["statement"] = c.statement;
  j["kind"] = to_string(c.kind);
  j["holds"] = c.holds;
  j["cases"] = c.cases;
  j["failures"] = c.failures;
  j["summary"] = c.summary();
  j["witnesses"] = c.witnesses;
  return j;
}

ReportJson set_json(const GammaStructure& s, ElementSet set) {
  ReportJson j;
  j["elements"] = set.elements();
  j["label"] = format_set(s, set);
  return j;
}

ReportJson options_json(const AnalysisOptions& o) {
  ReportJson j;
  j["primary_quantify_params"] = to_string(o.primary_params);
  j["radical_iterate"] = to_string(o.radical_iteration);
  j["module_assoc"] = to_string(o.module_associativity);
  j["gamma_relabeling"] = o.gamma_relabeling ? "on" : "off";
  return j;
}

namespace {

std::size_t display_width(const std::string& s) {
  return static_cast<std::size_t>(
      std::count_if(s.begin(), s.end(), [](char c) { return (static_cast<unsigned char>(c) & 0xC0) != 0x80; }));
}

ReportJson axioms_json(const AxiomReport& r) {
  ReportJson j;
  j["T1"] = verdict_json(r.t1);
  j["T2"] = verdict_json(r.t2);
  j["T3"] = verdict_json(r.t3);
  j["T4"] = verdict_json(r.t4);
  j["commutativity"] = verdict_json(r.commutativity);
  j["all_pass"] = r.all_pass();
  return j;
}

std::vector<std::vector<ElementSet>> comaximal_families(const GammaStructure& s, const std::vector<ElementSet>& maxes) {
  std::vector<std::vector<ElementSet>> out;
  const std::size_t k = std::min<std::size_t>(maxes.size(), 10);
  for (std::uint32_t mask = 0; mask < (std::uint32_t{1} << k); ++mask) {
    if (std::popcount(mask) < 2) continue;
    std::vector<ElementSet> family;
    for (std::size_t i = 0; i < k; ++i)
      if (mask >> i & 1u) family.push_back(maxes[i]);
    bool comaximal = true;
    for (std::size_t i = 0; i < family.size() && comaximal; ++i)
      for (std::size_t j = i + 1; j < family.size() && comaximal; ++j)
        comaximal = ideal_sum(s, family[i], family[j]) == s.all();
    if (comaximal) out.push_back(std::move(family));
  }
  return out;
}

}  // namespace

std::string ascii_table(const std::vector<std::string>& header, const std::vector<std::vector<std::string>>& rows) {
  std::vector<std::size_t> width(header.size(), 0);
  for (std::size_t c = 0; c < header.size(); ++c) width[c] = display_width(header[c]);
  for (const auto& row : rows)
    for (std::size_t c = 0; c < row.size() && c < width.size(); ++c) width[c] = std::max(width[c], display_width(row[c]));
  std::ostringstream out;
  auto rule = [&] {
    out << '+';
    for (std::size_t w : width) out << std::string(w + 2, '-') << '+';
    out << '\n';
  };
  auto line = [&](const std::vector<std::string>& cells) {
    out << '|';
    for (std::size_t c = 0; c < width.size(); ++c) {
      const std::string cell = c < cells.size() ? cells[c] : "";
      out << ' ' << cell << std::string(width[c] - display_width(cell), ' ') << " |";
    }
    out << '\n';
  };
  rule();
  line(header);
  rule();
  for (const auto& row : rows) line(row);
  rule();
  return out.str();
}

AnalysisReport analyze(const GammaStructure& s, const AnalysisRequest& request) {
  AnalysisReport r;
  auto& j = r.json;
  const auto& opt = request.options;
  j["schema_version"] = kReportSchemaVersion;
  ReportJson id;
  id["id"] = canonical_form(s, {opt.gamma_relabeling}).hash_hex();
  id["order"] = s.order();
  id["gamma"] = s.gamma_size();
  id["names"] = s.names();
  id["additive_group"] = s.is_additive_group();
  j["structure"] = id;
  j["options"] = options_json(opt);

  const auto axioms = verify_axioms(s);
  r.axioms_pass = axioms.all_pass();
  j["axioms"] = axioms_json(axioms);
  if (!r.axioms_pass) {
    j["status"] = "axiom_failure";
    return r;
  }
  j["status"] = "ok";

  const auto lattice = ideal_lattice(s, opt);
  ReportJson ideals = ReportJson::array();
  int primes = 0, semiprimes = 0, maximals = 0, primaries = 0;
  for (std::size_t i = 0; i < lattice.ideals.size(); ++i) {
    const auto& t = lattice.tags[i];
    ReportJson e = set_json(s, lattice.ideals[i]);
    e["proper"] = t.proper;
    e["prime"] = t.prime;
    e["semiprime"] = t.semiprime;
    e["maximal"] = t.maximal;
    e["primary"] = t.primary;
    ideals.push_back(e);
    primes += t.prime;
    semiprimes += t.semiprime;
    maximals += t.maximal;
    primaries += t.primary;
  }
  j["ideals"] = ideals;
  ReportJson covers = ReportJson::array();
  for (const auto& [lo, hi] : lattice.covers) covers.push_back({lo, hi});
  j["covers"] = covers;
  j["counts"] = {{"ideals", lattice.ideals.size()}, {"primes", primes}, {"semiprimes", semiprimes},
                 {"maximals", maximals}, {"primaries", primaries}};

  ReportJson radicals = ReportJson::array();
  for (ElementSet i : lattice.ideals) {
    const auto rr = radical_report(s, i, opt.radical_iteration);
    ReportJson e;
    e["ideal"] = format_set(s, i);
    e["by_primes"] = format_set(s, rr.by_primes);
    e["by_elements"] = format_set(s, rr.by_elements);
    e["agree"] = rr.agree;
    e["disagreement"] = rr.disagreement.elements();
    e["elements_form_ideal"] = rr.elements_form_ideal;
    radicals.push_back(e);
  }
  j["radicals"] = radicals;
  const ElementSet J = jacobson_radical(s);
  j["jacobson_radical"] = set_json(s, J);
  j["semisimple"] = is_semisimple(s);
  j["simple"] = is_simple(s);

  ReportJson cong;
  const auto census = congruence_census(s);
  if (census.computed) {
    ReportJson parts = ReportJson::array();
    for (const auto& rho : enumerate_congruences(s)) parts.push_back(block_lists(rho));
    cong["count"] = census.congruences;
    cong["partitions"] = parts;
    cong["ideal_count"] = census.ideals;
    cong["distinct_zero_classes"] = census.distinct_zero_classes;
    cong["collisions"] = census.collisions;
    cong["round_trip_failures"] = census.round_trip_failures;
    cong["witnesses"] = census.witnesses;
  } else {
    cong["skipped"] = "order above the partition scan cap";
  }
  j["congruences"] = cong;

  const auto view = spec(s);
  const auto conn = connected_components(s);
  ReportJson sp;
  ReportJson points = ReportJson::array();
  for (ElementSet p : view.points) points.push_back(format_set(s, p));
  sp["points"] = points;
  ReportJson closed = ReportJson::array();
  for (std::size_t i = 0; i < view.ideals.size(); ++i) {
    ReportJson idx = ReportJson::array();
    for (std::size_t p = 0; p < view.points.size(); ++p)
      if (view.closed[i] >> p & 1u) idx.push_back(p);
    closed.push_back({{"ideal", format_set(s, view.ideals[i])}, {"points", idx}});
  }
  sp["closed_sets"] = closed;
  ReportJson comps = ReportJson::array();
  for (const auto& c : conn.components) {
    ReportJson members = ReportJson::array();
    for (ElementSet p : c) members.push_back(format_set(s, p));
    comps.push_back(members);
  }
  sp["components"] = comps;
  sp["component_count"] = conn.component_count;
  sp["connected"] = conn.connected;
  sp["algebraic_splitting"] = conn.splitting
                                  ? ReportJson({format_set(s, conn.splitting->first), format_set(s, conn.splitting->second)})
                                  : ReportJson();
  sp["criterion_agrees"] = conn.criterion_agrees;
  sp["idempotent_count"] = conn.idempotent_count;
  sp["idempotent_count_matches_components"] = conn.idempotent_count_matches;
  j["spectrum"] = sp;

  const ElementSet idem = find_idempotents(s);
  j["idempotents"] = set_json(s, idem);
  ReportJson decs = ReportJson::array();
  for (int e : idem.elements()) {
    const auto d = idempotent_decomposition(s, e);
    ReportJson x;
    x["idempotent"] = s.element_name(e);
    x["generated"] = format_set(s, d.generated);
    x["complement"] = d.complement ? ReportJson(format_set(s, *d.complement)) : ReportJson();
    x["complement_ignoring_products"] =
        d.complement_ignoring_products ? ReportJson(format_set(s, *d.complement_ignoring_products)) : ReportJson();
    x["unit_style_candidate"] = d.unit_style_candidate ? ReportJson(format_set(s, *d.unit_style_candidate)) : ReportJson();
    x["candidate_differs"] = d.candidate_differs;
    decs.push_back(x);
  }
  j["decompositions"] = decs;

  ReportJson crts = ReportJson::array();
  for (const auto& family : comaximal_families(s, maximal_ideals(s, lattice.ideals))) {
    const auto c = crt_check(s, family);
    ReportJson x;
    ReportJson names = ReportJson::array();
    for (ElementSet i : family) names.push_back(format_set(s, i));
    x["ideals"] = names;
    x["quotient_orders"] = c.quotient_orders;
    x["product_size"] = c.product_size;
    x["surjective"] = c.surjective;
    x["injective"] = c.injective;
    x["kernel_zero_class"] = format_set(s, c.kernel_zero_class);
    x["intersection"] = format_set(s, c.intersection);
    x["kernel_matches"] = c.kernel_matches;
    x["missing_tuple"] = c.missing_tuple;
    x["passes"] = c.passes();
    crts.push_back(x);
  }
  j["crt"] = crts;

  ReportJson mods;
  const auto regular = ModuleAction::regular(s);
  const auto mr = verify_module_axioms(regular, opt.module_associativity);
  ReportJson reg;
  reg["carrier"] = verdict_json(mr.carrier);
  reg["M1"] = verdict_json(mr.m1);
  reg["M2_surrogate"] = verdict_json(mr.m2_surrogate);
  reg["M2_printed"] = verdict_json(mr.m2_printed);
  reg["M3"] = verdict_json(mr.m3);
  reg["all_pass"] = mr.all_pass();
  if (regular.carrier_order() <= kSubsetScanCap) {
    reg["submodules"] = enumerate_submodules(regular).size();
    const auto ann = annihilator(regular);
    reg["simple"] = ann.simple_module;
    reg["annihilator"] = set_json(s, ann.set);
    reg["annihilator_proper"] = ann.proper;
    reg["annihilator_ideal"] = ann.ideal.holds;
    reg["annihilator_prime"] = ann.prime ? verdict_json(*ann.prime) : ReportJson();
  }
  mods["regular"] = reg;
  ReportJson prim;
  PrimitiveSearchOptions po;
  po.carrier_cap = std::min(request.primitive_carrier_cap, s.order());
  po.associativity = opt.module_associativity;
  prim["carrier_cap"] = po.carrier_cap;
  try {
    const auto found = find_primitive_ideals(s, po);
    prim["complete"] = true;
    prim["modules_found"] = found.modules_found;
    prim["simple_modules"] = found.simple_modules;
    ReportJson list = ReportJson::array();
    for (const auto& p : found.ideals) {
      ReportJson x = set_json(s, p.ideal);
      x["carrier_order"] = p.carrier_order;
      x["prime"] = p.prime;
      if (p.prime_witness) x["witness"] = witness_json(*p.prime_witness);
      list.push_back(x);
    }
    prim["ideals"] = list;
    ReportJson bad = ReportJson::array();
    for (const auto& [set, w] : found.non_ideal_annihilators) {
      ReportJson x = set_json(s, set);
      x["witness"] = witness_json(w);
      bad.push_back(x);
    }
    prim["non_ideal_annihilators"] = bad;
  } catch (const ResourceError& e) {
    prim["complete"] = false;
    prim["reason"] = e.what();
  }
  mods["primitive"] = prim;
  j["modules"] = mods;

  if (request.theorems) {
    SuiteOptions so;
    so.analysis = opt;
    r.checks = structure_theorems(s, so);
    r.asserted_hold = all_asserted_hold(r.checks);
    ReportJson th = ReportJson::array();
    for (const auto& c : r.checks) th.push_back(check_json(c));
    j["theorems"] = th;
    ReportJson disc = ReportJson::array();
    for (const auto& c : r.checks)
      if (c.kind == CheckKind::reported && !c.holds)
        disc.push_back({{"id", c.id}, {"summary", c.summary()}, {"witnesses", c.witnesses}});
    j["discrepancies"] = disc;
    j["asserted_hold"] = r.asserted_hold;
  }
  return r;
}

std::string analysis_text(const AnalysisReport& report) {
  const auto& j = report.json;
  std::ostringstream out;
  const auto& id = j["structure"];
  out << "structure " << id["id"].get<std::string>() << "  order " << id["order"] << "  gamma " << id["gamma"]
      << (id["additive_group"].get<bool>() ? "  (additive group)" : "  (additive monoid)") << "\n\n";
  std::vector<std::vector<std::string>> ax;
  for (const char* k : {"T1", "T2", "T3", "T4", "commutativity"}) {
    const auto& v = j["axioms"][k];
    ax.push_back({k, v["holds"].get<bool>() ? "pass" : "FAIL",
                  v.contains("witness") ? v["witness"]["replay"].get<std::string>() : ""});
  }
  out << ascii_table({"axiom", "verdict", "witness"}, ax);
  if (!report.axioms_pass) return out.str();

  std::vector<std::vector<std::string>> rows;
  for (const auto& e : j["ideals"]) {
    auto yn = [&](const char* k) { return e[k].get<bool>() ? std::string("yes") : std::string("-"); };
    rows.push_back({e["label"].get<std::string>(), yn("proper"), yn("prime"), yn("semiprime"), yn("maximal"),
                    yn("primary")});
  }
  out << "\nideals\n" << ascii_table({"ideal", "proper", "prime", "semiprime", "maximal", "primary"}, rows);

  rows.clear();
  for (const auto& e : j["radicals"])
    rows.push_back({e["ideal"].get<std::string>(), e["by_primes"].get<std::string>(), e["by_elements"].get<std::string>(),
                    e["agree"].get<bool>() ? "yes" : "NO"});
  out << "\nradicals\n" << ascii_table({"ideal", "by primes", "by elements", "agree"}, rows);

  out << "\nJacobson radical " << j["jacobson_radical"]["label"].get<std::string>()
      << (j["semisimple"].get<bool>() ? "  semisimple" : "  not semisimple")
      << (j["simple"].get<bool>() ? "  simple" : "  not simple") << "\n";
  if (j["congruences"].contains("count"))
    out << "congruences " << j["congruences"]["count"] << "  ideals " << j["congruences"]["ideal_count"]
        << "  zero-class collisions " << j["congruences"]["collisions"] << "\n";
  const auto& sp = j["spectrum"];
  out << "Spec " << sp["points"].size() << " points, " << sp["component_count"] << " components, "
      << sp["idempotent_count"] << " idempotents"
      << (sp["criterion_agrees"].get<bool>() ? "" : "  (connectedness criterion disagrees)") << "\n";
  for (const auto& c : j["crt"])
    out << "CRT over " << c["ideals"].dump() << ": " << (c["passes"].get<bool>() ? "pass" : "fail")
        << (c["injective"].get<bool>() ? ", bijective" : "") << "\n";
  const auto& prim = j["modules"]["primitive"];
  out << "regular module " << (j["modules"]["regular"]["all_pass"].get<bool>() ? "passes" : "fails")
      << " the module axioms; primitive ideals (carrier <= " << prim["carrier_cap"] << "): ";
  if (prim["complete"].get<bool>()) {
    std::string names;
    for (const auto& p : prim["ideals"]) names += (names.empty() ? "" : " ") + p["label"].get<std::string>();
    out << (names.empty() ? "none" : names) << "\n";
  } else {
    out << "search incomplete\n";
  }

  if (j.contains("theorems")) {
    rows.clear();
    for (const auto& c : j["theorems"])
      rows.push_back({c["id"].get<std::string>(), c["kind"].get<std::string>(),
                      c["holds"].get<bool>() ? "holds" : "FAILS", std::to_string(c["cases"].get<std::size_t>()),
                      c["witnesses"].empty() ? "" : c["witnesses"][0].get<std::string>()});
    out << "\ntheorems\n" << ascii_table({"check", "kind", "result", "cases", "first witness"}, rows);
  }
  return out.str();
}

}  // namespace tgs
