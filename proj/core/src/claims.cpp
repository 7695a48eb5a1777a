#include "tgs/claims.hpp"

#include <algorithm>
#include <sstream>

#include "tgs/axioms.hpp"
#include "tgs/canonical.hpp"
#include "tgs/decomposition.hpp"
#include "tgs/errors.hpp"
#include "tgs/ideals.hpp"
#include "tgs/json_io.hpp"
#include "tgs/radicals.hpp"
#include "tgs/spectrum.hpp"

namespace tgs {

namespace {

using nlohmann::json;

ElementSet parse_set(const GammaStructure& s, const json& j, const std::string& where) {
  if (!j.is_array()) throw InputError(where + ": expected an array of element indices");
  ElementSet out;
  for (const auto& v : j) {
    if (!v.is_number_integer()) throw InputError(where + ": non-integer element");
    const int e = v.get<int>();
    if (e < 0 || e >= s.order()) throw InputError(where + ": element " + std::to_string(e) + " out of range");
    out.insert(e);
  }
  if (out.empty()) throw InputError(where + ": empty set");
  return out;
}

std::vector<ElementSet> parse_family(const GammaStructure& s, const json& j, const std::string& where) {
  if (!j.is_array()) throw InputError(where + ": expected a list of sets");
  std::vector<ElementSet> out;
  for (const auto& e : j) out.push_back(parse_set(s, e, where));
  std::sort(out.begin(), out.end(), size_then_bits_less);
  return out;
}

const json& field(const json& c, const char* key, const std::string& where) {
  if (!c.contains(key)) throw InputError(where + ": missing field \"" + key + "\"");
  return c.at(key);
}

bool bool_field(const json& c, const char* key, const std::string& where) {
  const auto& v = field(c, key, where);
  if (!v.is_boolean()) throw InputError(where + ": \"" + std::string(key) + "\" must be a boolean");
  return v.get<bool>();
}

std::string yes_no(bool b) { return b ? "yes" : "no"; }

std::string format_family(const GammaStructure& s, const std::vector<ElementSet>& family) {
  std::string out = "[";
  for (std::size_t i = 0; i < family.size(); ++i) out += (i ? ", " : "") + format_set(s, family[i]);
  return out + "]";
}

class Evaluator {
 public:
  Evaluator(const GammaStructure& s, const AnalysisOptions& options)
      : s_(s), options_(options), ideals_(enumerate_ideals(s)), primes_(prime_ideals(s, ideals_)) {}

  ClaimOutcome evaluate(const json& c, const std::string& where) {
    ClaimOutcome o;
    o.kind = field(c, "kind", where).get<std::string>();
    if (c.contains("note")) o.note = c.at("note").get<std::string>();
    const std::string& k = o.kind;
    if (k == "axioms") {
      axioms(o, bool_field(c, "holds", where));
    } else if (k == "ideal" || k == "prime" || k == "semiprime" || k == "maximal" || k == "primary") {
      const ElementSet set = parse_set(s_, field(c, "set", where), where);
      o.subject = format_set(s_, set);
      set_property(o, set, bool_field(c, "holds", where));
    } else if (k == "radical") {
      const ElementSet set = parse_set(s_, field(c, "set", where), where);
      o.subject = format_set(s_, set);
      radical(o, set, parse_set(s_, field(c, "equals", where), where));
    } else if (k == "jacobson") {
      const ElementSet claimed = parse_set(s_, field(c, "equals", where), where);
      const ElementSet j = jacobson_radical(s_);
      fill(o, format_set(s_, claimed), format_set(s_, j), claimed == j);
      o.witnesses.push_back("maximal ideals " + format_family(s_, maximal_ideals(s_, ideals_)) + " intersect to " +
                            format_set(s_, j));
    } else if (k == "semisimple") {
      const bool computed = is_semisimple(s_);
      fill(o, yes_no(bool_field(c, "holds", where)), yes_no(computed), bool_field(c, "holds", where) == computed);
      o.witnesses.push_back("J(T) = " + format_set(s_, jacobson_radical(s_)));
    } else if (k == "simple") {
      const bool computed = is_simple(s_);
      fill(o, yes_no(bool_field(c, "holds", where)), yes_no(computed), bool_field(c, "holds", where) == computed);
      o.witnesses.push_back("ideals " + format_family(s_, ideals_));
    } else if (k == "spectrum") {
      family(o, parse_family(s_, field(c, "equals", where), where), primes_, "prime");
    } else if (k == "maximal_ideals") {
      family(o, parse_family(s_, field(c, "equals", where), where), maximal_ideals(s_, ideals_), "maximal");
    } else if (k == "semiprime_ideals") {
      std::vector<ElementSet> semiprimes;
      for (ElementSet i : ideals_)
        if (i != s_.all() && is_semiprime(s_, i).holds) semiprimes.push_back(i);
      family(o, parse_family(s_, field(c, "equals", where), where), semiprimes, "semiprime");
    } else if (k == "components") {
      const auto& v = field(c, "count", where);
      if (!v.is_number_integer()) throw InputError(where + ": \"count\" must be an integer");
      const auto conn = connected_components(s_);
      fill(o, std::to_string(v.get<int>()), std::to_string(conn.component_count),
           v.get<int>() == conn.component_count);
      o.witnesses.push_back(components_text(conn));
    } else if (k == "idempotent_count_equals_components") {
      const auto conn = connected_components(s_);
      const bool computed = conn.idempotent_count == conn.component_count;
      const bool claimed = bool_field(c, "holds", where);
      fill(o, yes_no(claimed), yes_no(computed), claimed == computed);
      o.witnesses.push_back(std::to_string(conn.idempotent_count) + " idempotents " +
                            format_set(s_, find_idempotents(s_)) + ", " + std::to_string(conn.component_count) +
                            " components " + components_text(conn));
    } else if (k == "decomposition") {
      decomposition(o, c, where);
    } else {
      throw InputError(where + ": unknown claim kind \"" + k + "\"");
    }
    return o;
  }

 private:
  static void fill(ClaimOutcome& o, std::string claimed, std::string computed, bool agrees) {
    o.claimed = std::move(claimed);
    o.computed = std::move(computed);
    o.agrees = agrees;
  }

  std::string components_text(const ConnectivityReport& conn) const {
    std::string out;
    for (const auto& comp : conn.components) out += (out.empty() ? "" : " ") + format_family(s_, comp);
    return out.empty() ? "(empty spectrum)" : out;
  }

  void axioms(ClaimOutcome& o, bool claimed) {
    const auto report = verify_axioms(s_);
    const bool computed = report.all_pass();
    std::string failed;
    for (const auto& [name, v] : {std::pair<const char*, const Verdict*>{"T1", &report.t1}, {"T2", &report.t2},
                                  {"T3", &report.t3}, {"T4", &report.t4},
                                  {"commutativity", &report.commutativity}}) {
      if (v->holds) continue;
      failed += (failed.empty() ? "" : ", ") + std::string(name);
      o.witnesses.push_back(describe(*v->witness));
    }
    fill(o, claimed ? "all hold" : "some fail", computed ? "all hold" : "fails " + failed, claimed == computed);
  }

  // Verdict of a classification test on an arbitrary set, with the reason it fails.
  Verdict test(const std::string& kind, ElementSet set) const {
    const Verdict ideal = is_ideal(s_, set);
    if (kind == "ideal" || !ideal.holds) return ideal;
    if (set == s_.all())
      return Verdict::fail({"proper", set.elements(), {}, "the set is the whole carrier"});
    if (kind == "prime") return is_prime(s_, set);
    if (kind == "semiprime") return is_semiprime(s_, set);
    if (kind == "primary") return is_primary(s_, set, options_.primary_params);
    return is_maximal(s_, set, ideals_);
  }

  void set_property(ClaimOutcome& o, ElementSet set, bool claimed) {
    const Verdict v = test(o.kind, set);
    fill(o, yes_no(claimed), yes_no(v.holds), claimed == v.holds);
    if (v.witness)
      o.witnesses.push_back(describe(*v.witness));
    else
      o.witnesses.push_back(o.kind + " test passes on every tuple");
  }

  void radical(ClaimOutcome& o, ElementSet set, ElementSet claimed) {
    if (const Verdict v = is_ideal(s_, set); !v.holds) {
      fill(o, format_set(s_, claimed), "undefined (not an ideal)", false);
      o.witnesses.push_back(describe(*v.witness));
      return;
    }
    const auto r = radical_report(s_, set, options_.radical_iteration);
    fill(o, format_set(s_, claimed), format_set(s_, r.by_primes), claimed == r.by_primes);
    std::vector<ElementSet> above;
    for (ElementSet p : primes_)
      if (set.subset_of(p)) above.push_back(p);
    o.witnesses.push_back("primes containing " + format_set(s_, set) + ": " + format_family(s_, above));
    if (!r.agree)
      o.witnesses.push_back("element form gives " + format_set(s_, r.by_elements));
  }

  void family(ClaimOutcome& o, const std::vector<ElementSet>& claimed, const std::vector<ElementSet>& computed,
              const std::string& kind) {
    fill(o, format_family(s_, claimed), format_family(s_, computed), claimed == computed);
    for (ElementSet c : claimed)
      if (std::find(computed.begin(), computed.end(), c) == computed.end()) {
        const Verdict v = test(kind, c);
        o.witnesses.push_back(format_set(s_, c) + ": " + (v.witness ? describe(*v.witness) : "not " + kind));
      }
    for (ElementSet c : computed)
      if (std::find(claimed.begin(), claimed.end(), c) == claimed.end())
        o.witnesses.push_back(format_set(s_, c) + ": " + kind + " test passes on every tuple");
  }

  void decomposition(ClaimOutcome& o, const json& c, const std::string& where) {
    const auto& ev = field(c, "idempotent", where);
    if (!ev.is_number_integer() || ev.get<int>() < 0 || ev.get<int>() >= s_.order())
      throw InputError(where + ": \"idempotent\" must be an element index");
    const int e = ev.get<int>();
    o.subject = s_.element_name(e);
    const ElementSet gen = parse_set(s_, field(c, "generated", where), where);
    const ElementSet comp = parse_set(s_, field(c, "complement", where), where);
    const std::string claimed = "I_e=" + format_set(s_, gen) + ", J_e=" + format_set(s_, comp);
    if (!find_idempotents(s_).contains(e)) {
      fill(o, claimed, "not idempotent", false);
      for (int a = 0; a < s_.gamma_size(); ++a)
        for (int b = 0; b < s_.gamma_size(); ++b)
          if (o.witnesses.empty() && s_.mul(e, a, e, b, e) != e)
            o.witnesses.push_back(describe({"idempotent", {e, e, e}, {a, b},
                                            "e_α e_β e = " + s_.element_name(s_.mul(e, a, e, b, e))}));
      return;
    }
    const auto d = idempotent_decomposition(s_, e);
    const std::string computed =
        "I_e=" + format_set(s_, d.generated) + ", J_e=" + (d.complement ? format_set(s_, *d.complement) : "none");
    fill(o, claimed, computed, d.generated == gen && d.complement == comp);
    if (!o.agrees) {
      o.witnesses.push_back("ideal generated by " + s_.element_name(e) + " is " + format_set(s_, d.generated));
      o.witnesses.push_back(d.complement ? "first complement ideal is " + format_set(s_, *d.complement)
                                         : "no ideal J with I_e∩J={0}, I_e+J=T, I_eΓJΓT={0}");
      if (const Verdict v = is_ideal(s_, comp); !v.holds)
        o.witnesses.push_back("claimed J_e " + format_set(s_, comp) + ": " + describe(*v.witness));
    }
  }

  const GammaStructure& s_;
  const AnalysisOptions& options_;
  std::vector<ElementSet> ideals_;
  std::vector<ElementSet> primes_;
};

}  // namespace

std::size_t ClaimsReport::conflicts() const {
  return static_cast<std::size_t>(
      std::count_if(outcomes.begin(), outcomes.end(), [](const ClaimOutcome& o) { return !o.agrees; }));
}

ReportJson ClaimsReport::to_json() const {
  ReportJson j;
  j["title"] = title;
  j["structure_id"] = structure_id;
  j["axioms_pass"] = axioms_pass;
  ReportJson list = ReportJson::array();
  for (const auto& o : outcomes) {
    ReportJson x;
    x["kind"] = o.kind;
    if (!o.subject.empty()) x["subject"] = o.subject;
    x["claimed"] = o.claimed;
    x["computed"] = o.computed;
    x["agrees"] = o.agrees;
    if (!o.note.empty()) x["note"] = o.note;
    x["witnesses"] = o.witnesses;
    list.push_back(x);
  }
  j["claims"] = list;
  j["conflicts"] = conflicts();
  ReportJson cg;
  cg["computed"] = census.computed;
  cg["congruences"] = census.congruences;
  cg["ideals"] = census.ideals;
  cg["distinct_zero_classes"] = census.distinct_zero_classes;
  cg["collisions"] = census.collisions;
  cg["round_trip_failures"] = census.round_trip_failures;
  cg["witnesses"] = census.witnesses;
  j["congruence_census"] = cg;
  return j;
}

bool is_claims_document(const nlohmann::json& j) { return j.is_object() && j.contains("claims"); }

ClaimsReport evaluate_claims(const nlohmann::json& doc, const std::filesystem::path& base_dir,
                             const AnalysisOptions& options) {
  if (!is_claims_document(doc) || !doc.at("claims").is_array())
    throw InputError("claims file needs a \"claims\" array");
  if (!doc.contains("structure")) throw InputError("claims file needs a \"structure\"");
  const auto& sj = doc.at("structure");
  const GammaStructure s = sj.is_string() ? load_structure(base_dir / sj.get<std::string>()) : structure_from_json(sj);

  ClaimsReport r;
  r.title = doc.value("title", "");
  r.structure_id = canonical_form(s, {options.gamma_relabeling}).hash_hex();
  r.axioms_pass = verify_axioms(s).all_pass();
  Evaluator ev(s, options);
  std::size_t index = 0;
  for (const auto& c : doc.at("claims")) {
    if (!c.is_object()) throw InputError("claim " + std::to_string(index) + " is not an object");
    r.outcomes.push_back(ev.evaluate(c, "claim " + std::to_string(index)));
    ++index;
  }
  r.census = congruence_census(s);
  return r;
}

ClaimsReport load_claims(const std::filesystem::path& path, const AnalysisOptions& options) {
  const std::string text = read_text_file(path);
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(path.string() + ": " + e.what(), e.byte);
  }
  return evaluate_claims(doc, path.parent_path(), options);
}

std::string claims_text(const ClaimsReport& report) {
  std::ostringstream out;
  out << report.title << "  [" << report.structure_id << "]"
      << (report.axioms_pass ? "" : "  axioms FAIL, verdicts use the literal definitions on the given tables") << "\n";
  std::vector<std::vector<std::string>> rows;
  for (std::size_t i = 0; i < report.outcomes.size(); ++i) {
    const auto& o = report.outcomes[i];
    rows.push_back({std::to_string(i), o.kind, o.subject, o.claimed, o.computed, o.agrees ? "agree" : "CONFLICT"});
  }
  out << ascii_table({"#", "claim", "subject", "claimed", "computed", "status"}, rows);
  for (std::size_t i = 0; i < report.outcomes.size(); ++i)
    if (!report.outcomes[i].agrees)
      for (const auto& w : report.outcomes[i].witnesses) out << "  [" << i << "] " << w << "\n";
  const auto& c = report.census;
  if (c.computed) {
    out << "congruences " << c.congruences << ", ideals " << c.ideals << ", zero-class collisions " << c.collisions
        << ", round-trip failures " << c.round_trip_failures << "\n";
    for (const auto& w : c.witnesses) out << "  " << w << "\n";
  }
  return out.str();
}

}  // namespace tgs
