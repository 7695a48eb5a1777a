#include "commands.hpp"

#include <algorithm>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>

#include "tgs/analysis.hpp"
#include "tgs/axioms.hpp"
#include "tgs/canonical.hpp"
#include "tgs/claims.hpp"
#include "tgs/classify.hpp"
#include "tgs/errors.hpp"
#include "tgs/ideals.hpp"
#include "tgs/json_io.hpp"
#include "tgs/parallel.hpp"
#include "tgs/spectrum.hpp"
#include "tgs/theorems.hpp"

namespace fs = std::filesystem;

namespace tgs::cli {

namespace {

int guarded(Streams io, const std::function<int()>& body) {
  try {
    return body();
  } catch (const ParseError& e) {
    io.err << "parse error at byte " << e.position() << ": " << e.what() << "\n";
    return kExitInput;
  } catch (const InputError& e) {
    io.err << "input error: " << e.what() << "\n";
    return kExitInput;
  } catch (const IoError& e) {
    io.err << "i/o error: " << e.what() << "\n";
    return kExitInput;
  } catch (const ResourceError& e) {
    io.err << "resource cap: " << e.what();
    if (!e.progress().empty()) io.err << " (" << e.progress() << ")";
    io.err << "\n";
    return kExitResource;
  } catch (const ConsistencyError& e) {
    io.err << "assertion failed: " << e.what() << "\n";
    return kExitAssertion;
  }
}

void emit(const std::string& text, const std::optional<fs::path>& out, Streams io) {
  if (out)
    write_text_file(*out, text);
  else
    io.out << text;
}

nlohmann::json parse_file(const fs::path& path) {
  const std::string text = read_text_file(path);
  try {
    return nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(path.string() + ": " + e.what(), e.byte);
  }
}

void print_axiom_failures(const AxiomReport& r, const std::string& label, std::ostream& os) {
  for (const Verdict* v : {&r.t1, &r.t2, &r.t3, &r.t4, &r.commutativity})
    if (!v->holds) os << label << ": " << describe(*v->witness) << "\n";
}

struct Input {
  fs::path path;
  std::string label;
  nlohmann::json doc;
};

std::vector<Input> collect(const fs::path& target) {
  std::vector<Input> items;
  if (fs::is_directory(target)) {
    std::vector<fs::path> files;
    for (const auto& e : fs::recursive_directory_iterator(target))
      if (e.is_regular_file() && e.path().extension() == ".json") files.push_back(e.path());
    std::sort(files.begin(), files.end());
    for (const auto& f : files) items.push_back({f, fs::relative(f, target).generic_string(), parse_file(f)});
  } else {
    if (!fs::exists(target)) throw IoError("no such file: " + target.string());
    items.push_back({target, target.filename().string(), parse_file(target)});
  }
  return items;
}

struct StructureOutcome {
  std::string label;
  std::string id;
  AxiomReport axioms;
  std::vector<CheckResult> checks;
  bool asserted_hold = true;
};

}  // namespace

int cmd_classify(int order, int gamma, int jobs, const std::optional<fs::path>& out_dir,
                 const AnalysisOptions& options, Streams io) {
  return guarded(io, [&] {
    if (order < 1) throw InputError("--order must be at least 1");
    if (gamma < 1) throw InputError("--gamma must be at least 1");
    ClassifyOptions co;
    co.jobs = std::max(1, jobs);
    co.analysis = options;
    const auto report = classify(order, gamma, co);
    if (out_dir) {
      write_classification(report, *out_dir);
      io.out << "wrote " << report.representatives.size() << " structures and report to " << out_dir->string()
             << "\n";
    }
    io.out << report.to_text();
    if (report.partial) {
      io.err << "resource cap: " << report.partial_reason << "\n";
      return int{kExitResource};
    }
    return int{kExitOk};
  });
}

int cmd_analyze(const fs::path& file, const std::string& format, const std::optional<fs::path>& out,
                const AnalysisOptions& options, Streams io) {
  return guarded(io, [&] {
    if (format != "json" && format != "text") throw InputError("--format must be json or text");
    const GammaStructure s = load_structure(file);
    AnalysisRequest request;
    request.options = options;
    const auto report = analyze(s, request);
    emit(format == "json" ? report.json.dump(2) + "\n" : analysis_text(report), out, io);
    if (!report.axioms_pass) {
      const auto axioms = verify_axioms(s);
      print_axiom_failures(axioms, file.filename().string(), io.err);
      return int{kExitAxioms};
    }
    return int{kExitOk};
  });
}

int cmd_verify(const fs::path& target, const std::string& suite, const std::string& format,
               const std::optional<fs::path>& out, int jobs, const AnalysisOptions& options, Streams io) {
  return guarded(io, [&] {
    if (suite != "axioms" && suite != "theorems" && suite != "all")
      throw InputError("--suite must be axioms, theorems or all");
    if (format != "json" && format != "text") throw InputError("--format must be json or text");
    const bool theorems = suite != "axioms";

    std::vector<Input> structures_in, claims_in;
    std::vector<std::string> skipped;
    for (auto& item : collect(target)) {
      if (is_claims_document(item.doc))
        claims_in.push_back(std::move(item));
      else if (item.doc.is_object() && item.doc.contains("ternary"))
        structures_in.push_back(std::move(item));
      else
        skipped.push_back(item.label);
    }
    if (structures_in.empty() && claims_in.empty())
      throw InputError("no structure or claims files found at " + target.string());

    std::vector<GammaStructure> structures;
    for (const auto& item : structures_in) {
      try {
        structures.push_back(structure_from_json(item.doc));
      } catch (const InputError& e) {
        throw InputError(item.label + ": " + e.what());
      }
    }

    SuiteOptions so;
    so.analysis = options;
    std::vector<StructureOutcome> outcomes(structures.size());
    parallel_for(structures.size(), jobs, [&](std::size_t i) {
      auto& o = outcomes[i];
      o.label = structures_in[i].label;
      o.axioms = verify_axioms(structures[i]);
      o.id = canonical_form(structures[i], {options.gamma_relabeling}).hash_hex();
      if (theorems && o.axioms.all_pass()) {
        o.checks = structure_theorems(structures[i], so);
        o.asserted_hold = all_asserted_hold(o.checks);
      }
    });

    bool axioms_fail = false, asserted_fail = false;
    std::vector<CheckResult> merged;
    std::vector<GammaStructure> passing;
    for (std::size_t i = 0; i < outcomes.size(); ++i) {
      axioms_fail |= !outcomes[i].axioms.all_pass();
      asserted_fail |= !outcomes[i].asserted_hold;
      merge_checks(merged, outcomes[i].checks, outcomes[i].label);
      if (outcomes[i].axioms.all_pass()) passing.push_back(structures[i]);
    }
    std::vector<CheckResult> corpus;
    if (theorems && passing.size() > 1) {
      corpus = corpus_theorems(passing, 3, jobs);
      asserted_fail |= !all_asserted_hold(corpus);
    }

    std::vector<ClaimsReport> claims;
    for (const auto& item : claims_in) {
      try {
        claims.push_back(evaluate_claims(item.doc, item.path.parent_path(), options));
      } catch (const InputError& e) {
        throw InputError(item.label + ": " + e.what());
      }
    }

    const int code = axioms_fail ? kExitAxioms : asserted_fail ? kExitAssertion : kExitOk;

    if (format == "json") {
      ReportJson j;
      j["schema_version"] = kReportSchemaVersion;
      j["target"] = target.generic_string();
      j["suite"] = suite;
      j["options"] = options_json(options);
      ReportJson list = ReportJson::array();
      for (const auto& o : outcomes) {
        ReportJson x;
        x["file"] = o.label;
        x["id"] = o.id;
        x["axioms_pass"] = o.axioms.all_pass();
        ReportJson failures = ReportJson::array();
        for (const Verdict* v : {&o.axioms.t1, &o.axioms.t2, &o.axioms.t3, &o.axioms.t4, &o.axioms.commutativity})
          if (!v->holds) failures.push_back(witness_json(*v->witness));
        x["axiom_failures"] = failures;
        if (theorems) x["asserted_hold"] = o.asserted_hold;
        list.push_back(x);
      }
      j["structures"] = list;
      ReportJson checks = ReportJson::array();
      for (const auto& c : merged) checks.push_back(check_json(c));
      j["theorems"] = checks;
      ReportJson cj = ReportJson::array();
      for (const auto& c : corpus) cj.push_back(check_json(c));
      j["corpus_theorems"] = cj;
      ReportJson cl = ReportJson::array();
      for (std::size_t i = 0; i < claims.size(); ++i) {
        ReportJson x = claims[i].to_json();
        x["file"] = claims_in[i].label;
        cl.push_back(x);
      }
      j["claims"] = cl;
      j["skipped"] = skipped;
      j["exit_code"] = code;
      emit(j.dump(2) + "\n", out, io);
    } else {
      std::ostringstream text;
      text << "verify " << target.generic_string() << "  suite " << suite << "\n";
      if (!outcomes.empty()) {
        std::vector<std::vector<std::string>> rows;
        for (const auto& o : outcomes)
          rows.push_back({o.label, o.id, o.axioms.all_pass() ? "pass" : "FAIL",
                          !theorems || !o.axioms.all_pass() ? "-" : o.asserted_hold ? "hold" : "FAIL"});
        text << "\nstructures\n" << ascii_table({"file", "id", "axioms", "asserted"}, rows);
        for (const auto& o : outcomes) print_axiom_failures(o.axioms, o.label, text);
      }
      auto check_table = [&](const std::vector<CheckResult>& list, const std::string& title) {
        if (list.empty()) return;
        std::vector<std::vector<std::string>> rows;
        for (const auto& c : list)
          rows.push_back({c.id, to_string(c.kind), c.holds ? "holds" : "FAILS", std::to_string(c.cases),
                          std::to_string(c.failures)});
        text << "\n" << title << "\n" << ascii_table({"check", "kind", "result", "cases", "failures"}, rows);
        for (const auto& c : list)
          for (const auto& w : c.witnesses) text << "  " << c.id << ": " << w << "\n";
      };
      check_table(merged, "theorems");
      check_table(corpus, "homomorphism theorems");
      for (std::size_t i = 0; i < claims.size(); ++i)
        text << "\nclaims " << claims_in[i].label << "\n" << claims_text(claims[i]);
      for (const auto& s : skipped) text << "skipped " << s << "\n";
      emit(text.str(), out, io);
    }
    return code;
  });
}

int cmd_export(const fs::path& file, const std::string& target, const std::optional<fs::path>& out, Streams io) {
  return guarded(io, [&] {
    if (target != "ideals" && target != "spec") throw InputError("--target must be ideals or spec");
    const GammaStructure s = load_structure(file);
    const auto axioms = verify_axioms(s);
    if (!axioms.all_pass()) {
      print_axiom_failures(axioms, file.filename().string(), io.err);
      return int{kExitAxioms};
    }
    emit(target == "ideals" ? lattice_to_dot(s, ideal_lattice(s)) : spec_to_dot(s, spec(s)), out, io);
    return int{kExitOk};
  });
}

}  // namespace tgs::cli
