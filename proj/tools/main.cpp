#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "commands.hpp"
#include "tgs/errors.hpp"

namespace {

struct Flags {
  std::string primary = "shared";
  std::string radical = "once";
  std::string module_assoc = "surrogate";
  std::string gamma_relabeling = "off";
};

void add_option_flags(CLI::App& app, Flags& f) {
  app.add_option("--primary-quantify-params", f.primary, "cube parameters in the primary test")
      ->check(CLI::IsMember({"shared", "independent"}));
  app.add_option("--radical-iterate", f.radical, "element radical: one cube or iterate to a fixpoint")
      ->check(CLI::IsMember({"once", "fixpoint"}));
  app.add_option("--module-assoc", f.module_assoc, "module associativity law")
      ->check(CLI::IsMember({"surrogate", "printed"}));
  app.add_option("--gamma-relabeling", f.gamma_relabeling, "identify structures differing by a parameter relabeling")
      ->check(CLI::IsMember({"on", "off"}));
}

tgs::AnalysisOptions to_options(const Flags& f) {
  tgs::AnalysisOptions o;
  o.primary_params = tgs::parse_primary_params(f.primary);
  o.radical_iteration = tgs::parse_radical_iteration(f.radical);
  o.module_associativity = tgs::parse_module_associativity(f.module_assoc);
  o.gamma_relabeling = f.gamma_relabeling == "on";
  return o;
}

std::optional<std::string> opt(const std::string& s) { return s.empty() ? std::nullopt : std::optional(s); }

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"tgs: finite commutative ternary Gamma-semirings"};
  app.require_subcommand(1);
  Flags flags;
  tgs::cli::Streams io{std::cout, std::cerr};

  auto* classify = app.add_subcommand("classify", "enumerate structures of one order up to isomorphism");
  int order = 0, gamma = 1, jobs = 1;
  std::string out;
  classify->add_option("--order", order, "carrier size")->required();
  classify->add_option("--gamma", gamma, "number of parameters");
  classify->add_option("--jobs", jobs, "worker threads");
  classify->add_option("--out", out, "output directory");
  add_option_flags(*classify, flags);

  auto* analyze = app.add_subcommand("analyze", "full report for one structure");
  std::string file, format = "text";
  analyze->add_option("file", file, "structure JSON")->required();
  analyze->add_option("--format", format)->check(CLI::IsMember({"json", "text"}));
  analyze->add_option("--out", out, "write the report here instead of stdout");
  add_option_flags(*analyze, flags);

  auto* verify = app.add_subcommand("verify", "check axioms and theorems on a structure, claims file or corpus");
  std::string suite = "all";
  verify->add_option("target", file, "structure file, claims file or directory")->required();
  verify->add_option("--suite", suite)->check(CLI::IsMember({"axioms", "theorems", "all"}));
  verify->add_option("--format", format)->check(CLI::IsMember({"json", "text"}));
  verify->add_option("--jobs", jobs, "worker threads");
  verify->add_option("--out", out, "write the report here instead of stdout");
  add_option_flags(*verify, flags);

  auto* exporter = app.add_subcommand("export", "Graphviz rendering of the ideal lattice or the spectrum");
  std::string target;
  exporter->add_option("file", file, "structure JSON")->required();
  exporter->add_option("--target", target)->required()->check(CLI::IsMember({"ideals", "spec"}));
  exporter->add_option("--out", out, "output .dot file");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : tgs::cli::kExitInput;
  }

  try {
    const auto options = to_options(flags);
    if (*classify) return tgs::cli::cmd_classify(order, gamma, jobs, opt(out), options, io);
    if (*analyze) return tgs::cli::cmd_analyze(file, format, opt(out), options, io);
    if (*verify) return tgs::cli::cmd_verify(file, suite, format, opt(out), jobs, options, io);
    return tgs::cli::cmd_export(file, target, opt(out), io);
  } catch (const tgs::InputError& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return tgs::cli::kExitInput;
  }
}
