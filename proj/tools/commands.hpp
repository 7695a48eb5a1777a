#pragma once

#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>

#include "tgs/options.hpp"

namespace tgs::cli {

enum ExitCode : int {
  kExitOk = 0,
  kExitInput = 1,
  kExitResource = 2,
  kExitAxioms = 3,
  kExitAssertion = 4,
};

struct Streams {
  std::ostream& out;
  std::ostream& err;
};

int cmd_classify(int order, int gamma, int jobs, const std::optional<std::filesystem::path>& out_dir,
                 const AnalysisOptions& options, Streams io);

/// format: "json" or "text".
int cmd_analyze(const std::filesystem::path& file, const std::string& format,
                const std::optional<std::filesystem::path>& out, const AnalysisOptions& options, Streams io);

/// suite: "axioms", "theorems" or "all". target may be a structure file, a
/// claims file, or a directory searched recursively for both.
int cmd_verify(const std::filesystem::path& target, const std::string& suite, const std::string& format,
               const std::optional<std::filesystem::path>& out, int jobs, const AnalysisOptions& options,
               Streams io);

/// target: "ideals" or "spec".
int cmd_export(const std::filesystem::path& file, const std::string& target,
               const std::optional<std::filesystem::path>& out, Streams io);

}  // namespace tgs::cli
