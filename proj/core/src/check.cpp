#include "tgs/check.hpp"

namespace tgs {

std::string CheckResult::summary() const {
  if (holds) return "holds exhaustively (" + std::to_string(cases) + " cases)";
  return "fails in " + std::to_string(failures) + " of " + std::to_string(cases) + " cases";
}

std::string to_string(CheckKind kind) { return kind == CheckKind::asserted ? "asserted" : "reported"; }

}  // namespace tgs
