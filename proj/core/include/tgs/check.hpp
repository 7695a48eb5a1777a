#pragma once

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

namespace tgs {

/// Asserted checks follow mechanically from the definitions and a failure
/// means a bug; reported checks are observations that may legitimately fail.
enum class CheckKind { asserted, reported };

inline constexpr std::size_t kMaxWitnesses = 5;

/// Outcome of one law checked over many instances.
struct CheckResult {
  std::string id;
  std::string statement;
  CheckKind kind = CheckKind::asserted;
  bool holds = true;
  std::size_t cases = 0;
  std::size_t failures = 0;
  std::vector<std::string> witnesses;

  CheckResult() = default;
  CheckResult(std::string id_, std::string statement_, CheckKind kind_)
      : id(std::move(id_)), statement(std::move(statement_)), kind(kind_) {}

  /// Counts one instance; the witness text is built only on failure.
  template <class WitnessFn>
  void record(bool ok, WitnessFn&& witness) {
    ++cases;
    if (ok) return;
    holds = false;
    ++failures;
    if (witnesses.size() < kMaxWitnesses) witnesses.push_back(witness());
  }

  /// "holds exhaustively (N cases)" or the failure count.
  std::string summary() const;
};

std::string to_string(CheckKind kind);

}  // namespace tgs
