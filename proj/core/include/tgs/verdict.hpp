#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace tgs {

/// A concrete counterexample: the law it breaks, the element and parameter
/// tuple that breaks it, and a human-readable replay of the evaluation.
struct Witness {
  std::string law;
  std::vector<int> elements;
  std::vector<int> params;
  std::string detail;
};

/// Pass, or fail with the lexicographically first witness.
struct Verdict {
  bool holds = true;
  std::optional<Witness> witness;

  static Verdict pass() { return {}; }
  static Verdict fail(Witness w) { return {false, std::move(w)}; }
  explicit operator bool() const { return holds; }
};

std::string describe(const Witness& w);

}  // namespace tgs
