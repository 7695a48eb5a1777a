#pragma once

#include <vector>

#include "tgs/check.hpp"
#include "tgs/options.hpp"
#include "tgs/structure.hpp"

namespace tgs {

struct SuiteOptions {
  AnalysisOptions analysis;
  /// Structures up to this order also get the primitive-ideal search.
  int primitive_max_order = 3;
  int jobs = 1;
};

/// Every law checked on a single structure: ideal closure properties, the
/// maximal/prime/primary/semiprime chain, radical laws, congruence and
/// quotient laws, spectrum topology, decompositions and module laws.
/// The structure is expected to pass verify_axioms.
std::vector<CheckResult> structure_theorems(const GammaStructure& s, const SuiteOptions& options = {});

/// Laws about homomorphisms between pairs of structures of order at most
/// max_order: pullbacks of ideals and primes, the first isomorphism
/// theorem for quotients, and continuity of the induced spectrum map.
std::vector<CheckResult> corpus_theorems(const std::vector<GammaStructure>& corpus, int max_order = 3,
                                         int jobs = 1);

/// Sums per-check counters of b into a (matched by id, appended if new).
void merge_checks(std::vector<CheckResult>& a, const std::vector<CheckResult>& b, const std::string& label = {});

bool all_asserted_hold(const std::vector<CheckResult>& checks);

}  // namespace tgs
