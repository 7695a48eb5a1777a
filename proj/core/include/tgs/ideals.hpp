#pragma once

#include <string>
#include <utility>
#include <vector>

#include "tgs/element_set.hpp"
#include "tgs/options.hpp"
#include "tgs/structure.hpp"
#include "tgs/verdict.hpp"

namespace tgs {

/// Largest carrier for which 2^n subset scans are attempted.
inline constexpr int kSubsetScanCap = 16;

/// Contains 0, closed under addition, and absorbs every product with an
/// argument inside. Throws InputError for the empty set.
Verdict is_ideal(const GammaStructure& s, ElementSet subset);

/// Least ideal containing the seed (and 0).
ElementSet generated_ideal(const GammaStructure& s, ElementSet seed);

/// The ideal sum, taken as the least ideal containing both.
ElementSet ideal_sum(const GammaStructure& s, ElementSet i, ElementSet j);

/// All ideals, ascending by cardinality then bitmask. Includes {0} and T.
std::vector<ElementSet> enumerate_ideals(const GammaStructure& s);

/// Classification tests. Each requires a proper ideal and throws InputError
/// otherwise; failures carry the first counterexample in (a,b,c | α,β) order,
/// except that the prime test reports a failing cube a_α a_β a when one exists.
Verdict is_prime(const GammaStructure& s, ElementSet ideal);
Verdict is_semiprime(const GammaStructure& s, ElementSet ideal);
Verdict is_primary(const GammaStructure& s, ElementSet ideal,
                   PrimaryParams params = PrimaryParams::shared);
/// Witness on failure: the first ideal strictly between `ideal` and T.
Verdict is_maximal(const GammaStructure& s, ElementSet ideal);
Verdict is_maximal(const GammaStructure& s, ElementSet ideal, const std::vector<ElementSet>& ideals);

struct IdealTags {
  bool proper = false;
  bool prime = false;
  bool semiprime = false;
  bool maximal = false;
  bool primary = false;
};

struct IdealLattice {
  std::vector<ElementSet> ideals;
  std::vector<IdealTags> tags;
  /// Covering pairs (lower index, upper index) into `ideals`, sorted.
  std::vector<std::pair<int, int>> covers;

  int index_of(ElementSet ideal) const;
};

IdealLattice ideal_lattice(const GammaStructure& s, const AnalysisOptions& options = {});

/// Graphviz rendering of the Hasse diagram with P/SP/MAX/PRI badges.
std::string lattice_to_dot(const GammaStructure& s, const IdealLattice& lattice);

/// Maximal ideals, ascending; primes likewise.
std::vector<ElementSet> maximal_ideals(const GammaStructure& s, const std::vector<ElementSet>& ideals);
std::vector<ElementSet> prime_ideals(const GammaStructure& s, const std::vector<ElementSet>& ideals);

}  // namespace tgs
