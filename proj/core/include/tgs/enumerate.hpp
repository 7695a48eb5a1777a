#pragma once

#include <cstdint>
#include <vector>

#include "tgs/structure.hpp"

namespace tgs {

/// Caps on exhaustive generation. max_order defaults to 5 and can be
/// overridden through the TGS_MAX_ORDER environment variable.
struct EnumerationLimits {
  int max_order = 5;
  int max_gamma = 2;
  /// Search-node budget for one enumeration; 0 means unlimited.
  std::uint64_t node_budget = 0;

  static EnumerationLimits from_environment();
};

/// Row-major n×n addition table.
using AdditionTable = std::vector<int>;

/// All commutative, associative addition tables on n elements with identity
/// at index 0, one per class under relabelings fixing 0. Each returned table
/// is the least one in its class; the list is sorted.
std::vector<AdditionTable> enumerate_additive_monoids(
    int n, const EnumerationLimits& limits = EnumerationLimits::from_environment());

struct EnumerationOptions {
  int jobs = 1;
  EnumerationLimits limits = EnumerationLimits::from_environment();
};

struct EnumerationResult {
  std::vector<GammaStructure> structures;  ///< axiom-passing, not deduplicated
  std::size_t additive_monoids = 0;
  std::uint64_t nodes = 0;
};

/// Every commutative structure of order n with m parameters over the
/// representative additive monoids. Zero-argument entries are fixed to 0;
/// the remaining cells are grouped into orbits of the commutativity law and
/// filled in lexicographic order with distributivity checked on every
/// closed constraint. Ternary associativity is checked on completed tables.
/// Output order is deterministic and independent of options.jobs.
EnumerationResult enumerate_structures(int n, int m, const EnumerationOptions& options = {});

}  // namespace tgs
