#pragma once

#include <optional>
#include <string>
#include <vector>

#include "tgs/element_set.hpp"
#include "tgs/structure.hpp"
#include "tgs/verdict.hpp"

namespace tgs {

/// Largest carrier for which all set partitions are scanned.
inline constexpr int kPartitionScanCap = 10;

/// A partition of the carrier. Block 0 is the class of element 0; the other
/// blocks are numbered by their smallest member.
class CongruencePartition {
 public:
  /// Any labeling of elements by block; renumbered into normal form.
  static CongruencePartition from_labels(const std::vector<int>& labels);
  /// Blocks must be disjoint, nonempty and cover [0, n); InputError otherwise.
  static CongruencePartition from_blocks(int n, const std::vector<std::vector<int>>& blocks);
  static CongruencePartition discrete(int n);
  static CongruencePartition total(int n);

  int order() const { return static_cast<int>(block_of_.size()); }
  int block_count() const { return blocks_; }
  int block_of(int e) const { return block_of_[static_cast<std::size_t>(e)]; }
  bool related(int a, int b) const { return block_of(a) == block_of(b); }
  ElementSet block(int index) const;
  std::vector<ElementSet> blocks() const;
  ElementSet zero_class() const { return block(0); }
  const std::vector<int>& labels() const { return block_of_; }

  friend bool operator==(const CongruencePartition&, const CongruencePartition&) = default;

 private:
  std::vector<int> block_of_;
  int blocks_ = 0;
};

/// Compatibility with addition and with every ternary argument position,
/// checked one substitution at a time. Witness tuple (position, x, x', u, v | α, β),
/// position 0 meaning addition x + u.
Verdict is_congruence(const GammaStructure& s, const CongruencePartition& rho);

/// a ~ b iff a + i = b + j for some i, j in I, closed transitively.
/// Throws InputError when I is not an ideal.
CongruencePartition bourne_congruence(const GammaStructure& s, ElementSet ideal);

/// The class of 0.
ElementSet congruence_to_ideal(const GammaStructure& s, const CongruencePartition& rho);

/// T/ρ with the zero class at index 0. Throws ConsistencyError if an
/// operation depends on the choice of representatives.
GammaStructure quotient_structure(const GammaStructure& s, const CongruencePartition& rho);

/// All congruences, in restricted-growth-string order.
std::vector<CongruencePartition> enumerate_congruences(const GammaStructure& s);

/// A triple of nonzero elements whose product is 0: the first cube a_α a_β a
/// if there is one, else the first (a, b, c | α, β).
std::optional<Witness> find_nonzero_zero_divisor(const GammaStructure& s);
bool has_nonzero_zero_divisors(const GammaStructure& s);

/// a ~ b iff f(a) = f(b).
CongruencePartition kernel_congruence(const std::vector<int>& element_map);

/// Blocks as element lists, e.g. [[0,2,4],[1,3,5]].
std::vector<std::vector<int>> block_lists(const CongruencePartition& rho);
std::string format_blocks(const CongruencePartition& rho);

/// How far the map ρ ↦ zero class ↦ Bourne congruence is from a bijection.
struct CongruenceCensus {
  bool computed = false;  // false above kPartitionScanCap
  std::size_t congruences = 0;
  std::size_t ideals = 0;
  std::size_t distinct_zero_classes = 0;
  /// Congruences beyond the first sharing a zero class.
  std::size_t collisions = 0;
  /// Congruences not recovered from their own zero class.
  std::size_t round_trip_failures = 0;
  std::vector<std::string> witnesses;
};

CongruenceCensus congruence_census(const GammaStructure& s, std::size_t max_witnesses = 5);

}  // namespace tgs
