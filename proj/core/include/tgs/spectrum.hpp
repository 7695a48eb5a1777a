#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "tgs/check.hpp"
#include "tgs/element_set.hpp"
#include "tgs/structure.hpp"

namespace tgs {

/// A set of spectrum points, bit i standing for SpectrumView::points[i].
using PointSet = std::uint64_t;

inline constexpr int kMaxSpectrumPoints = 64;

/// Prime ideals with the closed set V(I) of every ideal I.
struct SpectrumView {
  std::vector<ElementSet> points;
  std::vector<ElementSet> ideals;
  std::vector<PointSet> closed;  ///< closed[i] = V(ideals[i])
  std::vector<PointSet> components;

  PointSet all_points() const;
  /// V of an arbitrary ideal of the same structure.
  PointSet closed_of(ElementSet ideal) const;
  std::vector<ElementSet> points_of(PointSet set) const;
};

SpectrumView spec(const GammaStructure& s);

/// Primes containing the ideal, ascending. Throws InputError if not an ideal.
std::vector<ElementSet> closed_set(const GammaStructure& s, ElementSet ideal);

/// Closed-set axioms, order reversal, T0 and singleton closures, each
/// checked over every ideal (pair) of the structure.
std::vector<CheckResult> verify_topology(const GammaStructure& s);

/// Ideals I, J other than {0} with I+J = T, I∩J = {0} and IΓJΓT = {0}.
std::optional<std::pair<ElementSet, ElementSet>> find_algebraic_splitting(const GammaStructure& s);

struct ConnectivityReport {
  int component_count = 0;
  std::vector<std::vector<ElementSet>> components;
  bool connected = true;  ///< at most one component
  std::optional<std::pair<ElementSet, ElementSet>> splitting;
  bool criterion_agrees = true;  ///< connected iff no splitting
  int idempotent_count = 0;
  bool idempotent_count_matches = false;
};

ConnectivityReport connected_components(const GammaStructure& s);

/// Points as nodes, P1 -> P2 when P1 ⊂ P2.
std::string spec_to_dot(const GammaStructure& s, const SpectrumView& view);

}  // namespace tgs
