#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "tgs/element_set.hpp"
#include "tgs/structure.hpp"

namespace tgs {

/// Elements with e_α e_β e = e for every parameter pair.
ElementSet find_idempotents(const GammaStructure& s);

/// I_e = ⟨{a_α e_β e}⟩.
ElementSet idempotent_ideal(const GammaStructure& s, int e);

/// I_e and the first ideal J (ascending order) with I_e + J = T,
/// I_e ∩ J = {0} and I_e Γ J Γ T = {0}. Throws InputError unless e is idempotent.
std::optional<std::pair<ElementSet, ElementSet>> decompose_by_idempotent(const GammaStructure& s, int e);

struct IdempotentDecomposition {
  int idempotent = 0;
  ElementSet generated;
  std::optional<ElementSet> complement;
  /// First J meeting the sum and intersection conditions alone.
  std::optional<ElementSet> complement_ignoring_products;
  /// {a - a_α e_β e}, closed into an ideal; only for additive groups.
  std::optional<ElementSet> unit_style_candidate;
  bool candidate_differs = false;
};

IdempotentDecomposition idempotent_decomposition(const GammaStructure& s, int e);

struct CrtReport {
  std::vector<ElementSet> ideals;
  bool additive_group = false;
  bool pairwise_comaximal = true;
  std::vector<std::pair<int, int>> non_comaximal;
  std::vector<int> quotient_orders;
  std::size_t product_size = 1;
  bool surjective = false;
  bool injective = false;
  ElementSet kernel_zero_class;
  ElementSet intersection;
  bool kernel_matches = false;
  /// First unreached class tuple, when not surjective.
  std::vector<int> missing_tuple;

  bool passes() const { return pairwise_comaximal && surjective && kernel_matches; }
};

/// Requires at least two proper ideals, else InputError.
CrtReport crt_check(const GammaStructure& s, const std::vector<ElementSet>& ideals);

/// Exactly two ideals, {0} and T, with |T| > 1.
bool is_simple(const GammaStructure& s);

}  // namespace tgs
