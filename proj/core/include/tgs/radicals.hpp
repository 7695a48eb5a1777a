#pragma once

#include <vector>

#include "tgs/element_set.hpp"
#include "tgs/options.hpp"
#include "tgs/structure.hpp"

namespace tgs {

/// Intersection of all prime ideals containing the ideal; T when none do.
ElementSet radical_by_primes(const GammaStructure& s, ElementSet ideal);
ElementSet radical_by_primes(const GammaStructure& s, ElementSet ideal, const std::vector<ElementSet>& primes);

/// { a : a_α a_β a ∈ I for some α, β }. With RadicalIteration::fixpoint the
/// test is repeated against the growing set until it stabilizes. The result
/// need not be an ideal; see RadicalReport::elements_form_ideal.
ElementSet radical_by_elements(const GammaStructure& s, ElementSet ideal,
                               RadicalIteration mode = RadicalIteration::once);

/// Both radical computations side by side. Equality is observed, not assumed.
struct RadicalReport {
  ElementSet ideal;
  ElementSet by_primes;
  ElementSet by_elements;
  bool agree = false;
  ElementSet disagreement;  ///< symmetric difference
  bool elements_form_ideal = false;
};

RadicalReport radical_report(const GammaStructure& s, ElementSet ideal,
                             RadicalIteration mode = RadicalIteration::once);

/// Intersection of all maximal ideals; T when there are none.
ElementSet jacobson_radical(const GammaStructure& s);

/// J(T) = {0}.
bool is_semisimple(const GammaStructure& s);

}  // namespace tgs
