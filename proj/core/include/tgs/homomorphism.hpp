#pragma once

#include <vector>

#include "tgs/element_set.hpp"
#include "tgs/structure.hpp"
#include "tgs/verdict.hpp"

namespace tgs {

/// A map between two structures. Non-owning: both structures must outlive it.
struct HomomorphismMap {
  const GammaStructure* source = nullptr;
  const GammaStructure* target = nullptr;
  std::vector<int> element_map;
  std::vector<int> param_map;

  static HomomorphismMap identity(const GammaStructure& s);
  bool surjective() const;
  ElementSet image() const;
};

/// f(0) = 0, f(a+b) = f(a)+f(b), f(a_α b_β c) = f(a)_{α'} f(b)_{β'} f(c).
Verdict is_homomorphism(const HomomorphismMap& f);

/// Every homomorphism with f(0) = 0 and identity parameter map, found by
/// exhaustive search over element maps. Empty if the Γ sizes differ.
/// Throws ResourceError beyond 10^6 candidate maps.
std::vector<HomomorphismMap> find_homomorphisms(const GammaStructure& source, const GammaStructure& target);

/// Preimage of an ideal of the target. Throws InputError if f is not a
/// homomorphism or the set is not an ideal of the target.
ElementSet pullback_ideal(const HomomorphismMap& f, ElementSet target_ideal);

/// The image as a structure in its own right, elements in ascending order.
GammaStructure image_structure(const HomomorphismMap& f);

}  // namespace tgs
