#pragma once

#include "tgs/structure.hpp"

namespace tgs {

/// Z_n under addition with ternary product a·b·c mod n, one parameter.
GammaStructure cyclic_product(int n);

/// Z_n under addition with ternary "product" a+b+c mod n. Breaks absorbing
/// zero for n > 1; kept for comparing against examples that use it.
GammaStructure cyclic_sum(int n);

/// {0,1} with logical OR as addition and logical AND as the ternary product.
GammaStructure boolean_two();

/// The one-element structure with m parameters.
GammaStructure trivial_structure(int gamma_size = 1);

/// The given addition with every ternary product equal to 0.
GammaStructure zero_product(const GammaStructure& additive_source);

}  // namespace tgs
