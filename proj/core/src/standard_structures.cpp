#include "tgs/standard_structures.hpp"

#include "tgs/errors.hpp"

namespace tgs {

GammaStructure cyclic_product(int n) {
  if (n < 1) throw InputError("modulus must be positive");
  return GammaStructure::from_functions(
      n, 1, [n](int a, int b) { return (a + b) % n; },
      [n](int a, int, int b, int, int c) { return (a * b * c) % n; });
}

GammaStructure cyclic_sum(int n) {
  if (n < 1) throw InputError("modulus must be positive");
  return GammaStructure::from_functions(
      n, 1, [n](int a, int b) { return (a + b) % n; },
      [n](int a, int, int b, int, int c) { return (a + b + c) % n; });
}

GammaStructure boolean_two() {
  return GammaStructure::from_functions(
      2, 1, [](int a, int b) { return a | b; }, [](int a, int, int b, int, int c) { return a & b & c; });
}

GammaStructure trivial_structure(int gamma_size) {
  const auto m = static_cast<std::size_t>(gamma_size);
  return GammaStructure(1, gamma_size, {0}, std::vector<int>(m * m, 0));
}

GammaStructure zero_product(const GammaStructure& additive_source) {
  return GammaStructure::from_functions(
      additive_source.order(), additive_source.gamma_size(),
      [&](int a, int b) { return additive_source.add(a, b); },
      [](int, int, int, int, int) { return 0; }, additive_source.names());
}

}  // namespace tgs
