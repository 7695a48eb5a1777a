#include "tgs/radicals.hpp"

#include "tgs/errors.hpp"
#include "tgs/ideals.hpp"

namespace tgs {

ElementSet radical_by_primes(const GammaStructure& s, ElementSet ideal, const std::vector<ElementSet>& primes) {
  ElementSet out = s.all();
  for (ElementSet p : primes)
    if (ideal.subset_of(p)) out = out & p;
  return out;
}

ElementSet radical_by_primes(const GammaStructure& s, ElementSet ideal) {
  if (ideal.empty() || !is_ideal(s, ideal).holds)
    throw InputError("radical requires an ideal; got " + format_set(s, ideal));
  return radical_by_primes(s, ideal, prime_ideals(s, enumerate_ideals(s)));
}

ElementSet radical_by_elements(const GammaStructure& s, ElementSet ideal, RadicalIteration mode) {
  const int n = s.order();
  const int m = s.gamma_size();
  auto step = [&](ElementSet target) {
    ElementSet out;
    for (int a = 0; a < n; ++a)
      for (int al = 0; al < m && !out.contains(a); ++al)
        for (int be = 0; be < m; ++be)
          if (target.contains(s.mul(a, al, a, be, a))) {
            out.insert(a);
            break;
          }
    return out;
  };
  if (mode == RadicalIteration::once) return step(ideal);
  ElementSet current = ideal | step(ideal);
  for (;;) {
    const ElementSet next = current | step(current);
    if (next == current) return current;
    current = next;
  }
}

RadicalReport radical_report(const GammaStructure& s, ElementSet ideal, RadicalIteration mode) {
  RadicalReport r;
  r.ideal = ideal;
  r.by_primes = radical_by_primes(s, ideal);
  r.by_elements = radical_by_elements(s, ideal, mode);
  r.disagreement = r.by_primes ^ r.by_elements;
  r.agree = r.disagreement.empty();
  r.elements_form_ideal = !r.by_elements.empty() && is_ideal(s, r.by_elements).holds;
  return r;
}

ElementSet jacobson_radical(const GammaStructure& s) {
  ElementSet out = s.all();
  for (ElementSet mx : maximal_ideals(s, enumerate_ideals(s))) out = out & mx;
  return out;
}

bool is_semisimple(const GammaStructure& s) { return jacobson_radical(s) == ElementSet::zero(); }

}  // namespace tgs
