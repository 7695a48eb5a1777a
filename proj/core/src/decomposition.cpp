#include "tgs/decomposition.hpp"

#include <set>

#include "tgs/congruence.hpp"
#include "tgs/errors.hpp"
#include "tgs/ideals.hpp"

namespace tgs {

ElementSet find_idempotents(const GammaStructure& s) {
  ElementSet out;
  for (int e = 0; e < s.order(); ++e) {
    bool all = true;
    for (int al = 0; al < s.gamma_size() && all; ++al)
      for (int be = 0; be < s.gamma_size() && all; ++be) all = s.mul(e, al, e, be, e) == e;
    if (all) out.insert(e);
  }
  return out;
}

ElementSet idempotent_ideal(const GammaStructure& s, int e) {
  if (e < 0 || e >= s.order()) throw InputError("element out of range: " + std::to_string(e));
  ElementSet seed;
  for (int a = 0; a < s.order(); ++a)
    for (int al = 0; al < s.gamma_size(); ++al)
      for (int be = 0; be < s.gamma_size(); ++be) seed.insert(s.mul(a, al, e, be, e));
  return generated_ideal(s, seed);
}

IdempotentDecomposition idempotent_decomposition(const GammaStructure& s, int e) {
  if (e < 0 || e >= s.order() || !find_idempotents(s).contains(e))
    throw InputError("decomposition requires an idempotent; got " + std::to_string(e));
  IdempotentDecomposition d;
  d.idempotent = e;
  d.generated = idempotent_ideal(s, e);
  for (ElementSet j : enumerate_ideals(s)) {
    if ((d.generated & j) != ElementSet::zero() || ideal_sum(s, d.generated, j) != s.all()) continue;
    if (!d.complement_ignoring_products) d.complement_ignoring_products = j;
    if (product_set(s, d.generated, j, s.all()) == ElementSet::zero()) {
      d.complement = j;
      break;
    }
  }
  if (s.is_additive_group()) {
    const int n = s.order();
    std::vector<int> neg(static_cast<std::size_t>(n));
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < n; ++b)
        if (s.add(a, b) == 0) neg[static_cast<std::size_t>(a)] = b;
    ElementSet seed;
    for (int a = 0; a < n; ++a)
      for (int al = 0; al < s.gamma_size(); ++al)
        for (int be = 0; be < s.gamma_size(); ++be)
          seed.insert(s.add(a, neg[static_cast<std::size_t>(s.mul(a, al, e, be, e))]));
    d.unit_style_candidate = generated_ideal(s, seed);
    d.candidate_differs = d.complement != d.unit_style_candidate;
  }
  return d;
}

std::optional<std::pair<ElementSet, ElementSet>> decompose_by_idempotent(const GammaStructure& s, int e) {
  const auto d = idempotent_decomposition(s, e);
  if (!d.complement) return std::nullopt;
  return std::pair{d.generated, *d.complement};
}

CrtReport crt_check(const GammaStructure& s, const std::vector<ElementSet>& ideals) {
  if (ideals.size() < 2) throw InputError("CRT check needs at least two ideals");
  for (ElementSet i : ideals)
    if (i.empty() || i == s.all() || !is_ideal(s, i).holds)
      throw InputError("CRT check needs proper ideals; got " + format_set(s, i));
  CrtReport r;
  r.ideals = ideals;
  r.additive_group = s.is_additive_group();
  for (std::size_t i = 0; i < ideals.size(); ++i)
    for (std::size_t j = i + 1; j < ideals.size(); ++j)
      if (ideal_sum(s, ideals[i], ideals[j]) != s.all()) {
        r.pairwise_comaximal = false;
        r.non_comaximal.emplace_back(static_cast<int>(i), static_cast<int>(j));
      }
  std::vector<CongruencePartition> rhos;
  r.intersection = s.all();
  for (ElementSet i : ideals) {
    rhos.push_back(bourne_congruence(s, i));
    r.quotient_orders.push_back(rhos.back().block_count());
    r.product_size *= static_cast<std::size_t>(rhos.back().block_count());
    r.intersection = r.intersection & i;
  }
  std::set<std::vector<int>> reached;
  std::vector<int> zero_tuple;
  for (int a = 0; a < s.order(); ++a) {
    std::vector<int> tuple;
    for (const auto& rho : rhos) tuple.push_back(rho.block_of(a));
    if (a == 0) zero_tuple = tuple;
    if (tuple == zero_tuple) r.kernel_zero_class.insert(a);
    reached.insert(std::move(tuple));
  }
  r.surjective = reached.size() == r.product_size;
  r.injective = static_cast<int>(reached.size()) == s.order();
  r.kernel_matches = r.kernel_zero_class == r.intersection;
  if (!r.surjective) {
    std::vector<int> tuple(rhos.size(), 0);
    while (reached.count(tuple)) {
      std::size_t k = tuple.size();
      while (k-- > 0) {
        if (++tuple[k] < r.quotient_orders[k]) break;
        tuple[k] = 0;
      }
    }
    r.missing_tuple = tuple;
  }
  return r;
}

bool is_simple(const GammaStructure& s) {
  if (s.order() <= 1) return false;
  const auto ideals = enumerate_ideals(s);
  return ideals.size() == 2 && ideals[0] == ElementSet::zero() && ideals[1] == s.all();
}

}  // namespace tgs
