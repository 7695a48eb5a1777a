#include "tgs/ideals.hpp"

#include <algorithm>
#include <sstream>

#include "tgs/errors.hpp"

namespace tgs {

namespace {

void require_proper_ideal(const GammaStructure& s, ElementSet ideal, const char* test) {
  if (ideal.empty() || !is_ideal(s, ideal).holds)
    throw InputError(std::string(test) + " requires an ideal; got " + format_set(s, ideal));
  if (ideal == s.all()) throw InputError(std::string(test) + " requires a proper ideal");
}

std::string membership(const GammaStructure& s, int value, ElementSet set) {
  return "product " + s.element_name(value) + (set.contains(value) ? " in " : " not in ") +
         format_set(s, set);
}

}  // namespace

Verdict is_ideal(const GammaStructure& s, ElementSet subset) {
  if (subset.empty()) throw InputError("ideal test on the empty set");
  const int n = s.order();
  const int m = s.gamma_size();
  if (!subset.subset_of(s.all())) throw InputError("subset mentions elements outside the carrier");
  if (!subset.contains(0)) return Verdict::fail({"ideal contains 0", {}, {}, "0 not in " + format_set(s, subset)});
  const auto members = subset.elements();
  for (int a : members)
    for (int b : members)
      if (!subset.contains(s.add(a, b)))
        return Verdict::fail({"I1 additive closure", {a, b}, {},
                              s.element_name(a) + " + " + s.element_name(b) + " = " +
                                  s.element_name(s.add(a, b)) + " not in " + format_set(s, subset)});
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int c = 0; c < n; ++c) {
        if (!subset.contains(a) && !subset.contains(b) && !subset.contains(c)) continue;
        for (int al = 0; al < m; ++al)
          for (int be = 0; be < m; ++be) {
            const int v = s.mul(a, al, b, be, c);
            if (!subset.contains(v))
              return Verdict::fail({"I2 absorption", {a, b, c}, {al, be}, membership(s, v, subset)});
          }
      }
  return Verdict::pass();
}

ElementSet generated_ideal(const GammaStructure& s, ElementSet seed) {
  const int n = s.order();
  const int m = s.gamma_size();
  ElementSet closure = seed | ElementSet::zero();
  for (bool changed = true; changed;) {
    changed = false;
    ElementSet next = closure;
    const auto members = closure.elements();
    for (int a : members)
      for (int b : members) next.insert(s.add(a, b));
    for (int x : members)
      for (int u = 0; u < n; ++u)
        for (int v = 0; v < n; ++v)
          for (int al = 0; al < m; ++al)
            for (int be = 0; be < m; ++be) {
              next.insert(s.mul(x, al, u, be, v));
              next.insert(s.mul(u, al, x, be, v));
              next.insert(s.mul(u, al, v, be, x));
            }
    if (next != closure) {
      closure = next;
      changed = true;
    }
  }
  return closure;
}

ElementSet ideal_sum(const GammaStructure& s, ElementSet i, ElementSet j) {
  return generated_ideal(s, i | j);
}

std::vector<ElementSet> enumerate_ideals(const GammaStructure& s) {
  const int n = s.order();
  if (n > kSubsetScanCap)
    throw ResourceError("ideal enumeration capped at order " + std::to_string(kSubsetScanCap));
  std::vector<ElementSet> out;
  const std::uint32_t limit = std::uint32_t{1} << n;
  for (std::uint32_t bits = 1; bits < limit; bits += 2) {  // odd masks contain 0
    const ElementSet candidate(bits);
    if (is_ideal(s, candidate).holds) out.push_back(candidate);
  }
  std::sort(out.begin(), out.end(), size_then_bits_less);
  return out;
}

Verdict is_prime(const GammaStructure& s, ElementSet ideal) {
  require_proper_ideal(s, ideal, "prime test");
  const int n = s.order();
  const int m = s.gamma_size();
  for (int a = 0; a < n; ++a) {
    if (ideal.contains(a)) continue;
    for (int al = 0; al < m; ++al)
      for (int be = 0; be < m; ++be)
        if (const int v = s.mul(a, al, a, be, a); ideal.contains(v))
          return Verdict::fail({"prime", {a, a, a}, {al, be}, membership(s, v, ideal) + ", no factor in it"});
  }
  for (int a = 0; a < n; ++a) {
    if (ideal.contains(a)) continue;
    for (int b = 0; b < n; ++b) {
      if (ideal.contains(b)) continue;
      for (int c = 0; c < n; ++c) {
        if (ideal.contains(c)) continue;
        for (int al = 0; al < m; ++al)
          for (int be = 0; be < m; ++be) {
            const int v = s.mul(a, al, b, be, c);
            if (ideal.contains(v))
              return Verdict::fail({"prime", {a, b, c}, {al, be}, membership(s, v, ideal) + ", no factor in it"});
          }
      }
    }
  }
  return Verdict::pass();
}

Verdict is_semiprime(const GammaStructure& s, ElementSet ideal) {
  require_proper_ideal(s, ideal, "semiprime test");
  const int n = s.order();
  const int m = s.gamma_size();
  for (int a = 0; a < n; ++a) {
    if (ideal.contains(a)) continue;
    for (int al = 0; al < m; ++al)
      for (int be = 0; be < m; ++be) {
        const int v = s.mul(a, al, a, be, a);
        if (ideal.contains(v))
          return Verdict::fail({"semiprime", {a}, {al, be}, "cube " + membership(s, v, ideal) + ", a is not"});
      }
  }
  return Verdict::pass();
}

Verdict is_primary(const GammaStructure& s, ElementSet ideal, PrimaryParams params) {
  require_proper_ideal(s, ideal, "primary test");
  const int n = s.order();
  const int m = s.gamma_size();
  auto cube_in = [&](int x, int al, int be) {
    if (params == PrimaryParams::shared) return ideal.contains(s.mul(x, al, x, be, x));
    for (int g = 0; g < m; ++g)
      for (int d = 0; d < m; ++d)
        if (ideal.contains(s.mul(x, g, x, d, x))) return true;
    return false;
  };
  for (int a = 0; a < n; ++a) {
    if (ideal.contains(a)) continue;
    for (int b = 0; b < n; ++b)
      for (int c = 0; c < n; ++c)
        for (int al = 0; al < m; ++al)
          for (int be = 0; be < m; ++be) {
            if (!ideal.contains(s.mul(a, al, b, be, c))) continue;
            if (!cube_in(b, al, be) && !cube_in(c, al, be))
              return Verdict::fail({"primary", {a, b, c}, {al, be},
                                    "product in " + format_set(s, ideal) + ", a not in it, neither cube of b nor c in it"});
          }
  }
  return Verdict::pass();
}

Verdict is_maximal(const GammaStructure& s, ElementSet ideal, const std::vector<ElementSet>& ideals) {
  require_proper_ideal(s, ideal, "maximal test");
  for (ElementSet other : ideals) {
    if (ideal.proper_subset_of(other) && other != s.all())
      return Verdict::fail({"maximal", other.elements(), {}, "intermediate ideal " + format_set(s, other)});
  }
  return Verdict::pass();
}

Verdict is_maximal(const GammaStructure& s, ElementSet ideal) {
  return is_maximal(s, ideal, enumerate_ideals(s));
}

int IdealLattice::index_of(ElementSet ideal) const {
  const auto it = std::find(ideals.begin(), ideals.end(), ideal);
  return it == ideals.end() ? -1 : static_cast<int>(it - ideals.begin());
}

IdealLattice ideal_lattice(const GammaStructure& s, const AnalysisOptions& options) {
  IdealLattice lattice;
  lattice.ideals = enumerate_ideals(s);
  const auto& ideals = lattice.ideals;
  for (ElementSet ideal : ideals) {
    IdealTags tags;
    tags.proper = ideal != s.all();
    if (tags.proper) {
      tags.prime = is_prime(s, ideal).holds;
      tags.semiprime = is_semiprime(s, ideal).holds;
      tags.maximal = is_maximal(s, ideal, ideals).holds;
      tags.primary = is_primary(s, ideal, options.primary_params).holds;
    }
    lattice.tags.push_back(tags);
  }
  const int count = static_cast<int>(ideals.size());
  for (int i = 0; i < count; ++i)
    for (int j = 0; j < count; ++j) {
      const auto lo = ideals[static_cast<std::size_t>(i)];
      const auto hi = ideals[static_cast<std::size_t>(j)];
      if (!lo.proper_subset_of(hi)) continue;
      bool cover = true;
      for (int k = 0; k < count && cover; ++k) {
        const auto mid = ideals[static_cast<std::size_t>(k)];
        cover = !(lo.proper_subset_of(mid) && mid.proper_subset_of(hi));
      }
      if (cover) lattice.covers.emplace_back(i, j);
    }
  return lattice;
}

std::string lattice_to_dot(const GammaStructure& s, const IdealLattice& lattice) {
  std::ostringstream out;
  out << "digraph ideals {\n  rankdir=BT;\n  node [shape=box];\n";
  for (std::size_t i = 0; i < lattice.ideals.size(); ++i) {
    const auto& tags = lattice.tags[i];
    std::string badges;
    auto badge = [&](bool on, const char* text) {
      if (!on) return;
      if (!badges.empty()) badges += ' ';
      badges += text;
    };
    badge(tags.prime, "P");
    badge(tags.semiprime, "SP");
    badge(tags.maximal, "MAX");
    badge(tags.primary, "PRI");
    out << "  i" << i << " [label=\"" << format_set(s, lattice.ideals[i]);
    if (!badges.empty()) out << "\\n" << badges;
    out << "\"];\n";
  }
  for (const auto& [lo, hi] : lattice.covers) out << "  i" << lo << " -> i" << hi << ";\n";
  out << "}\n";
  return out.str();
}

std::vector<ElementSet> maximal_ideals(const GammaStructure& s, const std::vector<ElementSet>& ideals) {
  std::vector<ElementSet> out;
  for (ElementSet ideal : ideals)
    if (ideal != s.all() && is_maximal(s, ideal, ideals).holds) out.push_back(ideal);
  return out;
}

std::vector<ElementSet> prime_ideals(const GammaStructure& s, const std::vector<ElementSet>& ideals) {
  std::vector<ElementSet> out;
  for (ElementSet ideal : ideals)
    if (ideal != s.all() && is_prime(s, ideal).holds) out.push_back(ideal);
  return out;
}

}  // namespace tgs
