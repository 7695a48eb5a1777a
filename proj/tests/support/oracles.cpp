#include "oracles.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>

#include "tgs/canonical.hpp"

using tgs::ElementSet;
using tgs::GammaStructure;

namespace oracle {

Axioms axioms(const GammaStructure& s) {
  const int n = s.order(), m = s.gamma_size();
  auto A = [&](int x, int y) { return static_cast<int>(s.addition_table()[x * n + y]); };
  auto P = [&](int a, int al, int b, int be, int c) {
    return static_cast<int>(s.ternary_tables()[(((al * m + be) * n + a) * n + b) * n + c]);
  };
  Axioms r;
  for (int a = 0; a < n; ++a) {
    r.t1 = r.t1 && A(0, a) == a && A(a, 0) == a;
    for (int b = 0; b < n; ++b) {
      r.t1 = r.t1 && A(a, b) == A(b, a);
      for (int c = 0; c < n; ++c) r.t1 = r.t1 && A(A(a, b), c) == A(a, A(b, c));
    }
  }
  for (int al = 0; al < m; ++al)
    for (int be = 0; be < m; ++be)
      for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
          for (int c = 0; c < n; ++c) {
            const int p = P(a, al, b, be, c);
            if ((a == 0 || b == 0 || c == 0) && p != 0) r.t4 = false;
            if (p != P(b, be, a, al, c) || p != P(c, al, b, be, a)) r.commutative = false;
            for (int x = 0; x < n; ++x) {
              if (P(A(a, x), al, b, be, c) != A(p, P(x, al, b, be, c))) r.t3 = false;
              if (P(a, al, A(b, x), be, c) != A(p, P(a, al, x, be, c))) r.t3 = false;
              if (P(a, al, b, be, A(c, x)) != A(p, P(a, al, b, be, x))) r.t3 = false;
            }
            for (int ga = 0; ga < m; ++ga)
              for (int de = 0; de < m; ++de)
                for (int d = 0; d < n; ++d)
                  for (int e = 0; e < n; ++e)
                    if (P(p, ga, d, de, e) != P(a, al, b, be, P(c, ga, d, de, e))) r.t2 = false;
          }
  return r;
}

std::vector<std::vector<int>> raw_additive_tables(int n) {
  std::vector<std::vector<int>> out;
  std::vector<std::pair<int, int>> cells;
  for (int a = 1; a < n; ++a)
    for (int b = a; b < n; ++b) cells.emplace_back(a, b);
  std::vector<int> t(static_cast<std::size_t>(n * n));
  for (int a = 0; a < n; ++a) t[a] = t[a * n] = a;
  std::function<void(std::size_t)> fill = [&](std::size_t k) {
    if (k == cells.size()) {
      for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
          for (int c = 0; c < n; ++c)
            if (t[t[a * n + b] * n + c] != t[a * n + t[b * n + c]]) return;
      out.push_back(t);
      return;
    }
    const auto [a, b] = cells[k];
    for (int v = 0; v < n; ++v) {
      t[a * n + b] = t[b * n + a] = v;
      fill(k + 1);
    }
  };
  fill(0);
  return out;
}

std::set<std::string> structure_forms(int n) {
  std::set<std::string> forms;
  std::vector<int> free;
  for (int a = 1; a < n; ++a)
    for (int b = 1; b < n; ++b)
      for (int c = 1; c < n; ++c) free.push_back((a * n + b) * n + c);
  for (const auto& add : raw_additive_tables(n)) {
    std::vector<int> tern(static_cast<std::size_t>(n * n * n), 0);
    std::function<void(std::size_t)> fill = [&](std::size_t k) {
      if (k == free.size()) {
        GammaStructure s(n, 1, add, tern);
        if (axioms(s).all()) forms.insert(tgs::canonical_form(s).bytes);
        return;
      }
      for (int v = 0; v < n; ++v) {
        tern[free[k]] = v;
        fill(k + 1);
      }
    };
    fill(0);
  }
  return forms;
}

bool is_ideal(const GammaStructure& s, ElementSet set) {
  if (!set.contains(0)) return false;
  const int n = s.order(), m = s.gamma_size();
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      if (set.contains(x) && set.contains(y) && !set.contains(s.add(x, y))) return false;
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int c = 0; c < n; ++c)
        for (int al = 0; al < m; ++al)
          for (int be = 0; be < m; ++be)
            if ((set.contains(a) || set.contains(b) || set.contains(c)) && !set.contains(s.mul(a, al, b, be, c)))
              return false;
  return true;
}

std::vector<ElementSet> ideals(const GammaStructure& s) {
  std::vector<ElementSet> out;
  for (std::uint32_t bits = 1; bits < (std::uint32_t{1} << s.order()); ++bits)
    if (is_ideal(s, ElementSet(bits))) out.push_back(ElementSet(bits));
  std::sort(out.begin(), out.end(), tgs::size_then_bits_less);
  return out;
}

ElementSet generated_ideal(const GammaStructure& s, ElementSet seed) {
  ElementSet out = s.all();
  for (ElementSet i : ideals(s))
    if (seed.subset_of(i)) out = out & i;
  return out;
}

bool is_prime(const GammaStructure& s, ElementSet ideal) {
  if (!is_ideal(s, ideal) || ideal == s.all()) return false;
  const int n = s.order(), m = s.gamma_size();
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int c = 0; c < n; ++c)
        for (int al = 0; al < m; ++al)
          for (int be = 0; be < m; ++be)
            if (ideal.contains(s.mul(a, al, b, be, c)) && !ideal.contains(a) && !ideal.contains(b) &&
                !ideal.contains(c))
              return false;
  return true;
}

std::vector<std::vector<int>> congruences(const GammaStructure& s) {
  const int n = s.order(), m = s.gamma_size();
  std::vector<std::vector<int>> out;
  std::vector<int> label(static_cast<std::size_t>(n), 0);
  auto compatible = [&] {
    for (int x = 0; x < n; ++x)
      for (int y = 0; y < n; ++y) {
        if (label[x] != label[y]) continue;
        for (int u = 0; u < n; ++u) {
          if (label[s.add(x, u)] != label[s.add(y, u)]) return false;
          for (int v = 0; v < n; ++v)
            for (int al = 0; al < m; ++al)
              for (int be = 0; be < m; ++be)
                if (label[s.mul(x, al, u, be, v)] != label[s.mul(y, al, u, be, v)] ||
                    label[s.mul(u, al, x, be, v)] != label[s.mul(u, al, y, be, v)] ||
                    label[s.mul(u, al, v, be, x)] != label[s.mul(u, al, v, be, y)])
                  return false;
        }
      }
    return true;
  };
  std::function<void(int, int)> place = [&](int e, int blocks) {
    if (e == n) {
      if (compatible()) out.push_back(label);
      return;
    }
    for (int b = 0; b <= blocks; ++b) {
      label[e] = b;
      place(e + 1, std::max(blocks, b + 1));
    }
  };
  place(1, 1);
  return out;
}

GammaStructure random_structure(std::mt19937& rng, int n, int m) {
  std::uniform_int_distribution<int> pick(0, n - 1);
  std::vector<int> add(static_cast<std::size_t>(n * n)), tern(static_cast<std::size_t>(m * m * n * n * n));
  for (auto& v : add) v = pick(rng);
  for (auto& v : tern) v = pick(rng);
  return GammaStructure(n, m, add, tern);
}

GammaStructure corrupt(const GammaStructure& s, std::mt19937& rng, int count) {
  const int n = s.order();
  std::vector<int> add(s.addition_table().begin(), s.addition_table().end());
  std::vector<int> tern(s.ternary_tables().begin(), s.ternary_tables().end());
  std::uniform_int_distribution<int> pick(0, n - 1);
  for (int i = 0; i < count; ++i) {
    if (rng() % 4 == 0) {
      auto& cell = add[rng() % add.size()];
      cell = (cell + 1 + pick(rng) % std::max(1, n - 1)) % n;
    } else {
      auto& cell = tern[rng() % tern.size()];
      cell = (cell + 1 + pick(rng) % std::max(1, n - 1)) % n;
    }
  }
  return GammaStructure(n, s.gamma_size(), add, tern);
}

std::vector<int> random_zero_fixing_permutation(std::mt19937& rng, int n) {
  std::vector<int> p(static_cast<std::size_t>(n));
  std::iota(p.begin(), p.end(), 0);
  std::shuffle(p.begin() + 1, p.end(), rng);
  return p;
}

}  // namespace oracle
