#include "tgs/congruence.hpp"

#include <map>
#include <numeric>

#include "tgs/errors.hpp"
#include "tgs/ideals.hpp"

namespace tgs {

CongruencePartition CongruencePartition::from_labels(const std::vector<int>& labels) {
  CongruencePartition p;
  std::map<int, int> renumber;
  for (int label : labels) {
    auto it = renumber.find(label);
    if (it == renumber.end()) it = renumber.emplace(label, static_cast<int>(renumber.size())).first;
    p.block_of_.push_back(it->second);
  }
  p.blocks_ = static_cast<int>(renumber.size());
  return p;
}

CongruencePartition CongruencePartition::from_blocks(int n, const std::vector<std::vector<int>>& blocks) {
  std::vector<int> labels(static_cast<std::size_t>(n), -1);
  for (std::size_t b = 0; b < blocks.size(); ++b) {
    if (blocks[b].empty()) throw InputError("partition has an empty block");
    for (int e : blocks[b]) {
      if (e < 0 || e >= n) throw InputError("partition mentions an element outside the carrier");
      if (labels[static_cast<std::size_t>(e)] != -1) throw InputError("partition blocks overlap");
      labels[static_cast<std::size_t>(e)] = static_cast<int>(b);
    }
  }
  for (int label : labels)
    if (label == -1) throw InputError("partition does not cover every element");
  return from_labels(labels);
}

CongruencePartition CongruencePartition::discrete(int n) {
  std::vector<int> labels(static_cast<std::size_t>(n));
  std::iota(labels.begin(), labels.end(), 0);
  return from_labels(labels);
}

CongruencePartition CongruencePartition::total(int n) {
  return from_labels(std::vector<int>(static_cast<std::size_t>(n), 0));
}

ElementSet CongruencePartition::block(int index) const {
  ElementSet out;
  for (int e = 0; e < order(); ++e)
    if (block_of(e) == index) out.insert(e);
  return out;
}

std::vector<ElementSet> CongruencePartition::blocks() const {
  std::vector<ElementSet> out;
  for (int b = 0; b < blocks_; ++b) out.push_back(block(b));
  return out;
}

std::vector<std::vector<int>> block_lists(const CongruencePartition& rho) {
  std::vector<std::vector<int>> out;
  for (ElementSet b : rho.blocks()) out.push_back(b.elements());
  return out;
}

Verdict is_congruence(const GammaStructure& s, const CongruencePartition& rho) {
  const int n = s.order();
  const int m = s.gamma_size();
  if (rho.order() != n) throw InputError("partition size does not match the carrier");
  for (int x = 0; x < n; ++x)
    for (int x2 = 0; x2 < n; ++x2) {
      if (x == x2 || !rho.related(x, x2)) continue;
      for (int u = 0; u < n; ++u)
        if (!rho.related(s.add(x, u), s.add(x2, u)))
          return Verdict::fail({"C2 additive compatibility", {0, x, x2, u, 0}, {},
                                std::to_string(x) + "+" + std::to_string(u) + " and " + std::to_string(x2) + "+" +
                                    std::to_string(u) + " fall in different classes"});
    }
  for (int pos = 1; pos <= 3; ++pos)
    for (int x = 0; x < n; ++x)
      for (int x2 = 0; x2 < n; ++x2) {
        if (x == x2 || !rho.related(x, x2)) continue;
        for (int u = 0; u < n; ++u)
          for (int v = 0; v < n; ++v)
            for (int al = 0; al < m; ++al)
              for (int be = 0; be < m; ++be) {
                auto eval = [&](int slot) {
                  switch (pos) {
                    case 1: return s.mul(slot, al, u, be, v);
                    case 2: return s.mul(u, al, slot, be, v);
                    default: return s.mul(u, al, v, be, slot);
                  }
                };
                const int lhs = eval(x);
                const int rhs = eval(x2);
                if (!rho.related(lhs, rhs))
                  return Verdict::fail({"C2 ternary compatibility", {pos, x, x2, u, v}, {al, be},
                                        "products " + std::to_string(lhs) + " and " + std::to_string(rhs) +
                                            " fall in different classes"});
              }
      }
  return Verdict::pass();
}

CongruencePartition bourne_congruence(const GammaStructure& s, ElementSet ideal) {
  if (ideal.empty() || !is_ideal(s, ideal).holds)
    throw InputError("Bourne congruence requires an ideal; got " + format_set(s, ideal));
  const int n = s.order();
  std::vector<int> parent(static_cast<std::size_t>(n));
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int x) {
    while (parent[static_cast<std::size_t>(x)] != x)
      x = parent[static_cast<std::size_t>(x)] = parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(x)])];
    return x;
  };
  const auto members = ideal.elements();
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b) {
      bool related = false;
      for (int i : members) {
        for (int j : members)
          if (s.add(a, i) == s.add(b, j)) {
            related = true;
            break;
          }
        if (related) break;
      }
      if (related) {
        const int ra = find(a);
        const int rb = find(b);
        if (ra != rb) parent[static_cast<std::size_t>(std::max(ra, rb))] = std::min(ra, rb);
      }
    }
  std::vector<int> labels;
  for (int e = 0; e < n; ++e) labels.push_back(find(e));
  return CongruencePartition::from_labels(labels);
}

ElementSet congruence_to_ideal(const GammaStructure& s, const CongruencePartition& rho) {
  if (rho.order() != s.order()) throw InputError("partition size does not match the carrier");
  return rho.zero_class();
}

GammaStructure quotient_structure(const GammaStructure& s, const CongruencePartition& rho) {
  const int n = s.order();
  const int m = s.gamma_size();
  if (rho.order() != n) throw InputError("partition size does not match the carrier");
  const int k = rho.block_count();
  const auto ku = static_cast<std::size_t>(k);
  std::vector<int> addition(ku * ku, -1);
  std::vector<int> ternary(static_cast<std::size_t>(m * m) * ku * ku * ku, -1);
  auto put = [](std::vector<int>& table, std::size_t at, int value) {
    if (table[at] == -1) {
      table[at] = value;
    } else if (table[at] != value) {
      throw ConsistencyError("quotient operation depends on representatives: not a congruence");
    }
  };
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      put(addition, static_cast<std::size_t>(rho.block_of(a) * k + rho.block_of(b)), rho.block_of(s.add(a, b)));
  for (int al = 0; al < m; ++al)
    for (int be = 0; be < m; ++be)
      for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
          for (int c = 0; c < n; ++c) {
            const std::size_t at =
                ((static_cast<std::size_t>(al * m + be) * ku + static_cast<std::size_t>(rho.block_of(a))) * ku +
                 static_cast<std::size_t>(rho.block_of(b))) * ku + static_cast<std::size_t>(rho.block_of(c));
            put(ternary, at, rho.block_of(s.mul(a, al, b, be, c)));
          }
  std::vector<std::string> names;
  for (ElementSet block : rho.blocks()) names.push_back(format_set(s, block));
  return GammaStructure(k, m, std::move(addition), std::move(ternary), std::move(names));
}

std::vector<CongruencePartition> enumerate_congruences(const GammaStructure& s) {
  const int n = s.order();
  if (n > kPartitionScanCap)
    throw ResourceError("congruence enumeration capped at order " + std::to_string(kPartitionScanCap));
  std::vector<CongruencePartition> out;
  std::vector<int> rgs(static_cast<std::size_t>(n), 0);
  auto rec = [&](auto&& self, int i, int max_label) -> void {
    if (i == n) {
      auto p = CongruencePartition::from_labels(rgs);
      if (is_congruence(s, p).holds) out.push_back(std::move(p));
      return;
    }
    for (int label = 0; label <= max_label + 1; ++label) {
      rgs[static_cast<std::size_t>(i)] = label;
      self(self, i + 1, std::max(max_label, label));
    }
  };
  rec(rec, 1, 0);
  return out;
}

std::optional<Witness> find_nonzero_zero_divisor(const GammaStructure& s) {
  const int n = s.order();
  const int m = s.gamma_size();
  for (int a = 1; a < n; ++a)
    for (int al = 0; al < m; ++al)
      for (int be = 0; be < m; ++be)
        if (s.mul(a, al, a, be, a) == 0)
          return Witness{"nonzero zero-divisor", {a, a, a}, {al, be}, "product of nonzero elements is 0"};
  for (int a = 1; a < n; ++a)
    for (int b = 1; b < n; ++b)
      for (int c = 1; c < n; ++c)
        for (int al = 0; al < m; ++al)
          for (int be = 0; be < m; ++be)
            if (s.mul(a, al, b, be, c) == 0)
              return Witness{"nonzero zero-divisor", {a, b, c}, {al, be}, "product of nonzero elements is 0"};
  return std::nullopt;
}

bool has_nonzero_zero_divisors(const GammaStructure& s) { return find_nonzero_zero_divisor(s).has_value(); }

CongruencePartition kernel_congruence(const std::vector<int>& element_map) {
  return CongruencePartition::from_labels(element_map);
}

}  // namespace tgs

namespace tgs {

std::string format_blocks(const CongruencePartition& rho) {
  std::string out = "[";
  for (const auto& b : rho.blocks()) out += (out.size() > 1 ? "|" : "") + to_string(b);
  return out + "]";
}

CongruenceCensus congruence_census(const GammaStructure& s, std::size_t max_witnesses) {
  CongruenceCensus c;
  if (s.order() > kPartitionScanCap) return c;
  c.computed = true;
  const auto all = enumerate_congruences(s);
  c.congruences = all.size();
  c.ideals = enumerate_ideals(s).size();
  std::map<std::uint32_t, std::vector<const CongruencePartition*>> by_zero;
  for (const auto& rho : all) {
    const ElementSet zero = congruence_to_ideal(s, rho);
    by_zero[zero.bits()].push_back(&rho);
    if (const auto v = is_ideal(s, zero); !v.holds) {
      ++c.round_trip_failures;
      if (c.witnesses.size() < max_witnesses)
        c.witnesses.push_back("round trip: " + format_blocks(rho) + " has zero class " + format_set(s, zero) +
                              ", not an ideal: " + describe(*v.witness));
      continue;
    }
    const auto back = bourne_congruence(s, zero);
    if (!(back == rho)) {
      ++c.round_trip_failures;
      if (c.witnesses.size() < max_witnesses)
        c.witnesses.push_back("round trip: " + format_blocks(rho) + " has zero class " + format_set(s, zero) +
                              " whose induced congruence is " + format_blocks(back));
    }
  }
  c.distinct_zero_classes = by_zero.size();
  for (const auto& [bits, members] : by_zero) {
    if (members.size() < 2) continue;
    c.collisions += members.size() - 1;
    if (c.witnesses.size() < max_witnesses)
      c.witnesses.push_back("collision: " + format_blocks(*members[0]) + " and " + format_blocks(*members[1]) +
                            " share zero class " + format_set(s, ElementSet(bits)));
  }
  return c;
}

}  // namespace tgs
