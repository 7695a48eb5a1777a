#include "tgs/gamma_modules.hpp"

#include <algorithm>
#include <atomic>
#include <map>
#include <numeric>

#include "tgs/enumerate.hpp"
#include "tgs/errors.hpp"
#include "tgs/ideals.hpp"
#include "tgs/json_io.hpp"
#include "tgs/parallel.hpp"

namespace tgs {

using nlohmann::json;

ModuleAction::ModuleAction(GammaStructure scalar, int carrier_order, std::vector<int> carrier_addition,
                           std::vector<int> action)
    : scalar_(std::move(scalar)), k_(carrier_order), addition_(std::move(carrier_addition)),
      action_(std::move(action)) {
  if (k_ < 1 || k_ > kMaxCarrier) throw InputError("carrier order must lie in [1, 32]");
  const auto n = static_cast<std::size_t>(scalar_.order());
  const auto g = static_cast<std::size_t>(scalar_.gamma_size());
  const auto k = static_cast<std::size_t>(k_);
  if (addition_.size() != k * k) throw InputError("carrier addition must be k×k");
  if (action_.size() != g * g * n * k * n) throw InputError("action table has the wrong size");
  for (int v : addition_)
    if (v < 0 || v >= k_) throw InputError("carrier addition entry out of range");
  for (int v : action_)
    if (v < 0 || v >= k_) throw InputError("action entry out of range");
}

std::size_t ModuleAction::action_index(int a, int alpha, int m, int beta, int b) const {
  const auto n = static_cast<std::size_t>(scalar_.order());
  const auto k = static_cast<std::size_t>(k_);
  const auto pair = static_cast<std::size_t>(alpha * scalar_.gamma_size() + beta);
  return ((pair * n + static_cast<std::size_t>(a)) * k + static_cast<std::size_t>(m)) * n +
         static_cast<std::size_t>(b);
}

ModuleAction ModuleAction::from_functions(GammaStructure scalar, int carrier_order,
                                          const std::function<int(int, int)>& add, const ActionFn& act) {
  const int n = scalar.order();
  const int g = scalar.gamma_size();
  const int k = carrier_order;
  std::vector<int> addition;
  for (int x = 0; x < k; ++x)
    for (int y = 0; y < k; ++y) addition.push_back(add(x, y));
  std::vector<int> action;
  for (int al = 0; al < g; ++al)
    for (int be = 0; be < g; ++be)
      for (int a = 0; a < n; ++a)
        for (int m = 0; m < k; ++m)
          for (int b = 0; b < n; ++b) action.push_back(act(a, al, m, be, b));
  return ModuleAction(std::move(scalar), k, std::move(addition), std::move(action));
}

ModuleAction ModuleAction::regular(const GammaStructure& s) {
  return from_functions(
      s, s.order(), [&](int x, int y) { return s.add(x, y); },
      [&](int a, int al, int m, int be, int b) { return s.mul(a, al, m, be, b); });
}

ModuleAction ModuleAction::zero(const GammaStructure& s) {
  return from_functions(
      s, 1, [](int, int) { return 0; }, [](int, int, int, int, int) { return 0; });
}

namespace {

Verdict check_carrier(const ModuleAction& A) {
  const int k = A.carrier_order();
  for (int x = 0; x < k; ++x)
    if (A.add(0, x) != x) return Verdict::fail({"carrier identity", {x}, {}, "0 + m != m"});
  for (int x = 0; x < k; ++x)
    for (int y = 0; y < k; ++y)
      if (A.add(x, y) != A.add(y, x)) return Verdict::fail({"carrier commutativity", {x, y}, {}, ""});
  for (int x = 0; x < k; ++x)
    for (int y = 0; y < k; ++y)
      for (int z = 0; z < k; ++z)
        if (A.add(A.add(x, y), z) != A.add(x, A.add(y, z)))
          return Verdict::fail({"carrier associativity", {x, y, z}, {}, ""});
  return Verdict::pass();
}

Verdict check_m1(const ModuleAction& A) {
  const auto& s = A.scalar();
  const int n = s.order();
  const int g = s.gamma_size();
  const int k = A.carrier_order();
  for (int al = 0; al < g; ++al)
    for (int be = 0; be < g; ++be) {
      for (int a = 0; a < n; ++a)
        for (int a2 = 0; a2 < n; ++a2)
          for (int m = 0; m < k; ++m)
            for (int b = 0; b < n; ++b)
              if (A.act(s.add(a, a2), al, m, be, b) != A.add(A.act(a, al, m, be, b), A.act(a2, al, m, be, b)))
                return Verdict::fail({"M1 (first argument)", {a, a2, m, b}, {al, be}, ""});
      for (int a = 0; a < n; ++a)
        for (int m = 0; m < k; ++m)
          for (int m2 = 0; m2 < k; ++m2)
            for (int b = 0; b < n; ++b)
              if (A.act(a, al, A.add(m, m2), be, b) != A.add(A.act(a, al, m, be, b), A.act(a, al, m2, be, b)))
                return Verdict::fail({"M1 (module argument)", {a, m, m2, b}, {al, be}, ""});
      for (int a = 0; a < n; ++a)
        for (int m = 0; m < k; ++m)
          for (int b = 0; b < n; ++b)
            for (int b2 = 0; b2 < n; ++b2)
              if (A.act(a, al, m, be, s.add(b, b2)) != A.add(A.act(a, al, m, be, b), A.act(a, al, m, be, b2)))
                return Verdict::fail({"M1 (last argument)", {a, m, b, b2}, {al, be}, ""});
    }
  return Verdict::pass();
}

template <class Rhs>
Verdict check_m2(const ModuleAction& A, const char* law, Rhs&& rhs) {
  const auto& s = A.scalar();
  const int n = s.order();
  const int g = s.gamma_size();
  const int k = A.carrier_order();
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int c = 0; c < n; ++c)
        for (int d = 0; d < n; ++d)
          for (int m = 0; m < k; ++m)
            for (int al = 0; al < g; ++al)
              for (int be = 0; be < g; ++be)
                for (int ga = 0; ga < g; ++ga)
                  for (int de = 0; de < g; ++de) {
                    const int lhs = A.act(a, al, A.act(b, ga, m, de, c), be, d);
                    if (lhs != rhs(a, b, c, d, m, al, be, ga, de))
                      return Verdict::fail({law, {a, b, c, d, m}, {al, be, ga, de}, ""});
                  }
  return Verdict::pass();
}

Verdict check_m3(const ModuleAction& A) {
  const auto& s = A.scalar();
  for (int al = 0; al < s.gamma_size(); ++al)
    for (int be = 0; be < s.gamma_size(); ++be)
      for (int m = 0; m < A.carrier_order(); ++m)
        for (int x = 0; x < s.order(); ++x) {
          if (A.act(0, al, m, be, x) != 0) return Verdict::fail({"M3", {0, m, x}, {al, be}, "0_α m_β b != 0"});
          if (A.act(x, al, m, be, 0) != 0) return Verdict::fail({"M3", {x, m, 0}, {al, be}, "a_α m_β 0 != 0"});
        }
  return Verdict::pass();
}

Verdict check_module_commutative(const ModuleAction& A) {
  const auto& s = A.scalar();
  for (int a = 0; a < s.order(); ++a)
    for (int m = 0; m < A.carrier_order(); ++m)
      for (int b = 0; b < s.order(); ++b)
        for (int al = 0; al < s.gamma_size(); ++al)
          for (int be = 0; be < s.gamma_size(); ++be)
            if (A.act(a, al, m, be, b) != A.act(b, be, m, al, a))
              return Verdict::fail({"module commutativity", {a, m, b}, {al, be}, ""});
  return Verdict::pass();
}

Verdict check_m2_mode(const ModuleAction& A, ModuleAssociativity mode) {
  const auto& s = A.scalar();
  if (mode == ModuleAssociativity::surrogate)
    return check_m2(A, "M2 (surrogate)", [&](int a, int b, int c, int d, int m, int al, int be, int ga, int de) {
      return A.act(b, ga, A.act(a, al, m, be, d), de, c);
    });
  return check_m2(A, "M2 (printed)", [&](int a, int b, int c, int d, int m, int al, int be, int ga, int de) {
    return A.act(s.mul(a, al, b, ga, c), de, m, be, d);
  });
}

}  // namespace

ModuleReport verify_module_axioms(const ModuleAction& a, ModuleAssociativity assoc, bool check_commutative) {
  ModuleReport r;
  r.associativity = assoc;
  r.carrier = check_carrier(a);
  r.m1 = check_m1(a);
  r.m2_surrogate = check_m2_mode(a, ModuleAssociativity::surrogate);
  r.m2_printed = check_m2_mode(a, ModuleAssociativity::printed);
  r.m3 = check_m3(a);
  r.commutative_checked = check_commutative;
  if (check_commutative) r.commutative = check_module_commutative(a);
  return r;
}

bool is_submodule(const ModuleAction& A, ElementSet subset) {
  if (!subset.contains(0)) return false;
  const auto elems = subset.elements();
  for (int x : elems)
    for (int y : elems)
      if (!subset.contains(A.add(x, y))) return false;
  const auto& s = A.scalar();
  for (int al = 0; al < s.gamma_size(); ++al)
    for (int be = 0; be < s.gamma_size(); ++be)
      for (int a = 0; a < s.order(); ++a)
        for (int x : elems)
          for (int b = 0; b < s.order(); ++b)
            if (!subset.contains(A.act(a, al, x, be, b))) return false;
  return true;
}

std::vector<ElementSet> enumerate_submodules(const ModuleAction& A) {
  const int k = A.carrier_order();
  if (k > kSubsetScanCap)
    throw ResourceError("submodule scan is capped at " + std::to_string(kSubsetScanCap) + " carrier elements");
  std::vector<ElementSet> out;
  const std::uint32_t limit = std::uint32_t{1} << k;
  for (std::uint32_t bits = 1; bits < limit; bits += 2)
    if (is_submodule(A, ElementSet(bits))) out.push_back(ElementSet(bits));
  std::sort(out.begin(), out.end(), size_then_bits_less);
  return out;
}

bool is_simple_module(const ModuleAction& a) {
  return a.carrier_order() > 1 && enumerate_submodules(a).size() == 2;
}

AnnihilatorResult annihilator(const ModuleAction& A) {
  const auto& s = A.scalar();
  AnnihilatorResult r;
  for (int a = 0; a < s.order(); ++a) {
    bool kills = true;
    for (int al = 0; al < s.gamma_size() && kills; ++al)
      for (int be = 0; be < s.gamma_size() && kills; ++be)
        for (int m = 0; m < A.carrier_order() && kills; ++m)
          for (int b = 0; b < s.order() && kills; ++b) kills = A.act(a, al, m, be, b) == 0;
    if (kills) r.set.insert(a);
  }
  r.proper = r.set != s.all();
  r.ideal = r.set.empty() ? Verdict::fail({"I1", {}, {}, "annihilator is empty"}) : is_ideal(s, r.set);
  r.simple_module = is_simple_module(A);
  if (r.simple_module && r.proper && r.ideal.holds) r.prime = is_prime(s, r.set);
  return r;
}

namespace {

/// Backtracking over action tables for one scalar structure and carrier monoid.
class ActionSearch {
 public:
  ActionSearch(const GammaStructure& s, int k, const AdditionTable& carrier, const PrimitiveSearchOptions& options,
               std::atomic<std::uint64_t>& nodes)
      : s_(s), k_(k), carrier_(carrier), options_(options), nodes_(nodes) {
    const int n = s.order();
    const int g = s.gamma_size();
    table_.assign(static_cast<std::size_t>(g * g * n * k * n), 0);
    position_.assign(table_.size(), -1);
    auto idx = [&](int a, int al, int m, int be, int b) {
      return ((static_cast<std::size_t>(al * g + be) * n + a) * k + m) * n + b;
    };
    for (int al = 0; al < g; ++al)
      for (int be = 0; be < g; ++be)
        for (int a = 1; a < n; ++a)
          for (int m = 0; m < k; ++m)
            for (int b = 1; b < n; ++b) {
              position_[idx(a, al, m, be, b)] = static_cast<int>(free_.size());
              free_.push_back(idx(a, al, m, be, b));
            }
    buckets_.resize(free_.size());
    pair_done_.assign(free_.size(), -1);
    if (!free_.empty()) {
      const std::size_t block = free_.size() / static_cast<std::size_t>(g * g);
      for (int q = 0; q < g * g; ++q) pair_done_[(static_cast<std::size_t>(q) + 1) * block - 1] = q;
    }
    auto add_constraint = [&](std::size_t x, std::size_t y, std::size_t z) {
      const int p = std::max({position_[x], position_[y], position_[z]});
      if (p >= 0) buckets_[static_cast<std::size_t>(p)].push_back({x, y, z});
    };
    for (int al = 0; al < g; ++al)
      for (int be = 0; be < g; ++be)
        for (int a = 0; a < n; ++a)
          for (int m = 0; m < k; ++m)
            for (int b = 0; b < n; ++b) {
              for (int a2 = 0; a2 < n; ++a2)
                add_constraint(idx(s.add(a, a2), al, m, be, b), idx(a, al, m, be, b), idx(a2, al, m, be, b));
              for (int m2 = 0; m2 < k; ++m2)
                add_constraint(idx(a, al, carrier_[static_cast<std::size_t>(m * k + m2)], be, b),
                               idx(a, al, m, be, b), idx(a, al, m2, be, b));
              for (int b2 = 0; b2 < n; ++b2)
                add_constraint(idx(a, al, m, be, s.add(b, b2)), idx(a, al, m, be, b), idx(a, al, m, be, b2));
            }
  }

  void run(PrimitiveSearchResult& out, std::map<std::uint32_t, PrimitiveIdeal>& found) {
    out_ = &out;
    found_ = &found;
    descend(0);
  }

 private:
  struct Constraint {
    std::size_t sum, left, right;
  };

  void descend(std::size_t p) {
    if (options_.node_budget != 0 && ++nodes_ > options_.node_budget)
      throw ResourceError("primitive-ideal search exceeded its node budget",
                          "partial: carrier " + std::to_string(k_));
    if (options_.node_budget == 0) ++nodes_;
    if (p == free_.size()) {
      leaf();
      return;
    }
    for (int v = 0; v < k_; ++v) {
      table_[free_[p]] = v;
      bool ok = true;
      for (const auto& c : buckets_[p])
        if (table_[c.sum] != carrier_[static_cast<std::size_t>(table_[c.left] * k_ + table_[c.right])]) {
          ok = false;
          break;
        }
      if (ok && pair_done_[p] >= 0) ok = associativity_closed(pair_done_[p]);
      if (ok) descend(p + 1);
    }
    table_[free_[p]] = 0;
  }

  int at(int a, int al, int m, int be, int b) const {
    const int n = s_.order();
    const int g = s_.gamma_size();
    return table_[((static_cast<std::size_t>(al * g + be) * n + a) * k_ + m) * n + b];
  }

  /// M2 instances whose parameter pairs all have index at most q, and one equal to q.
  bool associativity_closed(int q) const {
    const int n = s_.order();
    const int g = s_.gamma_size();
    const bool printed = options_.associativity == ModuleAssociativity::printed;
    for (int al = 0; al < g; ++al)
      for (int be = 0; be < g; ++be)
        for (int ga = 0; ga < g; ++ga)
          for (int de = 0; de < g; ++de) {
            int top = std::max(al * g + be, ga * g + de);
            if (printed) top = std::max(top, de * g + be);
            if (top != q) continue;
            for (int a = 0; a < n; ++a)
              for (int b = 0; b < n; ++b)
                for (int c = 0; c < n; ++c)
                  for (int d = 0; d < n; ++d)
                    for (int m = 0; m < k_; ++m) {
                      const int lhs = at(a, al, at(b, ga, m, de, c), be, d);
                      const int rhs = printed ? at(s_.mul(a, al, b, ga, c), de, m, be, d)
                                              : at(b, ga, at(a, al, m, be, d), de, c);
                      if (lhs != rhs) return false;
                    }
          }
    return true;
  }

  void leaf() {
    ModuleAction A(s_, k_, carrier_, table_);
    if (!check_m2_mode(A, options_.associativity).holds) return;
    ++out_->modules_found;
    if (!is_simple_module(A)) return;
    ++out_->simple_modules;
    const auto ann = annihilator(A);
    if (!ann.proper) return;
    if (!ann.ideal.holds) {
      if (out_->non_ideal_annihilators.empty() ||
          std::find_if(out_->non_ideal_annihilators.begin(), out_->non_ideal_annihilators.end(),
                       [&](const auto& x) { return x.first == ann.set; }) == out_->non_ideal_annihilators.end())
        out_->non_ideal_annihilators.emplace_back(ann.set, *ann.ideal.witness);
      return;
    }
    if (found_->count(ann.set.bits())) return;
    PrimitiveIdeal p;
    p.ideal = ann.set;
    p.carrier_order = k_;
    const auto v = is_prime(s_, ann.set);
    p.prime = v.holds;
    p.prime_witness = v.witness;
    found_->emplace(ann.set.bits(), p);
  }

  const GammaStructure& s_;
  int k_;
  const AdditionTable& carrier_;
  const PrimitiveSearchOptions& options_;
  std::atomic<std::uint64_t>& nodes_;
  std::vector<int> table_;
  std::vector<int> position_;
  std::vector<std::size_t> free_;
  std::vector<std::vector<Constraint>> buckets_;
  std::vector<int> pair_done_;
  PrimitiveSearchResult* out_ = nullptr;
  std::map<std::uint32_t, PrimitiveIdeal>* found_ = nullptr;
};

}  // namespace

PrimitiveSearchResult find_primitive_ideals(const GammaStructure& s, const PrimitiveSearchOptions& options) {
  const int cap = options.carrier_cap == 0 ? s.order() : options.carrier_cap;
  if (cap > s.order()) throw ResourceError("carrier cap exceeds the scalar order " + std::to_string(s.order()));
  std::vector<std::pair<int, AdditionTable>> tasks;
  EnumerationLimits limits;
  limits.max_order = std::max(cap, 1);
  for (int k = 2; k <= cap; ++k)
    for (auto& t : enumerate_additive_monoids(k, limits)) tasks.emplace_back(k, std::move(t));
  std::vector<PrimitiveSearchResult> partial(tasks.size());
  std::vector<std::map<std::uint32_t, PrimitiveIdeal>> found(tasks.size());
  std::atomic<std::uint64_t> nodes{0};
  parallel_for(tasks.size(), options.jobs, [&](std::size_t i) {
    ActionSearch search(s, tasks[i].first, tasks[i].second, options, nodes);
    search.run(partial[i], found[i]);
  });
  PrimitiveSearchResult out;
  std::map<std::uint32_t, PrimitiveIdeal> merged;
  for (std::size_t i = 0; i < tasks.size(); ++i) {
    out.modules_found += partial[i].modules_found;
    out.simple_modules += partial[i].simple_modules;
    for (auto& entry : partial[i].non_ideal_annihilators)
      if (std::none_of(out.non_ideal_annihilators.begin(), out.non_ideal_annihilators.end(),
                       [&](const auto& x) { return x.first == entry.first; }))
        out.non_ideal_annihilators.push_back(entry);
    for (auto& [bits, p] : found[i]) {
      auto it = merged.find(bits);
      if (it == merged.end() || p.carrier_order < it->second.carrier_order) merged[bits] = p;
    }
  }
  for (auto& [bits, p] : merged) out.ideals.push_back(p);
  std::sort(out.non_ideal_annihilators.begin(), out.non_ideal_annihilators.end(),
            [](const auto& a, const auto& b) { return size_then_bits_less(a.first, b.first); });
  std::sort(out.ideals.begin(), out.ideals.end(),
            [](const PrimitiveIdeal& a, const PrimitiveIdeal& b) { return size_then_bits_less(a.ideal, b.ideal); });
  out.nodes = nodes.load();
  return out;
}

std::vector<ModuleHomomorphism> find_module_homomorphisms(const ModuleAction& from, const ModuleAction& to) {
  if (!from.scalar().same_tables(to.scalar()))
    throw InputError("module homomorphisms need a common scalar structure");
  const int k = from.carrier_order();
  const int l = to.carrier_order();
  double candidates = 1;
  for (int i = 1; i < k; ++i) candidates *= l;
  if (candidates > 1e6) throw ResourceError("module homomorphism search exceeds 10^6 candidate maps");
  const auto& s = from.scalar();
  std::vector<ModuleHomomorphism> out;
  std::vector<int> f(static_cast<std::size_t>(k), 0);
  auto valid = [&] {
    for (int x = 0; x < k; ++x)
      for (int y = 0; y < k; ++y)
        if (f[static_cast<std::size_t>(from.add(x, y))] !=
            to.add(f[static_cast<std::size_t>(x)], f[static_cast<std::size_t>(y)]))
          return false;
    for (int al = 0; al < s.gamma_size(); ++al)
      for (int be = 0; be < s.gamma_size(); ++be)
        for (int a = 0; a < s.order(); ++a)
          for (int x = 0; x < k; ++x)
            for (int b = 0; b < s.order(); ++b)
              if (f[static_cast<std::size_t>(from.act(a, al, x, be, b))] !=
                  to.act(a, al, f[static_cast<std::size_t>(x)], be, b))
                return false;
    return true;
  };
  auto rec = [&](auto&& self, int i) -> void {
    if (i == k) {
      if (!valid()) return;
      ModuleHomomorphism h;
      h.map = f;
      for (int x = 0; x < k; ++x) {
        if (f[static_cast<std::size_t>(x)] == 0) h.kernel.insert(x);
        h.image.insert(f[static_cast<std::size_t>(x)]);
      }
      out.push_back(std::move(h));
      return;
    }
    for (int v = 0; v < l; ++v) {
      f[static_cast<std::size_t>(i)] = v;
      self(self, i + 1);
    }
  };
  rec(rec, 1);
  return out;
}

int quotient_carrier_size(const ModuleAction& a, ElementSet submodule) {
  const int k = a.carrier_order();
  std::vector<int> parent(static_cast<std::size_t>(k));
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int x) {
    while (parent[static_cast<std::size_t>(x)] != x) x = parent[static_cast<std::size_t>(x)] = parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(x)])];
    return x;
  };
  std::vector<int> first(static_cast<std::size_t>(k), -1);
  for (int m = 0; m < k; ++m)
    for (int x : submodule.elements()) {
      const int v = a.add(m, x);
      int& owner = first[static_cast<std::size_t>(v)];
      if (owner < 0) owner = m;
      else parent[static_cast<std::size_t>(find(m))] = find(owner);
    }
  int classes = 0;
  for (int m = 0; m < k; ++m) classes += find(m) == m;
  return classes;
}

json module_to_json(const ModuleAction& a, const std::string& scalar_ref) {
  const auto& s = a.scalar();
  const int k = a.carrier_order();
  json j;
  j["scalar"] = scalar_ref.empty() ? structure_to_json(s) : json(scalar_ref);
  j["carrier_order"] = k;
  json add = json::array();
  for (int x = 0; x < k; ++x) {
    json row = json::array();
    for (int y = 0; y < k; ++y) row.push_back(a.add(x, y));
    add.push_back(row);
  }
  j["carrier_addition"] = add;
  json action = json::object();
  for (int al = 0; al < s.gamma_size(); ++al)
    for (int be = 0; be < s.gamma_size(); ++be) {
      json cube = json::array();
      for (int x = 0; x < s.order(); ++x) {
        json plane = json::array();
        for (int m = 0; m < k; ++m) {
          json row = json::array();
          for (int b = 0; b < s.order(); ++b) row.push_back(a.act(x, al, m, be, b));
          plane.push_back(row);
        }
        cube.push_back(plane);
      }
      action[pair_key(al, be)] = cube;
    }
  j["action"] = action;
  return j;
}

ModuleAction module_from_json(const json& j, const std::filesystem::path& base_dir) {
  if (!j.is_object() || !j.contains("scalar")) throw InputError("module must be an object with a \"scalar\" field");
  const auto& sj = j.at("scalar");
  GammaStructure s = sj.is_string() ? load_structure(base_dir / sj.get<std::string>()) : structure_from_json(sj);
  if (!j.contains("carrier_order") || !j.at("carrier_order").is_number_integer())
    throw InputError("missing integer field \"carrier_order\"");
  const int k = j.at("carrier_order").get<int>();
  if (k < 1 || k > kMaxCarrier) throw InputError("carrier order must lie in [1, 32]");
  std::vector<int> addition;
  const auto& add = j.at("carrier_addition");
  if (!add.is_array() || static_cast<int>(add.size()) != k) throw InputError("carrier_addition must have k rows");
  for (const auto& row : add) {
    if (!row.is_array() || static_cast<int>(row.size()) != k) throw InputError("carrier_addition rows must have k entries");
    for (const auto& v : row) {
      if (!v.is_number_integer()) throw InputError("carrier_addition entries must be integers");
      addition.push_back(v.get<int>());
    }
  }
  const auto& action = j.at("action");
  if (!action.is_object()) throw InputError("action must be an object keyed by \"α,β\"");
  const int n = s.order();
  std::vector<int> table;
  for (int al = 0; al < s.gamma_size(); ++al)
    for (int be = 0; be < s.gamma_size(); ++be) {
      const auto key = pair_key(al, be);
      if (!action.contains(key)) throw InputError("action table \"" + key + "\" missing");
      const auto& cube = action.at(key);
      if (!cube.is_array() || static_cast<int>(cube.size()) != n) throw InputError("action table \"" + key + "\" malformed");
      for (const auto& plane : cube) {
        if (!plane.is_array() || static_cast<int>(plane.size()) != k) throw InputError("action table \"" + key + "\" malformed");
        for (const auto& row : plane) {
          if (!row.is_array() || static_cast<int>(row.size()) != n) throw InputError("action table \"" + key + "\" malformed");
          for (const auto& v : row) {
            if (!v.is_number_integer()) throw InputError("action entries must be integers");
            table.push_back(v.get<int>());
          }
        }
      }
    }
  return ModuleAction(std::move(s), k, std::move(addition), std::move(table));
}

ModuleAction load_module(const std::filesystem::path& path) {
  const std::string text = read_text_file(path);
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ParseError(path.string() + ": " + e.what(), e.byte);
  }
  return module_from_json(j, path.parent_path().empty() ? std::filesystem::path(".") : path.parent_path());
}

}  // namespace tgs
