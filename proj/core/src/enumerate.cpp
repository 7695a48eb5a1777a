#include "tgs/enumerate.hpp"

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <map>
#include <numeric>
#include <string>

#include "tgs/axioms.hpp"
#include "tgs/canonical.hpp"
#include "tgs/errors.hpp"
#include "tgs/parallel.hpp"

namespace tgs {

EnumerationLimits EnumerationLimits::from_environment() {
  EnumerationLimits limits;
  if (const char* env = std::getenv("TGS_MAX_ORDER")) {
    char* end = nullptr;
    const long v = std::strtol(env, &end, 10);
    if (end != env && *end == '\0' && v >= 1 && v <= kMaxCarrier) limits.max_order = static_cast<int>(v);
  }
  return limits;
}

namespace {

void check_caps(int n, int m, const EnumerationLimits& limits) {
  if (n < 1) throw InputError("order must be at least 1");
  if (m < 1) throw InputError("gamma size must be at least 1");
  if (n > limits.max_order)
    throw ResourceError("order " + std::to_string(n) + " exceeds the enumeration cap " +
                        std::to_string(limits.max_order));
  if (m > limits.max_gamma)
    throw ResourceError("gamma size " + std::to_string(m) + " exceeds the enumeration cap " +
                        std::to_string(limits.max_gamma));
}

// Partial associativity: every fully defined instance must agree.
bool partially_associative(const std::vector<int>& t, int n) {
  auto at = [&](int a, int b) { return t[static_cast<std::size_t>(a * n + b)]; };
  for (int a = 1; a < n; ++a)
    for (int b = 1; b < n; ++b) {
      const int ab = at(a, b);
      if (ab < 0) continue;
      for (int c = 1; c < n; ++c) {
        const int bc = at(b, c);
        if (bc < 0) continue;
        const int lhs = at(ab, c);
        const int rhs = at(a, bc);
        if (lhs >= 0 && rhs >= 0 && lhs != rhs) return false;
      }
    }
  return true;
}

std::string addition_key(const AdditionTable& t, int n, const std::vector<int>& sigma) {
  std::vector<int> inv(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) inv[static_cast<std::size_t>(sigma[static_cast<std::size_t>(i)])] = i;
  std::string key;
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      key.push_back(static_cast<char>(
          sigma[static_cast<std::size_t>(t[static_cast<std::size_t>(inv[static_cast<std::size_t>(a)] * n +
                                                                     inv[static_cast<std::size_t>(b)])])]));
  return key;
}

}  // namespace

std::vector<AdditionTable> enumerate_additive_monoids(int n, const EnumerationLimits& limits) {
  check_caps(n, 1, limits);
  std::vector<std::pair<int, int>> cells;
  for (int i = 1; i < n; ++i)
    for (int j = i; j < n; ++j) cells.emplace_back(i, j);

  AdditionTable table(static_cast<std::size_t>(n * n), -1);
  for (int i = 0; i < n; ++i) {
    table[static_cast<std::size_t>(i)] = i;
    table[static_cast<std::size_t>(i * n)] = i;
  }

  const auto sigmas = zero_fixing_permutations(n);
  std::map<std::string, AdditionTable> classes;
  auto record = [&] {
    std::string best;
    for (const auto& sigma : sigmas) {
      auto key = addition_key(table, n, sigma);
      if (best.empty() || key < best) best = std::move(key);
    }
    if (!classes.contains(best)) {
      AdditionTable canon(best.begin(), best.end());
      classes.emplace(best, std::move(canon));
    }
  };

  auto search = [&](auto&& self, std::size_t k) -> void {
    if (k == cells.size()) {
      record();
      return;
    }
    const auto [i, j] = cells[k];
    for (int v = 0; v < n; ++v) {
      table[static_cast<std::size_t>(i * n + j)] = v;
      table[static_cast<std::size_t>(j * n + i)] = v;
      if (partially_associative(table, n)) self(self, k + 1);
    }
    table[static_cast<std::size_t>(i * n + j)] = -1;
    table[static_cast<std::size_t>(j * n + i)] = -1;
  };
  search(search, 0);

  std::vector<AdditionTable> out;
  for (auto& [key, t] : classes) out.push_back(std::move(t));
  return out;
}

namespace {

struct Constraint {
  int x;    // orbit of f(x, ...)
  int y;    // orbit of f(y, ...)
  int sum;  // orbit of f(x + y, ...), or -1 when that cell is a zero cell
};

// Backtracking over commutativity orbits of the nonzero-argument cells.
class TernarySearch {
 public:
  TernarySearch(int n, int m, AdditionTable addition)
      : n_(n), m_(m), addition_(std::move(addition)) {
    build_orbits();
    build_constraints();
  }

  int orbit_count() const { return static_cast<int>(orbit_cells_.size()); }

  /// Consistent assignments of the first `depth` orbits.
  std::vector<std::vector<int>> prefixes(int depth) const {
    std::vector<std::vector<int>> out;
    std::vector<int> values(orbit_cells_.size(), -1);
    auto rec = [&](auto&& self, int k) -> void {
      if (k == depth) {
        out.emplace_back(values.begin(), values.begin() + depth);
        return;
      }
      for (int v = 0; v < n_; ++v) {
        values[static_cast<std::size_t>(k)] = v;
        if (consistent(values, k)) self(self, k + 1);
      }
      values[static_cast<std::size_t>(k)] = -1;
    };
    rec(rec, 0);
    return out;
  }

  template <class Emit>
  void run(const std::vector<int>& prefix, std::atomic<std::uint64_t>& nodes, std::uint64_t budget,
           Emit&& emit) const {
    std::vector<int> values(orbit_cells_.size(), -1);
    std::copy(prefix.begin(), prefix.end(), values.begin());
    auto rec = [&](auto&& self, int k) -> void {
      const auto visited = nodes.fetch_add(1, std::memory_order_relaxed);
      if (budget != 0 && visited >= budget)
        throw ResourceError("search-node budget exhausted");
      if (k == orbit_count()) {
        emit(materialize(values));
        return;
      }
      for (int v = 0; v < n_; ++v) {
        values[static_cast<std::size_t>(k)] = v;
        if (consistent(values, k)) self(self, k + 1);
      }
      values[static_cast<std::size_t>(k)] = -1;
    };
    rec(rec, static_cast<int>(prefix.size()));
  }

 private:
  std::size_t index(int alpha, int beta, int a, int b, int c) const {
    const auto n = static_cast<std::size_t>(n_);
    return ((static_cast<std::size_t>(alpha * m_ + beta) * n + static_cast<std::size_t>(a)) * n +
            static_cast<std::size_t>(b)) * n + static_cast<std::size_t>(c);
  }
  int add(int a, int b) const { return addition_[static_cast<std::size_t>(a * n_ + b)]; }

  void build_orbits() {
    const std::size_t total = static_cast<std::size_t>(m_ * m_) * static_cast<std::size_t>(n_ * n_ * n_);
    std::vector<std::size_t> parent(total);
    std::iota(parent.begin(), parent.end(), std::size_t{0});
    auto find = [&](std::size_t x) {
      while (parent[x] != x) x = parent[x] = parent[parent[x]];
      return x;
    };
    auto unite = [&](std::size_t x, std::size_t y) {
      x = find(x);
      y = find(y);
      if (x != y) parent[std::max(x, y)] = std::min(x, y);
    };
    for (int al = 0; al < m_; ++al)
      for (int be = 0; be < m_; ++be)
        for (int a = 1; a < n_; ++a)
          for (int b = 1; b < n_; ++b)
            for (int c = 1; c < n_; ++c) {
              const auto cell = index(al, be, a, b, c);
              unite(cell, index(be, al, b, a, c));
              unite(cell, index(al, be, c, b, a));
            }
    orbit_of_.assign(total, -1);
    std::map<std::size_t, int> root_to_orbit;
    for (int al = 0; al < m_; ++al)
      for (int be = 0; be < m_; ++be)
        for (int a = 1; a < n_; ++a)
          for (int b = 1; b < n_; ++b)
            for (int c = 1; c < n_; ++c) {
              const auto cell = index(al, be, a, b, c);
              const auto root = find(cell);
              auto it = root_to_orbit.find(root);
              if (it == root_to_orbit.end()) {
                it = root_to_orbit.emplace(root, static_cast<int>(orbit_cells_.size())).first;
                orbit_cells_.emplace_back();
              }
              orbit_of_[cell] = it->second;
              orbit_cells_[static_cast<std::size_t>(it->second)].push_back(cell);
            }
  }

  void build_constraints() {
    buckets_.assign(orbit_cells_.size(), {});
    for (int pos = 0; pos < 3; ++pos)
      for (int al = 0; al < m_; ++al)
        for (int be = 0; be < m_; ++be)
          for (int x = 1; x < n_; ++x)
            for (int y = x; y < n_; ++y)
              for (int u = 1; u < n_; ++u)
                for (int v = 1; v < n_; ++v) {
                  auto cell = [&](int slot) {
                    switch (pos) {
                      case 0: return index(al, be, slot, u, v);
                      case 1: return index(al, be, u, slot, v);
                      default: return index(al, be, u, v, slot);
                    }
                  };
                  const int s = add(x, y);
                  Constraint con{orbit_of_[cell(x)], orbit_of_[cell(y)], s == 0 ? -1 : orbit_of_[cell(s)]};
                  const int last = std::max({con.x, con.y, con.sum});
                  buckets_[static_cast<std::size_t>(last)].push_back(con);
                }
  }

  bool consistent(const std::vector<int>& values, int k) const {
    for (const auto& con : buckets_[static_cast<std::size_t>(k)]) {
      const int lhs = con.sum < 0 ? 0 : values[static_cast<std::size_t>(con.sum)];
      const int rhs = add(values[static_cast<std::size_t>(con.x)], values[static_cast<std::size_t>(con.y)]);
      if (lhs != rhs) return false;
    }
    return true;
  }

  GammaStructure materialize(const std::vector<int>& values) const {
    std::vector<int> ternary(orbit_of_.size(), 0);
    for (std::size_t o = 0; o < orbit_cells_.size(); ++o)
      for (auto cell : orbit_cells_[o]) ternary[cell] = values[o];
    return GammaStructure(n_, m_, addition_, std::move(ternary));
  }

  int n_;
  int m_;
  AdditionTable addition_;
  std::vector<int> orbit_of_;
  std::vector<std::vector<std::size_t>> orbit_cells_;
  std::vector<std::vector<Constraint>> buckets_;
};

}  // namespace

EnumerationResult enumerate_structures(int n, int m, const EnumerationOptions& options) {
  check_caps(n, m, options.limits);
  const auto monoids = enumerate_additive_monoids(n, options.limits);

  struct Task {
    std::size_t search;
    std::vector<int> prefix;
  };
  std::vector<TernarySearch> searches;
  std::vector<Task> tasks;
  for (const auto& table : monoids) {
    searches.emplace_back(n, m, table);
    const auto& search = searches.back();
    const int depth = std::min(search.orbit_count(), 2);
    for (auto& prefix : search.prefixes(depth)) tasks.push_back({searches.size() - 1, std::move(prefix)});
  }

  std::vector<std::vector<GammaStructure>> found(tasks.size());
  std::atomic<std::uint64_t> nodes{0};
  try {
    parallel_for(tasks.size(), options.jobs, [&](std::size_t i) {
      const auto& task = tasks[i];
      searches[task.search].run(task.prefix, nodes, options.limits.node_budget,
                                [&](GammaStructure s) {
                                  if (check_t2(s).holds) found[i].push_back(std::move(s));
                                });
    });
  } catch (const ResourceError& e) {
    std::size_t emitted = 0;
    for (const auto& f : found) emitted += f.size();
    throw ResourceError(e.what(), "partial: " + std::to_string(emitted) + " structures after " +
                                      std::to_string(nodes.load()) + " nodes");
  }

  EnumerationResult result;
  result.additive_monoids = monoids.size();
  result.nodes = nodes.load();
  for (auto& batch : found)
    for (auto& s : batch) result.structures.push_back(std::move(s));
  return result;
}

}  // namespace tgs
