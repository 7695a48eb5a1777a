#pragma once

#include <cstdint>
#include <filesystem>
#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <nlohmann/json.hpp>

#include "tgs/element_set.hpp"
#include "tgs/options.hpp"
#include "tgs/structure.hpp"
#include "tgs/verdict.hpp"

namespace tgs {

/// A finite ternary Γ-module over a scalar structure S: a carrier monoid M
/// (zero at index 0) with an action a_α m_β b ∈ M for a, b ∈ S and m ∈ M.
/// Like GammaStructure, construction checks shapes and ranges only.
class ModuleAction {
 public:
  using ActionFn = std::function<int(int a, int alpha, int m, int beta, int b)>;

  /// action index: ((α·g+β)·n + a)·k·n + m·n + b, with n = |S|, k = |M|, g = |Γ|.
  ModuleAction(GammaStructure scalar, int carrier_order, std::vector<int> carrier_addition,
               std::vector<int> action);

  static ModuleAction from_functions(GammaStructure scalar, int carrier_order,
                                     const std::function<int(int, int)>& add, const ActionFn& act);
  /// S acting on itself through its own ternary product.
  static ModuleAction regular(const GammaStructure& s);
  /// The one-element module.
  static ModuleAction zero(const GammaStructure& s);

  const GammaStructure& scalar() const { return scalar_; }
  int carrier_order() const { return k_; }
  int add(int x, int y) const { return addition_[static_cast<std::size_t>(x * k_ + y)]; }
  int act(int a, int alpha, int m, int beta, int b) const { return action_[action_index(a, alpha, m, beta, b)]; }
  std::size_t action_index(int a, int alpha, int m, int beta, int b) const;
  const std::vector<int>& carrier_addition() const { return addition_; }
  const std::vector<int>& action_table() const { return action_; }

 private:
  GammaStructure scalar_;
  int k_;
  std::vector<int> addition_;
  std::vector<int> action_;
};

/// M1: additivity in a, m and b. M2 in two readings (see ModuleAssociativity):
///   surrogate: a_α(b_γ m_δ c)_β d = b_γ(a_α m_β d)_δ c
///   printed:   a_α(b_γ m_δ c)_β d = (a_α b_γ c)_δ m_β d
/// M3: 0_α m_β b = a_α m_β 0 = 0_M. Commutative law: a_α m_β b = b_β m_α a.
struct ModuleReport {
  Verdict carrier;  ///< carrier is a commutative monoid with identity 0
  Verdict m1;
  Verdict m2_surrogate;
  Verdict m2_printed;
  Verdict m3;
  Verdict commutative;
  bool commutative_checked = false;
  ModuleAssociativity associativity = ModuleAssociativity::surrogate;

  const Verdict& m2() const {
    return associativity == ModuleAssociativity::surrogate ? m2_surrogate : m2_printed;
  }
  bool all_pass() const {
    return carrier.holds && m1.holds && m2().holds && m3.holds && (!commutative_checked || commutative.holds);
  }
};

ModuleReport verify_module_axioms(const ModuleAction& a,
                                  ModuleAssociativity assoc = ModuleAssociativity::surrogate,
                                  bool check_commutative = false);

/// Submodules ascending by size then bitmask. Throws ResourceError beyond
/// 16 carrier elements.
std::vector<ElementSet> enumerate_submodules(const ModuleAction& a);
bool is_submodule(const ModuleAction& a, ElementSet subset);
bool is_simple_module(const ModuleAction& a);

struct AnnihilatorResult {
  ElementSet set;
  bool proper = false;
  Verdict ideal;
  bool simple_module = false;
  /// Evaluated only for proper annihilators of simple modules.
  std::optional<Verdict> prime;
};

AnnihilatorResult annihilator(const ModuleAction& a);

struct PrimitiveSearchOptions {
  int carrier_cap = 0;  ///< 0 means |S|
  ModuleAssociativity associativity = ModuleAssociativity::surrogate;
  std::uint64_t node_budget = 5'000'000;
  int jobs = 1;
};

struct PrimitiveIdeal {
  ElementSet ideal;
  int carrier_order = 0;  ///< smallest carrier of a simple module realizing it
  bool prime = false;
  std::optional<Witness> prime_witness;
};

struct PrimitiveSearchResult {
  std::vector<PrimitiveIdeal> ideals;  ///< deduplicated, ascending
  std::uint64_t modules_found = 0;
  std::uint64_t simple_modules = 0;
  /// Proper annihilators of simple modules that fail to be ideals, with the
  /// ideal-test witness. These are not primitive ideals.
  std::vector<std::pair<ElementSet, Witness>> non_ideal_annihilators;
  std::uint64_t nodes = 0;
};

/// Enumerates modules on every carrier monoid (up to relabeling) of size
/// 2..carrier_cap, keeps the simple ones, and collects the proper
/// annihilators that are ideals.
/// Throws ResourceError when the cap exceeds |S| or the node budget runs out.
PrimitiveSearchResult find_primitive_ideals(const GammaStructure& s, const PrimitiveSearchOptions& options = {});

/// Additive maps with f(0) = 0 and f(a_α m_β b) = a_α f(m)_β b.
struct ModuleHomomorphism {
  std::vector<int> map;
  ElementSet kernel;
  ElementSet image;
};

/// Exhaustive over all maps; both modules must share the scalar tables.
std::vector<ModuleHomomorphism> find_module_homomorphisms(const ModuleAction& from, const ModuleAction& to);

/// Number of classes of m ~ m' iff m + k = m' + k' with k, k' in the submodule.
int quotient_carrier_size(const ModuleAction& a, ElementSet submodule);

/// {"scalar", "carrier_order", "carrier_addition", "action": {"α,β": [[[...]]]}}.
/// scalar_ref, when set, is written in place of the inline scalar structure.
nlohmann::json module_to_json(const ModuleAction& a, const std::string& scalar_ref = {});
/// A string "scalar" is resolved as a path relative to base_dir.
ModuleAction module_from_json(const nlohmann::json& j, const std::filesystem::path& base_dir = ".");
ModuleAction load_module(const std::filesystem::path& path);

}  // namespace tgs
