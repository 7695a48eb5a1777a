#pragma once

#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <vector>

#include "tgs/element_set.hpp"

namespace tgs {

/// A finite presentation of a ternary Γ-semiring: an addition table plus one
/// ternary table per ordered parameter pair (α, β). Element 0 sits at index 0.
///
/// The constructor only checks shape and index ranges; the algebraic laws are
/// the business of verify_axioms, which reports violations with witnesses.
/// Values are immutable once built and can be shared freely between threads.
class GammaStructure {
 public:
  using AdditionFn = std::function<int(int, int)>;
  using TernaryFn = std::function<int(int a, int alpha, int b, int beta, int c)>;

  /// addition: row-major n×n; ternary: index ((α·m+β)·n + a)·n² + b·n + c.
  GammaStructure(int order, int gamma_size, std::vector<int> addition,
                 std::vector<int> ternary, std::vector<std::string> names = {});

  static GammaStructure from_functions(int order, int gamma_size, const AdditionFn& add,
                                       const TernaryFn& mul,
                                       std::vector<std::string> names = {});

  int order() const { return order_; }
  int gamma_size() const { return gamma_; }
  const std::vector<std::string>& names() const { return names_; }
  ElementSet all() const { return ElementSet::full(order_); }

  int add(int a, int b) const { return addition_[static_cast<std::size_t>(a * order_ + b)]; }
  int mul(int a, int alpha, int b, int beta, int c) const {
    return ternary_[ternary_index(a, alpha, b, beta, c)];
  }

  std::size_t ternary_index(int a, int alpha, int b, int beta, int c) const {
    const auto n = static_cast<std::size_t>(order_);
    const auto pair = static_cast<std::size_t>(alpha * gamma_ + beta);
    return ((pair * n + static_cast<std::size_t>(a)) * n + static_cast<std::size_t>(b)) * n +
           static_cast<std::size_t>(c);
  }

  std::span<const std::uint8_t> addition_table() const { return addition_; }
  std::span<const std::uint8_t> ternary_tables() const { return ternary_; }

  /// True when every element has an additive inverse (with identity at 0).
  bool is_additive_group() const;

  std::string element_name(int e) const { return names_[static_cast<std::size_t>(e)]; }

  /// Table equality; display names are ignored.
  bool same_tables(const GammaStructure& other) const {
    return order_ == other.order_ && gamma_ == other.gamma_ && addition_ == other.addition_ &&
           ternary_ == other.ternary_;
  }
  friend bool operator==(const GammaStructure& a, const GammaStructure& b) {
    return a.same_tables(b) && a.names_ == b.names_;
  }

 private:
  int order_;
  int gamma_;
  std::vector<std::string> names_;
  std::vector<std::uint8_t> addition_;
  std::vector<std::uint8_t> ternary_;
};

/// Range-checked table lookup a_α b_β c.
int ternary_product(const GammaStructure& s, int a, int alpha, int b, int beta, int c);

/// Relabels elements by sigma (sigma[old] = new). sigma must fix 0.
GammaStructure apply_permutation(const GammaStructure& s, const std::vector<int>& sigma);

/// Relabels parameters by pi (pi[old] = new).
GammaStructure apply_gamma_permutation(const GammaStructure& s, const std::vector<int>& pi);

/// Product set X Γ Y Γ Z = { x_α y_β z }.
ElementSet product_set(const GammaStructure& s, ElementSet x, ElementSet y, ElementSet z);

/// "{0,2,4}" using the structure's display names.
std::string format_set(const GammaStructure& s, ElementSet set);

}  // namespace tgs
