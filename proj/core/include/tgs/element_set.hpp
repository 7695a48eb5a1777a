#pragma once

#include <bit>
#include <compare>
#include <cstdint>
#include <initializer_list>
#include <string>
#include <vector>

namespace tgs {

/// Hard limit on carrier size imposed by the bitmask representation.
inline constexpr int kMaxCarrier = 32;

/// A subset of element indices stored as a bitmask.
class ElementSet {
 public:
  constexpr ElementSet() = default;
  constexpr explicit ElementSet(std::uint32_t bits) : bits_(bits) {}

  static ElementSet of(std::initializer_list<int> elements) {
    ElementSet s;
    for (int e : elements) s.insert(e);
    return s;
  }
  static ElementSet of(const std::vector<int>& elements) {
    ElementSet s;
    for (int e : elements) s.insert(e);
    return s;
  }
  static constexpr ElementSet full(int n) {
    return ElementSet(n >= 32 ? ~std::uint32_t{0} : ((std::uint32_t{1} << n) - 1));
  }
  static constexpr ElementSet zero() { return ElementSet(1); }

  constexpr std::uint32_t bits() const { return bits_; }
  constexpr bool contains(int e) const { return (bits_ >> e) & 1u; }
  constexpr void insert(int e) { bits_ |= std::uint32_t{1} << e; }
  constexpr void erase(int e) { bits_ &= ~(std::uint32_t{1} << e); }
  constexpr int size() const { return std::popcount(bits_); }
  constexpr bool empty() const { return bits_ == 0; }
  constexpr bool subset_of(ElementSet other) const { return (bits_ & ~other.bits_) == 0; }
  constexpr bool proper_subset_of(ElementSet other) const {
    return subset_of(other) && bits_ != other.bits_;
  }

  std::vector<int> elements() const {
    std::vector<int> out;
    for (std::uint32_t b = bits_; b != 0; b &= b - 1) out.push_back(std::countr_zero(b));
    return out;
  }

  friend constexpr ElementSet operator&(ElementSet a, ElementSet b) {
    return ElementSet(a.bits_ & b.bits_);
  }
  friend constexpr ElementSet operator|(ElementSet a, ElementSet b) {
    return ElementSet(a.bits_ | b.bits_);
  }
  friend constexpr ElementSet operator^(ElementSet a, ElementSet b) {
    return ElementSet(a.bits_ ^ b.bits_);
  }
  friend constexpr bool operator==(ElementSet, ElementSet) = default;

 private:
  std::uint32_t bits_ = 0;
};

/// Ideal-list order: ascending by cardinality, then by bitmask.
constexpr bool size_then_bits_less(ElementSet a, ElementSet b) {
  if (a.size() != b.size()) return a.size() < b.size();
  return a.bits() < b.bits();
}

/// "{0,2,4}" using element indices.
std::string to_string(ElementSet s);

}  // namespace tgs
