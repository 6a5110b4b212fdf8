#pragma once

#include "troplin/error.hpp"

#include <bit>
#include <compare>
#include <cstdint>
#include <initializer_list>
#include <iterator>
#include <string>
#include <vector>

namespace troplin {

inline constexpr int kMaxNodes = 64;

// A set of 1-based node labels, stored as a bitmask (bit v-1 for node v).
class NodeSet {
 public:
  class iterator {
   public:
    using iterator_category = std::forward_iterator_tag;
    using value_type = int;
    using difference_type = std::ptrdiff_t;
    using pointer = const int*;
    using reference = int;

    constexpr iterator() = default;
    constexpr explicit iterator(std::uint64_t rest) : rest_(rest) {}
    constexpr int operator*() const { return std::countr_zero(rest_) + 1; }
    constexpr iterator& operator++() {
      rest_ &= rest_ - 1;
      return *this;
    }
    constexpr iterator operator++(int) {
      iterator old = *this;
      ++*this;
      return old;
    }
    constexpr bool operator==(const iterator&) const = default;

   private:
    std::uint64_t rest_ = 0;
  };

  constexpr NodeSet() = default;
  NodeSet(std::initializer_list<int> nodes) {
    for (int v : nodes) insert(v);
  }
  explicit NodeSet(const std::vector<int>& nodes) {
    for (int v : nodes) insert(v);
  }

  static constexpr NodeSet from_mask(std::uint64_t mask) {
    NodeSet s;
    s.mask_ = mask;
    return s;
  }
  // {1, ..., n}
  static constexpr NodeSet first(int n) {
    return from_mask(n >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1);
  }
  static constexpr NodeSet single(int v) { return from_mask(bit(v)); }

  constexpr std::uint64_t mask() const { return mask_; }
  constexpr bool empty() const { return mask_ == 0; }
  constexpr int size() const { return std::popcount(mask_); }
  constexpr bool contains(int v) const {
    return v >= 1 && v <= kMaxNodes && (mask_ & bit(v)) != 0;
  }
  constexpr bool intersects(NodeSet other) const { return (mask_ & other.mask_) != 0; }
  constexpr bool subset_of(NodeSet other) const { return (mask_ & ~other.mask_) == 0; }
  // Largest label present, 0 when empty.
  constexpr int max() const { return empty() ? 0 : 64 - std::countl_zero(mask_); }

  void insert(int v) {
    check(v);
    mask_ |= bit(v);
  }
  void erase(int v) {
    check(v);
    mask_ &= ~bit(v);
  }

  constexpr iterator begin() const { return iterator(mask_); }
  constexpr iterator end() const { return iterator(0); }

  std::vector<int> to_vector() const { return {begin(), end()}; }
  std::string to_string() const;  // "{1,2}"

  constexpr NodeSet operator|(NodeSet o) const { return from_mask(mask_ | o.mask_); }
  constexpr NodeSet operator&(NodeSet o) const { return from_mask(mask_ & o.mask_); }
  constexpr NodeSet operator-(NodeSet o) const { return from_mask(mask_ & ~o.mask_); }
  constexpr NodeSet& operator|=(NodeSet o) { mask_ |= o.mask_; return *this; }
  constexpr NodeSet& operator&=(NodeSet o) { mask_ &= o.mask_; return *this; }
  constexpr NodeSet& operator-=(NodeSet o) { mask_ &= ~o.mask_; return *this; }

  constexpr bool operator==(const NodeSet&) const = default;
  // Lexicographic on the ascending element lists, so {1,3} < {2}.
  std::strong_ordering operator<=>(const NodeSet& o) const {
    std::uint64_t a = mask_, b = o.mask_;
    while (a != 0 && b != 0) {
      int x = std::countr_zero(a), y = std::countr_zero(b);
      if (x != y) return x < y ? std::strong_ordering::less : std::strong_ordering::greater;
      a &= a - 1;
      b &= b - 1;
    }
    if (a == b) return std::strong_ordering::equal;
    return a == 0 ? std::strong_ordering::less : std::strong_ordering::greater;
  }

 private:
  static constexpr std::uint64_t bit(int v) { return std::uint64_t{1} << (v - 1); }
  static void check(int v) {
    if (v < 1 || v > kMaxNodes)
      throw DomainError("node label " + std::to_string(v) + " outside 1.." +
                        std::to_string(kMaxNodes));
  }

  std::uint64_t mask_ = 0;
};

inline std::string NodeSet::to_string() const {
  std::string out = "{";
  bool first_item = true;
  for (int v : *this) {
    if (!first_item) out += ',';
    out += std::to_string(v);
    first_item = false;
  }
  return out + "}";
}

}  // namespace troplin
