#pragma once

#include <bit>
#include <cassert>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <limits>
#include <string>
#include <vector>

namespace nextclosure {

/// Fixed-width bit vector over the index range [0, size()).
///
/// Used for attribute subsets, object subsets and footprints. All binary
/// operations require operands of equal width.
class BitSet {
 public:
  static constexpr std::size_t npos = std::numeric_limits<std::size_t>::max();

  BitSet() = default;
  explicit BitSet(std::size_t size) : size_(size), words_((size + 63) / 64, 0) {}

  static BitSet full(std::size_t size) {
    BitSet b(size);
    for (auto& w : b.words_) w = ~std::uint64_t{0};
    b.trim();
    return b;
  }

  static BitSet from_indices(std::size_t size, std::initializer_list<std::size_t> indices) {
    BitSet b(size);
    for (auto i : indices) b.set(i);
    return b;
  }

  static BitSet from_indices(std::size_t size, const std::vector<std::size_t>& indices) {
    BitSet b(size);
    for (auto i : indices) b.set(i);
    return b;
  }

  /// Low bits of `mask` become members; size must be at most 64.
  static BitSet from_mask(std::size_t size, std::uint64_t mask) {
    assert(size <= 64);
    BitSet b(size);
    if (size > 0) b.words_[0] = mask;
    b.trim();
    return b;
  }

  std::size_t size() const { return size_; }

  bool test(std::size_t i) const {
    assert(i < size_);
    return (words_[i / 64] >> (i % 64)) & 1U;
  }

  BitSet& set(std::size_t i, bool value = true) {
    assert(i < size_);
    const std::uint64_t bit = std::uint64_t{1} << (i % 64);
    if (value)
      words_[i / 64] |= bit;
    else
      words_[i / 64] &= ~bit;
    return *this;
  }

  BitSet& reset(std::size_t i) { return set(i, false); }

  std::size_t count() const {
    std::size_t n = 0;
    for (auto w : words_) n += static_cast<std::size_t>(std::popcount(w));
    return n;
  }

  bool none() const {
    for (auto w : words_)
      if (w != 0) return false;
    return true;
  }
  bool any() const { return !none(); }
  bool all() const { return count() == size_; }

  bool is_subset_of(const BitSet& other) const {
    assert(size_ == other.size_);
    for (std::size_t k = 0; k < words_.size(); ++k)
      if (words_[k] & ~other.words_[k]) return false;
    return true;
  }
  bool is_superset_of(const BitSet& other) const { return other.is_subset_of(*this); }

  /// Smallest member at or after `from`, or npos.
  std::size_t find_next(std::size_t from) const {
    if (from >= size_) return npos;
    std::size_t k = from / 64;
    std::uint64_t w = words_[k] & (~std::uint64_t{0} << (from % 64));
    while (true) {
      if (w != 0) return k * 64 + static_cast<std::size_t>(std::countr_zero(w));
      if (++k == words_.size()) return npos;
      w = words_[k];
    }
  }
  std::size_t find_first() const { return find_next(0); }

  std::vector<std::size_t> indices() const {
    std::vector<std::size_t> out;
    for (auto i = find_first(); i != npos; i = find_next(i + 1)) out.push_back(i);
    return out;
  }

  BitSet& operator&=(const BitSet& o) {
    assert(size_ == o.size_);
    for (std::size_t k = 0; k < words_.size(); ++k) words_[k] &= o.words_[k];
    return *this;
  }
  BitSet& operator|=(const BitSet& o) {
    assert(size_ == o.size_);
    for (std::size_t k = 0; k < words_.size(); ++k) words_[k] |= o.words_[k];
    return *this;
  }
  BitSet& operator^=(const BitSet& o) {
    assert(size_ == o.size_);
    for (std::size_t k = 0; k < words_.size(); ++k) words_[k] ^= o.words_[k];
    return *this;
  }

  friend BitSet operator&(BitSet a, const BitSet& b) { return a &= b; }
  friend BitSet operator|(BitSet a, const BitSet& b) { return a |= b; }
  friend BitSet operator^(BitSet a, const BitSet& b) { return a ^= b; }
  BitSet operator~() const {
    BitSet r = *this;
    for (auto& w : r.words_) w = ~w;
    r.trim();
    return r;
  }

  friend bool operator==(const BitSet&, const BitSet&) = default;
  friend auto operator<=>(const BitSet&, const BitSet&) = default;

  std::size_t hash() const {
    std::size_t h = std::hash<std::size_t>{}(size_);
    for (auto w : words_) h ^= std::hash<std::uint64_t>{}(w) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    return h;
  }

  /// "{0,2,5}"
  std::string to_string() const;

 private:
  void trim() {
    if (size_ % 64 != 0 && !words_.empty()) words_.back() &= (std::uint64_t{1} << (size_ % 64)) - 1;
  }

  std::size_t size_ = 0;
  std::vector<std::uint64_t> words_;
};

}  // namespace nextclosure

template <>
struct std::hash<nextclosure::BitSet> {
  std::size_t operator()(const nextclosure::BitSet& b) const noexcept { return b.hash(); }
};
