#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

namespace qk {

/// Index of an element in a finite carrier.
using Element = std::uint32_t;

/// A subset of {0, ..., universe-1}, stored as a packed bitset.
class ElementSet {
 public:
  class const_iterator {
   public:
    using value_type = Element;
    using difference_type = std::ptrdiff_t;

    const_iterator() = default;
    const_iterator(const ElementSet* set, std::size_t pos) : set_(set), pos_(pos) { skip(); }

    Element operator*() const { return static_cast<Element>(pos_); }
    const_iterator& operator++() {
      ++pos_;
      skip();
      return *this;
    }
    const_iterator operator++(int) {
      auto tmp = *this;
      ++*this;
      return tmp;
    }
    bool operator==(const const_iterator& o) const { return pos_ == o.pos_; }

   private:
    void skip() {
      const std::size_t n = set_->universe_;
      while (pos_ < n) {
        const std::uint64_t word = set_->words_[pos_ / 64] >> (pos_ % 64);
        if (word != 0) {
          pos_ += static_cast<std::size_t>(std::countr_zero(word));
          return;
        }
        pos_ = (pos_ / 64 + 1) * 64;
      }
      pos_ = n;
    }

    const ElementSet* set_ = nullptr;
    std::size_t pos_ = 0;
  };

  ElementSet() = default;
  explicit ElementSet(std::size_t universe) : universe_(universe), words_((universe + 63) / 64, 0) {}

  static ElementSet full(std::size_t universe) {
    ElementSet s(universe);
    for (auto& w : s.words_) w = ~std::uint64_t{0};
    s.trim();
    return s;
  }

  static ElementSet of(std::size_t universe, std::initializer_list<Element> xs) {
    ElementSet s(universe);
    for (Element x : xs) s.insert(x);
    return s;
  }

  /// Builds the set whose members are the set bits of `mask` (universe <= 64).
  static ElementSet from_mask(std::size_t universe, std::uint64_t mask) {
    ElementSet s(universe);
    if (!s.words_.empty()) s.words_[0] = mask;
    s.trim();
    return s;
  }

  std::size_t universe() const { return universe_; }

  bool contains(Element x) const { return x < universe_ && ((words_[x / 64] >> (x % 64)) & 1U) != 0; }
  void insert(Element x) { words_[x / 64] |= std::uint64_t{1} << (x % 64); }
  void erase(Element x) { words_[x / 64] &= ~(std::uint64_t{1} << (x % 64)); }

  std::size_t count() const {
    std::size_t c = 0;
    for (auto w : words_) c += static_cast<std::size_t>(std::popcount(w));
    return c;
  }
  bool empty() const {
    for (auto w : words_)
      if (w != 0) return false;
    return true;
  }

  bool is_subset_of(const ElementSet& o) const {
    for (std::size_t i = 0; i < words_.size(); ++i)
      if ((words_[i] & ~o.words_[i]) != 0) return false;
    return true;
  }
  bool intersects(const ElementSet& o) const {
    for (std::size_t i = 0; i < words_.size(); ++i)
      if ((words_[i] & o.words_[i]) != 0) return true;
    return false;
  }

  std::optional<Element> first() const {
    auto it = begin();
    if (it == end()) return std::nullopt;
    return *it;
  }

  ElementSet& operator&=(const ElementSet& o) {
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= o.words_[i];
    return *this;
  }
  ElementSet& operator|=(const ElementSet& o) {
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] |= o.words_[i];
    return *this;
  }
  /// Set difference.
  ElementSet& operator-=(const ElementSet& o) {
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= ~o.words_[i];
    return *this;
  }
  friend ElementSet operator&(ElementSet a, const ElementSet& b) { return a &= b; }
  friend ElementSet operator|(ElementSet a, const ElementSet& b) { return a |= b; }
  friend ElementSet operator-(ElementSet a, const ElementSet& b) { return a -= b; }

  ElementSet complement() const {
    ElementSet c(universe_);
    for (std::size_t i = 0; i < words_.size(); ++i) c.words_[i] = ~words_[i];
    c.trim();
    return c;
  }

  std::vector<Element> to_vector() const { return {begin(), end()}; }

  const_iterator begin() const { return {this, 0}; }
  const_iterator end() const { return {this, universe_}; }

  bool operator==(const ElementSet&) const = default;

  /// Orders by cardinality first, then lexicographically by lowest differing member.
  /// Gives deterministic ordering of families of subsets.
  friend bool size_then_lex_less(const ElementSet& a, const ElementSet& b) {
    const auto ca = a.count(), cb = b.count();
    if (ca != cb) return ca < cb;
    for (std::size_t i = 0; i < a.words_.size(); ++i) {
      if (a.words_[i] == b.words_[i]) continue;
      const std::uint64_t diff = a.words_[i] ^ b.words_[i];
      const auto bit = std::countr_zero(diff);
      return ((a.words_[i] >> bit) & 1U) != 0;
    }
    return false;
  }

 private:
  void trim() {
    if (universe_ % 64 != 0 && !words_.empty()) words_.back() &= (std::uint64_t{1} << (universe_ % 64)) - 1;
  }

  std::size_t universe_ = 0;
  std::vector<std::uint64_t> words_;
};

}  // namespace qk
