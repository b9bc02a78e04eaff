#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <vector>

namespace solviso {

using Element = std::uint32_t;

/// Fixed-capacity bitset over element indices 0..n-1.
class ElementSet {
 public:
  ElementSet() = default;
  explicit ElementSet(std::size_t n) : n_(n), words_((n + 63) / 64, 0) {}

  std::size_t universe() const noexcept { return n_; }

  bool contains(Element x) const noexcept { return (words_[x >> 6] >> (x & 63)) & 1u; }
  void insert(Element x) noexcept { words_[x >> 6] |= std::uint64_t{1} << (x & 63); }
  void erase(Element x) noexcept { words_[x >> 6] &= ~(std::uint64_t{1} << (x & 63)); }

  std::size_t count() const noexcept {
    std::size_t c = 0;
    for (auto w : words_) c += static_cast<std::size_t>(std::popcount(w));
    return c;
  }
  bool empty() const noexcept {
    for (auto w : words_)
      if (w) return false;
    return true;
  }

  ElementSet& operator&=(const ElementSet& o) noexcept {
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= o.words_[i];
    return *this;
  }
  ElementSet& operator|=(const ElementSet& o) noexcept {
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] |= o.words_[i];
    return *this;
  }
  friend ElementSet operator&(ElementSet a, const ElementSet& b) { return a &= b; }
  friend ElementSet operator|(ElementSet a, const ElementSet& b) { return a |= b; }

  bool is_subset_of(const ElementSet& o) const noexcept {
    for (std::size_t i = 0; i < words_.size(); ++i)
      if (words_[i] & ~o.words_[i]) return false;
    return true;
  }

  friend bool operator==(const ElementSet&, const ElementSet&) = default;

  // Lexicographic order on the membership vector read from element 0 upward,
  // where membership sorts before non-membership.
  friend bool lex_less(const ElementSet& a, const ElementSet& b) noexcept {
    for (std::size_t i = 0; i < a.words_.size(); ++i) {
      const auto diff = a.words_[i] ^ b.words_[i];
      if (diff) return (a.words_[i] >> std::countr_zero(diff)) & 1u;
    }
    return false;
  }

  template <typename F>
  void for_each(F&& f) const {
    for (std::size_t i = 0; i < words_.size(); ++i) {
      auto w = words_[i];
      while (w) {
        const auto bit = std::countr_zero(w);
        f(static_cast<Element>(i * 64 + static_cast<std::size_t>(bit)));
        w &= w - 1;
      }
    }
  }

  std::vector<Element> members() const {
    std::vector<Element> out;
    out.reserve(count());
    for_each([&](Element x) { out.push_back(x); });
    return out;
  }

  const std::vector<std::uint64_t>& words() const noexcept { return words_; }

  std::size_t hash() const noexcept {
    std::size_t h = n_;
    for (auto w : words_) h = h * 0x9e3779b97f4a7c15ull + std::hash<std::uint64_t>{}(w);
    return h;
  }

 private:
  std::size_t n_ = 0;
  std::vector<std::uint64_t> words_;
};

struct ElementSetHash {
  std::size_t operator()(const ElementSet& s) const noexcept { return s.hash(); }
};

}  // namespace solviso
