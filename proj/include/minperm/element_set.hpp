#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

namespace minperm {

using ElementId = std::uint32_t;

/// Fixed-universe bitset over element ids. Subgroups, cores and socle data are
/// all stored as these.
class ElementSet {
public:
  ElementSet() = default;
  explicit ElementSet(std::size_t universe)
      : universe_(universe), words_((universe + 63) / 64, 0) {}

  static ElementSet full(std::size_t universe);

  std::size_t universe() const noexcept { return universe_; }

  bool contains(ElementId x) const noexcept {
    return (words_[x >> 6] >> (x & 63)) & 1u;
  }
  void insert(ElementId x) noexcept { words_[x >> 6] |= std::uint64_t{1} << (x & 63); }

  std::size_t count() const noexcept;
  bool empty() const noexcept;
  bool is_subset_of(const ElementSet &other) const noexcept;
  bool intersects(const ElementSet &other) const noexcept;

  /// *this = a & b, reusing this set's storage.
  void assign_intersection(const ElementSet &a, const ElementSet &b) {
    universe_ = a.universe_;
    words_.resize(a.words_.size());
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] = a.words_[i] & b.words_[i];
  }

  ElementSet &operator&=(const ElementSet &other) noexcept;
  ElementSet &operator|=(const ElementSet &other) noexcept;
  friend ElementSet operator&(ElementSet a, const ElementSet &b) noexcept { return a &= b; }
  friend ElementSet operator|(ElementSet a, const ElementSet &b) noexcept { return a |= b; }

  std::vector<ElementId> to_vector() const;

  template <class F>
  void for_each(F &&f) const {
    for (std::size_t w = 0; w < words_.size(); ++w) {
      std::uint64_t bits = words_[w];
      while (bits != 0) {
        const int b = std::countr_zero(bits);
        f(static_cast<ElementId>(w * 64 + b));
        bits &= bits - 1;
      }
    }
  }

  std::span<const std::uint64_t> words() const noexcept { return words_; }
  std::size_t hash() const noexcept;

  friend bool operator==(const ElementSet &a, const ElementSet &b) noexcept {
    return a.universe_ == b.universe_ && a.words_ == b.words_;
  }

private:
  std::size_t universe_ = 0;
  std::vector<std::uint64_t> words_;
};

/// Lexicographic order on the sorted element-id lists of two sets.
bool lex_less(const ElementSet &a, const ElementSet &b) noexcept;

struct ElementSetHash {
  std::size_t operator()(const ElementSet &s) const noexcept { return s.hash(); }
};

}  // namespace minperm
