#include "minperm/element_set.hpp"

namespace minperm {

ElementSet ElementSet::full(std::size_t universe) {
  ElementSet s(universe);
  for (std::size_t x = 0; x < universe; ++x) s.insert(static_cast<ElementId>(x));
  return s;
}

std::size_t ElementSet::count() const noexcept {
  std::size_t c = 0;
  for (auto w : words_) c += static_cast<std::size_t>(std::popcount(w));
  return c;
}

bool ElementSet::empty() const noexcept {
  for (auto w : words_)
    if (w != 0) return false;
  return true;
}

bool ElementSet::is_subset_of(const ElementSet &other) const noexcept {
  for (std::size_t i = 0; i < words_.size(); ++i)
    if ((words_[i] & ~other.words_[i]) != 0) return false;
  return true;
}

bool ElementSet::intersects(const ElementSet &other) const noexcept {
  for (std::size_t i = 0; i < words_.size(); ++i)
    if ((words_[i] & other.words_[i]) != 0) return true;
  return false;
}

ElementSet &ElementSet::operator&=(const ElementSet &other) noexcept {
  for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= other.words_[i];
  return *this;
}

ElementSet &ElementSet::operator|=(const ElementSet &other) noexcept {
  for (std::size_t i = 0; i < words_.size(); ++i) words_[i] |= other.words_[i];
  return *this;
}

std::vector<ElementId> ElementSet::to_vector() const {
  std::vector<ElementId> out;
  out.reserve(count());
  for_each([&](ElementId x) { out.push_back(x); });
  return out;
}

std::size_t ElementSet::hash() const noexcept {
  // splitmix-style mixing per word
  std::uint64_t h = 0x9e3779b97f4a7c15ull ^ universe_;
  for (auto w : words_) {
    std::uint64_t z = w + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    h ^= z ^ (z >> 31);
  }
  return static_cast<std::size_t>(h);
}

bool lex_less(const ElementSet &a, const ElementSet &b) noexcept {
  const auto wa = a.words();
  const auto wb = b.words();
  for (std::size_t i = 0; i < wa.size(); ++i) {
    const std::uint64_t diff = wa[i] ^ wb[i];
    if (diff == 0) continue;
    const int bit = std::countr_zero(diff);
    const bool in_a = (wa[i] >> bit) & 1u;
    // Does the set lacking the first differing element have anything beyond it?
    const auto &other = in_a ? wb : wa;
    bool other_continues = (bit < 63) && ((other[i] >> bit) >> 1) != 0;
    for (std::size_t j = i + 1; !other_continues && j < other.size(); ++j)
      other_continues = other[j] != 0;
    // If it does, the set holding the smaller element sorts first; otherwise
    // the other set is a proper prefix.
    return in_a ? other_continues : !other_continues;
  }
  return false;
}

}  // namespace minperm
