#include "galois/bitset.hpp"

#include <algorithm>
#include <bit>

namespace galois {

Bitset::Bitset(std::size_t width) : width_(width), words_((width + 63) / 64, 0) {}

void Bitset::setAll() noexcept {
  std::fill(words_.begin(), words_.end(), ~std::uint64_t{0});
  trim();
}

void Bitset::trim() noexcept {
  if (const std::size_t tail = width_ & 63; tail != 0 && !words_.empty()) {
    words_.back() &= (std::uint64_t{1} << tail) - 1;
  }
}

std::size_t Bitset::count() const noexcept {
  std::size_t n = 0;
  for (auto w : words_) n += static_cast<std::size_t>(std::popcount(w));
  return n;
}

bool Bitset::none() const noexcept {
  return std::all_of(words_.begin(), words_.end(), [](auto w) { return w == 0; });
}

bool Bitset::all() const noexcept { return count() == width_; }

std::size_t Bitset::findNext(std::size_t from) const noexcept {
  if (from >= width_) return npos;
  std::size_t w = from >> 6;
  std::uint64_t word = words_[w] & (~std::uint64_t{0} << (from & 63));
  while (true) {
    if (word != 0) return (w << 6) + static_cast<std::size_t>(std::countr_zero(word));
    if (++w == words_.size()) return npos;
    word = words_[w];
  }
}

bool Bitset::isSubsetOf(const Bitset& other) const noexcept {
  for (std::size_t i = 0; i < words_.size(); ++i) {
    if ((words_[i] & ~other.words_[i]) != 0) return false;
  }
  return true;
}

bool Bitset::intersects(const Bitset& other) const noexcept {
  for (std::size_t i = 0; i < words_.size(); ++i) {
    if ((words_[i] & other.words_[i]) != 0) return true;
  }
  return false;
}

Bitset& Bitset::operator|=(const Bitset& other) noexcept {
  for (std::size_t i = 0; i < words_.size(); ++i) words_[i] |= other.words_[i];
  return *this;
}

Bitset& Bitset::operator&=(const Bitset& other) noexcept {
  for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= other.words_[i];
  return *this;
}

Bitset& Bitset::subtract(const Bitset& other) noexcept {
  for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= ~other.words_[i];
  return *this;
}

Bitset Bitset::fromWord(std::size_t width, std::uint64_t word) {
  Bitset b(width);
  if (!b.words_.empty()) b.words_[0] = word;
  b.trim();
  return b;
}

std::size_t Bitset::hash() const noexcept {
  std::uint64_t h = 0x9e3779b97f4a7c15ull ^ width_;
  for (auto w : words_) {
    h ^= w + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
  }
  return static_cast<std::size_t>(h);
}

std::strong_ordering operator<=>(const Bitset& a, const Bitset& b) {
  if (auto c = a.width_ <=> b.width_; c != 0) return c;
  // Compare as integers with bit 0 least significant.
  for (std::size_t i = a.words_.size(); i-- > 0;) {
    if (auto c = a.words_[i] <=> b.words_[i]; c != 0) return c;
  }
  return std::strong_ordering::equal;
}

}  // namespace galois
