#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <vector>

namespace galois {

/// Fixed-width dense bitset. Width is part of the value, so two empty sets of
/// different widths compare unequal.
class Bitset {
 public:
  static constexpr std::size_t npos = static_cast<std::size_t>(-1);

  Bitset() = default;
  explicit Bitset(std::size_t width);

  std::size_t width() const noexcept { return width_; }

  bool test(std::size_t i) const noexcept {
    return (words_[i >> 6] >> (i & 63)) & 1u;
  }
  void set(std::size_t i) noexcept { words_[i >> 6] |= std::uint64_t{1} << (i & 63); }
  void reset(std::size_t i) noexcept { words_[i >> 6] &= ~(std::uint64_t{1} << (i & 63)); }
  void setAll() noexcept;

  std::size_t count() const noexcept;
  bool none() const noexcept;
  bool all() const noexcept;

  /// First set bit at or after `from`, or npos.
  std::size_t findNext(std::size_t from) const noexcept;
  std::size_t findFirst() const noexcept { return findNext(0); }

  bool isSubsetOf(const Bitset& other) const noexcept;
  bool intersects(const Bitset& other) const noexcept;

  Bitset& operator|=(const Bitset& other) noexcept;
  Bitset& operator&=(const Bitset& other) noexcept;
  Bitset& subtract(const Bitset& other) noexcept;

  /// Low 64 bits; meaningful as a full value only when width() <= 64.
  std::uint64_t lowWord() const noexcept { return words_.empty() ? 0 : words_[0]; }
  static Bitset fromWord(std::size_t width, std::uint64_t word);

  std::size_t hash() const noexcept;

  template <typename F>
  void forEach(F&& f) const {
    for (std::size_t w = 0; w < words_.size(); ++w) {
      std::uint64_t word = words_[w];
      while (word != 0) {
        const int bit = __builtin_ctzll(word);
        f((w << 6) + static_cast<std::size_t>(bit));
        word &= word - 1;
      }
    }
  }

  friend bool operator==(const Bitset&, const Bitset&) = default;
  friend std::strong_ordering operator<=>(const Bitset& a, const Bitset& b);

 private:
  void trim() noexcept;

  std::size_t width_ = 0;
  std::vector<std::uint64_t> words_;
};

}  // namespace galois

template <>
struct std::hash<galois::Bitset> {
  std::size_t operator()(const galois::Bitset& b) const noexcept { return b.hash(); }
};
