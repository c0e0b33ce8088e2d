#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "galois/multifunction.hpp"

namespace galois::detail {

inline std::uint64_t ipow(std::uint64_t base, std::size_t e) {
  std::uint64_t r = 1;
  while (e-- > 0) r *= base;
  return r;
}

// digits[r][i] is entry i of the tuple of rank r in U^arity.
inline std::vector<std::vector<Element>> digitTable(std::size_t base, std::size_t arity) {
  const std::uint64_t count = ipow(base, arity);
  std::vector<std::vector<Element>> out(count, std::vector<Element>(arity));
  for (std::uint64_t r = 0; r < count; ++r) {
    std::uint64_t x = r;
    for (std::size_t i = arity; i-- > 0;) {
      out[r][i] = static_cast<Element>(x % base);
      x /= base;
    }
  }
  return out;
}

// Ranks (over B^rows.size()) of the product of the row value sets.
inline void productRanks(std::span<const ValueSet> rows, std::size_t kb, std::vector<std::uint64_t>& out) {
  out.assign(1, 0);
  std::vector<std::uint64_t> next;
  for (ValueSet v : rows) {
    next.clear();
    for (std::uint64_t r : out) {
      for (std::size_t b = 0; b < kb; ++b) {
        if ((v >> b) & 1u) next.push_back(r * kb + b);
      }
    }
    out.swap(next);
    if (out.empty()) return;
  }
}

// Product of row value sets as a mask over B^m; needs |B|^m <= 64.
inline std::uint64_t productMask(std::span<const ValueSet> rows, std::size_t kb) {
  for (ValueSet v : rows) {
    if (v == 0) return 0;
  }
  std::vector<std::uint64_t> ranks;
  productRanks(rows, kb, ranks);
  std::uint64_t mask = 0;
  for (std::uint64_t r : ranks) mask |= std::uint64_t{1} << r;
  return mask;
}

// Calls visit(choice) for every choice in {0..k-1}^n, last index fastest.
template <typename Visit>
bool forEachChoice(std::size_t k, std::size_t n, Visit&& visit) {
  if (k == 0) return true;
  std::vector<std::size_t> choice(n, 0);
  while (true) {
    if (!visit(std::span<const std::size_t>(choice))) return false;
    std::size_t i = n;
    while (i-- > 0) {
      if (++choice[i] < k) break;
      choice[i] = 0;
      if (i == 0) return true;
    }
    if (n == 0) return true;
  }
}

}  // namespace galois::detail
