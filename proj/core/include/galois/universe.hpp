#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace galois {

using Element = std::uint32_t;

class Universe;
using UniverseRef = std::shared_ptr<const Universe>;

/// A named, non-empty finite carrier {0, ..., size-1} with optional labels.
/// Universes are compared by identity: two separately created universes of
/// the same size are different carriers.
class Universe {
 public:
  static UniverseRef create(std::string name, std::size_t size,
                            std::vector<std::string> labels = {});

  const std::string& name() const noexcept { return name_; }
  std::size_t size() const noexcept { return size_; }
  bool hasLabels() const noexcept { return !labels_.empty(); }

  /// The element's label, or its decimal index when unlabelled.
  std::string label(Element e) const;
  std::optional<Element> find(std::string_view label) const;

  /// size^arity; throws BudgetExceeded past 2^62.
  std::uint64_t tupleCount(std::size_t arity) const;

 private:
  Universe(std::string name, std::size_t size, std::vector<std::string> labels);

  std::string name_;
  std::size_t size_;
  std::vector<std::string> labels_;
};

/// Throws DomainError unless both references name the same carrier.
void requireSameUniverse(const Universe& a, const Universe& b, std::string_view context);

/// An m-tuple over some universe, i.e. a map {0..m-1} -> elements.
class Tuple {
 public:
  Tuple() = default;
  explicit Tuple(std::vector<Element> entries) : entries_(std::move(entries)) {}
  Tuple(std::initializer_list<Element> entries) : entries_(entries) {}

  std::size_t arity() const noexcept { return entries_.size(); }
  Element operator[](std::size_t i) const { return entries_[i]; }
  Element& operator[](std::size_t i) { return entries_[i]; }
  std::span<const Element> entries() const noexcept { return entries_; }

  friend bool operator==(const Tuple&, const Tuple&) = default;
  friend auto operator<=>(const Tuple&, const Tuple&) = default;

 private:
  std::vector<Element> entries_;
};

/// Row-major rank: position 0 is the most significant digit.
std::uint64_t tupleRank(const Tuple& t, const Universe& u);
std::uint64_t tupleRank(std::span<const Element> entries, std::size_t base);
Tuple tupleUnrank(std::uint64_t rank, std::size_t arity, const Universe& u);
Tuple tupleUnrank(std::uint64_t rank, std::size_t arity, std::size_t base);

/// a o h: result(i) = a(h(i)). Every h(i) must be < a.arity().
Tuple composeTuple(const Tuple& a, std::span<const std::size_t> h);

/// Codomain element of a scheme map: either a target position or an
/// indeterminate.
struct Slot {
  bool indeterminate = false;
  std::size_t index = 0;

  static constexpr Slot target(std::size_t i) noexcept { return {false, i}; }
  static constexpr Slot variable(std::size_t v) noexcept { return {true, v}; }

  friend bool operator==(const Slot&, const Slot&) = default;
  friend auto operator<=>(const Slot&, const Slot&) = default;
};

/// (a + sigma) o h: target slots read from a, indeterminates from sigma.
Tuple extendCompose(const Tuple& a, std::span<const Element> sigma, std::span<const Slot> h);

}  // namespace galois
