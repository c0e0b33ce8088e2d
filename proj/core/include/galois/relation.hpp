#pragma once

#include <compare>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "galois/bitset.hpp"
#include "galois/universe.hpp"

namespace galois {

/// An m-ary relation on a universe, stored as a bitset over tuple ranks.
/// The arity is part of the value: the empty relations of different arities
/// are distinct.
class Relation {
 public:
  Relation() = default;
  /// The empty relation of the given arity.
  Relation(UniverseRef universe, std::size_t arity);
  Relation(UniverseRef universe, std::size_t arity, Bitset members);

  static Relation empty(UniverseRef universe, std::size_t arity) { return {std::move(universe), arity}; }
  static Relation full(UniverseRef universe, std::size_t arity);
  static Relation equality(UniverseRef universe);
  static Relation fromTuples(UniverseRef universe, std::size_t arity, std::span<const Tuple> tuples);

  const UniverseRef& universePtr() const noexcept { return universe_; }
  const Universe& universe() const noexcept { return *universe_; }
  std::size_t arity() const noexcept { return arity_; }
  const Bitset& bits() const noexcept { return members_; }

  std::size_t size() const noexcept { return members_.count(); }
  bool isEmpty() const noexcept { return members_.none(); }
  bool isFull() const noexcept { return members_.all(); }

  bool contains(const Tuple& t) const;
  bool containsRank(std::uint64_t rank) const noexcept { return members_.test(rank); }

  void insert(const Tuple& t);
  void insertRank(std::uint64_t rank) noexcept { members_.set(rank); }
  void erase(const Tuple& t);

  /// Members in ascending rank order.
  std::vector<Tuple> tuples() const;
  std::vector<std::uint64_t> ranks() const;

  friend bool operator==(const Relation& a, const Relation& b) noexcept {
    return a.universe_ == b.universe_ && a.arity_ == b.arity_ && a.members_ == b.members_;
  }
  friend std::strong_ordering operator<=>(const Relation& a, const Relation& b);

 private:
  UniverseRef universe_;
  std::size_t arity_ = 0;
  Bitset members_;
};

/// Throws DomainError unless the relations share universe and arity.
void requireCompatible(const Relation& a, const Relation& b, std::string_view context);

bool isSubset(const Relation& a, const Relation& b);
Relation unite(const Relation& a, const Relation& b);
Relation intersect(const Relation& a, const Relation& b);
Relation remove(const Relation& r, const Tuple& t);
inline Relation fullRelation(UniverseRef u, std::size_t arity) { return Relation::full(std::move(u), arity); }
inline Relation equalityRelation(UniverseRef u) { return Relation::equality(std::move(u)); }

/// Canonical text form, e.g. "{(0,1),(1,1)}" or "empty^2".
std::string toString(const Relation& r);
std::string toString(const Tuple& t, const Universe& u);

}  // namespace galois
