#pragma once

#include <compare>
#include <cstdint>
#include <functional>
#include <set>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "galois/relation.hpp"
#include "galois/universe.hpp"

namespace galois {

/// A subset of the codomain, one bit per element.
using ValueSet = std::uint32_t;

/// An n-ary multivalued function A^n -> P(B), stored as one value set per
/// input tuple in rank order.
class MultiFunction {
 public:
  MultiFunction() = default;
  /// The empty-valued function of the given arity.
  MultiFunction(UniverseRef domain, UniverseRef codomain, std::size_t arity);
  MultiFunction(UniverseRef domain, UniverseRef codomain, std::size_t arity, std::vector<ValueSet> table);

  const Universe& domain() const noexcept { return *domain_; }
  const Universe& codomain() const noexcept { return *codomain_; }
  const UniverseRef& domainPtr() const noexcept { return domain_; }
  const UniverseRef& codomainPtr() const noexcept { return codomain_; }
  std::size_t arity() const noexcept { return arity_; }

  /// Number of input tuples, |A|^n.
  std::size_t points() const noexcept { return table_.size(); }
  std::span<const ValueSet> table() const noexcept { return table_; }

  ValueSet value(std::uint64_t inputRank) const noexcept { return table_[inputRank]; }
  ValueSet value(const Tuple& input) const;
  void setValue(std::uint64_t inputRank, ValueSet values);
  void setValue(const Tuple& input, ValueSet values);

  bool isTotal() const noexcept;
  bool isPartial() const noexcept;
  bool isSingleValued() const noexcept { return isTotal() && isPartial(); }
  bool isEmptyValued() const noexcept;

  /// Ranks of the input tuples with a non-empty value.
  std::vector<std::uint64_t> support() const;

  friend bool operator==(const MultiFunction& a, const MultiFunction& b) noexcept {
    return a.domain_ == b.domain_ && a.codomain_ == b.codomain_ && a.arity_ == b.arity_ &&
           a.table_ == b.table_;
  }
  friend std::strong_ordering operator<=>(const MultiFunction& a, const MultiFunction& b);

 private:
  UniverseRef domain_;
  UniverseRef codomain_;
  std::size_t arity_ = 0;
  std::vector<ValueSet> table_;
};

/// The n-ary function whose every value is empty.
MultiFunction emptyValuedFunction(UniverseRef domain, UniverseRef codomain, std::size_t arity);

/// Markers for the classes of all, total, partial and single-valued functions.
enum class FunctionKind { Any, Total, Partial, SingleValued };

bool belongsTo(const MultiFunction& f, FunctionKind kind) noexcept;
std::string_view kindName(FunctionKind kind) noexcept;

/// A class of multivalued functions of arity at most arityCap, deduplicated
/// per arity and kept in canonical order.
class FunctionClass {
 public:
  FunctionClass(UniverseRef domain, UniverseRef codomain, std::size_t arityCap);

  const Universe& domain() const noexcept { return *domain_; }
  const Universe& codomain() const noexcept { return *codomain_; }
  const UniverseRef& domainPtr() const noexcept { return domain_; }
  const UniverseRef& codomainPtr() const noexcept { return codomain_; }
  std::size_t arityCap() const noexcept { return perArity_.size() - 1; }

  /// Returns true when f was not already a member.
  bool insert(const MultiFunction& f);
  bool contains(const MultiFunction& f) const;

  const std::set<MultiFunction>& members(std::size_t arity) const;
  std::size_t size() const noexcept;
  bool empty() const noexcept { return size() == 0; }

  template <typename F>
  void forEach(F&& f) const {
    for (const auto& bucket : perArity_) {
      for (const auto& g : bucket) f(g);
    }
  }

  bool isSubsetOf(const FunctionClass& other) const;
  FunctionClass filtered(FunctionKind kind) const;
  /// Same members, different cap (members above the new cap are dropped).
  FunctionClass withCap(std::size_t arityCap) const;

  friend bool operator==(const FunctionClass& a, const FunctionClass& b) {
    return a.domain_ == b.domain_ && a.codomain_ == b.codomain_ && a.perArity_ == b.perArity_;
  }

 private:
  void requireMember(const MultiFunction& f) const;

  UniverseRef domain_;
  UniverseRef codomain_;
  std::vector<std::set<MultiFunction>> perArity_;  // index 0 unused
};

FunctionClass unite(const FunctionClass& a, const FunctionClass& b);

/// f(a^1 ... a^n): the product over rows i of f((a^1...a^n)(i)).
Relation imageOfColumns(const MultiFunction& f, std::span<const Tuple> columns);

/// fR: the union of f(a^1 ... a^n) over all column choices from R.
Relation imageOfRelation(const MultiFunction& f, const Relation& r);

/// g(a) is a subset of f(a) for every input a.
bool isValueRestriction(const MultiFunction& g, const MultiFunction& f);

/// The pointwise-largest m-ary function obtainable from f through the index
/// map l: n -> m, i.e. a |-> f(a o l).
MultiFunction substitute(const MultiFunction& f, std::span<const std::size_t> l, std::size_t targetArity);

/// Every value restriction of f (including f and the empty-valued function).
/// `total` keeps only the everywhere non-empty ones.
std::vector<MultiFunction> valueRestrictions(const MultiFunction& f, bool total = false,
                                             std::uint64_t maxCount = std::uint64_t{1} << 22);

/// All m-ary g with g(a) a subset of f(a o l) for some l: n -> m.
std::set<MultiFunction> rvsMembers(const MultiFunction& f, std::size_t targetArity);

/// Closure under restrictive variable substitution, within M's arity cap.
FunctionClass rvsClosure(const FunctionClass& m);
/// Closure under non-empty restrictive variable substitution: M together with
/// every total function obtained from a member.
FunctionClass rvstClosure(const FunctionClass& m);

/// Whether f is locally covered by the members of M of its arity: M_n is
/// non-empty and every selection of values on supp(f) lies inside one member.
bool isLocallyCovered(const MultiFunction& f, const FunctionClass& m);

/// LC(M) and its total / partial / single-valued restrictions.
FunctionClass lcClosure(const FunctionClass& m, FunctionKind variant = FunctionKind::Any,
                        std::uint64_t maxCandidates = std::uint64_t{1} << 22);

std::string toString(const MultiFunction& f);
std::string valueSetString(ValueSet v, const Universe& codomain);

}  // namespace galois
