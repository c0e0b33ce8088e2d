#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <vector>

#include "galois/relation.hpp"
#include "galois/universe.hpp"

namespace galois {

/// An m-ary A-to-B relational constraint (R, S): antecedent R over A,
/// consequent S over B, same arity.
class Constraint {
 public:
  Constraint() = default;
  Constraint(Relation antecedent, Relation consequent);

  /// (empty^m, empty^m)
  static Constraint empty(UniverseRef a, UniverseRef b, std::size_t arity);
  /// (A^m, B^m)
  static Constraint trivial(UniverseRef a, UniverseRef b, std::size_t arity);
  /// (=_A, =_B)
  static Constraint equality(UniverseRef a, UniverseRef b);

  const Relation& antecedent() const noexcept { return antecedent_; }
  const Relation& consequent() const noexcept { return consequent_; }
  std::size_t arity() const noexcept { return antecedent_.arity(); }

  friend bool operator==(const Constraint&, const Constraint&) = default;
  friend auto operator<=>(const Constraint&, const Constraint&) = default;

 private:
  Relation antecedent_;
  Relation consequent_;
};

std::string toString(const Constraint& c);

/// Minor formation scheme: target arity m, indeterminate set V = {0..|V|-1}
/// and a non-empty family of maps h_j: n_j -> m + V.
class Scheme {
 public:
  Scheme(std::size_t target, std::size_t indeterminates, std::vector<std::vector<Slot>> maps);

  /// `copies` identity maps on the target; with copies > 1 this intersects
  /// antecedents and consequents.
  static Scheme identity(std::size_t target, std::size_t copies = 1);
  /// A simple scheme from plain index maps n_j -> m.
  static Scheme simple(std::size_t target, const std::vector<std::vector<std::size_t>>& maps);

  std::size_t target() const noexcept { return target_; }
  std::size_t indeterminates() const noexcept { return indeterminates_; }
  std::size_t sourceCount() const noexcept { return maps_.size(); }
  std::size_t sourceArity(std::size_t j) const { return maps_.at(j).size(); }
  std::span<const Slot> map(std::size_t j) const { return maps_.at(j); }
  bool isSimple() const noexcept { return indeterminates_ == 0; }

  friend bool operator==(const Scheme&, const Scheme&) = default;
  friend auto operator<=>(const Scheme&, const Scheme&) = default;

 private:
  std::size_t target_;
  std::size_t indeterminates_;
  std::vector<std::vector<Slot>> maps_;
};

std::string toString(const Scheme& h);

/// Caps that make the unbounded closure quantifications finite.
struct Bounds {
  std::size_t maxConstraintArity = 2;  // m_max
  std::size_t maxFunctionArity = 2;    // n_max
  std::size_t maxFamilySize = 2;       // j_max
  std::size_t maxIndeterminates = 2;   // v_max

  void validate() const;
  friend bool operator==(const Bounds&, const Bounds&) = default;
};

/// A finite set of A-to-B constraints of arity at most arityCap.
class ConstraintSet {
 public:
  ConstraintSet(UniverseRef a, UniverseRef b, std::size_t arityCap);

  const Universe& antecedentUniverse() const noexcept { return *a_; }
  const Universe& consequentUniverse() const noexcept { return *b_; }
  const UniverseRef& antecedentPtr() const noexcept { return a_; }
  const UniverseRef& consequentPtr() const noexcept { return b_; }
  std::size_t arityCap() const noexcept { return perArity_.size() - 1; }

  bool insert(const Constraint& c);
  bool contains(const Constraint& c) const;
  const std::set<Constraint>& members(std::size_t arity) const;
  std::size_t size() const noexcept;
  bool empty() const noexcept { return size() == 0; }
  std::vector<Constraint> toVector() const;

  template <typename F>
  void forEach(F&& f) const {
    for (const auto& bucket : perArity_) {
      for (const auto& c : bucket) f(c);
    }
  }

  bool isSubsetOf(const ConstraintSet& other) const;
  ConstraintSet withCap(std::size_t arityCap) const;

  friend bool operator==(const ConstraintSet& x, const ConstraintSet& y) {
    return x.a_ == y.a_ && x.b_ == y.b_ && x.perArity_ == y.perArity_;
  }

 private:
  void requireMember(const Constraint& c) const;

  UniverseRef a_;
  UniverseRef b_;
  std::vector<std::set<Constraint>> perArity_;
};

ConstraintSet unite(const ConstraintSet& x, const ConstraintSet& y);

/// Antecedent shrinks and consequent grows.
bool isRelaxation(const Constraint& c, const Constraint& c0);
/// Over finite universes every antecedent is finite, so this coincides with
/// isRelaxation.
bool isFiniteRelaxation(const Constraint& c, const Constraint& c0);

/// The tight conjunctive minor of `family` via `scheme`, with Skolem maps
/// found by exhaustive search.
Constraint tightConjunctiveMinor(std::span<const Constraint> family, const Scheme& scheme);
bool isConjunctiveMinor(const Constraint& c, std::span<const Constraint> family, const Scheme& scheme);
/// Requires a simple scheme.
bool isWeakConjunctiveMinor(const Constraint& c, std::span<const Constraint> family, const Scheme& scheme);

/// Scheme composition from the transitivity argument: the result K has the
/// outer target, indeterminates V + V_0 + V_1 + ... (renamed apart) and maps
/// k_j^i = (h_j + injection of V_j) o h_j^i, ordered j-major.
Scheme composeSchemes(const Scheme& outer, std::span<const Scheme> inner);

enum class MinorKind { Weak, Full };
enum class Completeness { Exact, LowerApproximation };

/// A constraint set closed under relaxation and intersection at every arity
/// up to a cap, represented by its least consequent S_min(R) for each
/// antecedent R: (R, S) is a member iff S_min(R) is defined and S contains it.
class MinorClosedSet {
 public:
  const UniverseRef& antecedentPtr() const noexcept { return a_; }
  const UniverseRef& consequentPtr() const noexcept { return b_; }
  std::size_t maxArity() const noexcept { return table_.size() - 1; }
  MinorKind kind() const noexcept { return kind_; }
  const Bounds& bounds() const noexcept { return bounds_; }
  /// Exact at the represented arities, or a lower approximation of the
  /// unbounded closure.
  Completeness completeness() const noexcept { return completeness_; }
  std::size_t rounds() const noexcept { return rounds_; }

  bool contains(const Constraint& c) const;
  std::optional<Relation> leastConsequent(const Relation& antecedent) const;

  /// Constraints (R, S_min(R)) that are not implied by another such pair with
  /// a larger antecedent, leaving out those with a full consequent. A function
  /// satisfies every member iff it satisfies these.
  std::vector<Constraint> generators() const;
  /// Number of member constraints at the given arity.
  std::uint64_t countAtArity(std::size_t arity) const;
  ConstraintSet members() const;

  friend bool operator==(const MinorClosedSet& x, const MinorClosedSet& y) {
    return x.a_ == y.a_ && x.b_ == y.b_ && x.table_ == y.table_;
  }

 private:
  friend class MinorClosureEngine;
  static constexpr std::uint64_t kUndefined = ~std::uint64_t{0};

  UniverseRef a_;
  UniverseRef b_;
  MinorKind kind_ = MinorKind::Weak;
  Bounds bounds_;
  Completeness completeness_ = Completeness::Exact;
  std::size_t rounds_ = 0;
  std::vector<std::vector<std::uint64_t>> table_;  // [arity][antecedent mask]
};

/// Closure under weak conjunctive minors (simple schemes) at arities up to
/// bounds.maxConstraintArity. Exact at those arities.
MinorClosedSet wcmClosure(const ConstraintSet& t, const Bounds& bounds);
/// Closure under conjunctive minors, bounded by family size and indeterminate
/// count; a lower approximation of the unbounded closure.
MinorClosedSet cmClosure(const ConstraintSet& t, const Bounds& bounds);
/// Local closure. Over finite universes every constraint is a finite
/// relaxation of itself, so this is the identity.
ConstraintSet loClosure(const ConstraintSet& t);

}  // namespace galois
