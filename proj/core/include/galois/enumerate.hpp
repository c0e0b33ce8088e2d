#pragma once

#include <cstdint>
#include <optional>
#include <random>
#include <vector>

#include "galois/constraint.hpp"
#include "galois/multifunction.hpp"

namespace galois {

struct Budget {
  std::uint64_t maxTables = std::uint64_t{1} << 20;
  std::uint64_t seed = 0;
};

/// (2^|B|)^(|A|^n), saturating at 2^64 - 1.
std::uint64_t functionCount(const Universe& a, const Universe& b, std::size_t arity);

/// Every n-ary function A^n -> P(B) once, in table rank order: the table is
/// read as a base-2^|B| number with the point of rank 0 most significant.
class FunctionStream {
 public:
  FunctionStream(UniverseRef a, UniverseRef b, std::size_t arity, const Budget& budget = {});

  std::uint64_t size() const noexcept { return count_; }
  std::optional<MultiFunction> next();
  /// Restricts the stream to table ranks [first, last).
  FunctionStream& range(std::uint64_t first, std::uint64_t last);

 private:
  UniverseRef a_;
  UniverseRef b_;
  std::size_t arity_;
  std::uint64_t count_;
  std::uint64_t pos_ = 0;
  std::uint64_t end_;
};

/// Every m-ary relation over u once, by ascending bit mask.
class RelationStream {
 public:
  RelationStream(UniverseRef u, std::size_t arity, const Budget& budget = {});

  std::uint64_t size() const noexcept { return count_; }
  std::optional<Relation> next();

 private:
  UniverseRef u_;
  std::size_t arity_;
  std::size_t width_;
  std::uint64_t count_;
  std::uint64_t pos_ = 0;
};

/// Every m-ary A-to-B constraint once, antecedent-major.
class ConstraintStream {
 public:
  ConstraintStream(UniverseRef a, UniverseRef b, std::size_t arity, const Budget& budget = {});

  std::uint64_t size() const noexcept { return count_; }
  std::optional<Constraint> next();

 private:
  UniverseRef a_;
  UniverseRef b_;
  std::size_t arity_;
  std::size_t widthA_;
  std::size_t widthB_;
  std::uint64_t count_;
  std::uint64_t pos_ = 0;
};

template <typename F>
void forEachFunction(const UniverseRef& a, const UniverseRef& b, std::size_t arity, const Budget& budget, F&& f) {
  FunctionStream s(a, b, arity, budget);
  while (auto g = s.next()) f(*g);
}

/// Schemes with target at most maxConstraintArity, at most
/// maxIndeterminates indeterminates (all of them used), between 1 and
/// maxFamilySize maps and source arities at most maxSourceArity. Each scheme
/// appears once up to reordering the maps and renaming indeterminates.
std::vector<Scheme> allSchemes(const Bounds& bounds, std::size_t maxSourceArity, const Budget& budget = {});

/// Canonical representative of h: unused indeterminates dropped, then the
/// least sorted map list over all renamings.
Scheme canonicalScheme(const Scheme& h);

/// Deterministic sampling. Value sets are uniform over the subsets allowed by
/// the kind, relations uniform over all subsets, and collection sizes uniform
/// in [0, maxMembers].
class Sampler {
 public:
  explicit Sampler(std::uint64_t seed) : rng_(seed) {}

  std::uint64_t below(std::uint64_t n);
  MultiFunction function(const UniverseRef& a, const UniverseRef& b, std::size_t arity,
                         FunctionKind kind = FunctionKind::Any);
  Relation relation(const UniverseRef& u, std::size_t arity);
  Constraint constraint(const UniverseRef& a, const UniverseRef& b, std::size_t arity);
  /// Members of uniformly chosen arity in [1, arityCap].
  FunctionClass functionClass(const UniverseRef& a, const UniverseRef& b, std::size_t arityCap,
                              std::size_t maxMembers, FunctionKind kind = FunctionKind::Any);
  ConstraintSet constraintSet(const UniverseRef& a, const UniverseRef& b, std::size_t arityCap,
                              std::size_t maxMembers);
  /// A scheme with target m, the given source arities and indeterminate
  /// count; maps uniform over m + V.
  Scheme scheme(std::size_t target, const std::vector<std::size_t>& sourceArities, std::size_t indeterminates);

 private:
  std::mt19937_64 rng_;
};

MultiFunction sampleFunction(std::uint64_t seed, const UniverseRef& a, const UniverseRef& b, std::size_t arity,
                             FunctionKind kind = FunctionKind::Any);
FunctionClass sampleClass(std::uint64_t seed, const UniverseRef& a, const UniverseRef& b, std::size_t arityCap,
                          std::size_t maxMembers, FunctionKind kind = FunctionKind::Any);
ConstraintSet sampleConstraintSet(std::uint64_t seed, const UniverseRef& a, const UniverseRef& b,
                                  std::size_t arityCap, std::size_t maxMembers);

}  // namespace galois
