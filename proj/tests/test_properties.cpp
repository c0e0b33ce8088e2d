// Library against the naive oracles, and invariants on seeded random inputs.

#include <gtest/gtest.h>

#include "galois/enumerate.hpp"
#include "galois/error.hpp"
#include "galois/galois.hpp"
#include "oracles.hpp"

using namespace galois;

namespace {

constexpr std::uint64_t kSeeds = 300;

struct Universes {
  UniverseRef a = Universe::create("A", 2);
  UniverseRef b = Universe::create("B", 3);
};

const Universes& U() {
  static const Universes u;
  return u;
}

}  // namespace

TEST(Oracle, ImageMatchesDefinition) {
  Sampler s(1);
  for (std::uint64_t i = 0; i < kSeeds; ++i) {
    const MultiFunction f = s.function(U().a, U().b, 1 + s.below(2));
    const Relation r = s.relation(U().a, 1 + s.below(3));
    EXPECT_EQ(oracle::tuplesOf(imageOfRelation(f, r)), oracle::image(f, r)) << toString(f) << " on " << toString(r);
  }
}

TEST(Oracle, SatisfactionMatchesDefinition) {
  Sampler s(2);
  for (std::uint64_t i = 0; i < kSeeds; ++i) {
    const MultiFunction f = s.function(U().a, U().b, 1 + s.below(2));
    const Constraint c = s.constraint(U().a, U().b, 1 + s.below(2));
    const bool expected = oracle::satisfies(f, c);
    EXPECT_EQ(satisfies(f, c), expected) << toString(f) << " and " << toString(c);
    EXPECT_EQ(!findViolation(f, c).has_value(), expected);
  }
}

TEST(Oracle, LocalCoveringMatchesDefinition) {
  Sampler s(3);
  for (std::uint64_t i = 0; i < kSeeds; ++i) {
    const std::size_t n = 1 + s.below(2);
    const FunctionClass m = s.functionClass(U().a, U().b, 2, 4);
    const MultiFunction f = s.function(U().a, U().b, n);
    const auto& same = m.members(n);
    EXPECT_EQ(isLocallyCovered(f, m), oracle::locallyCovered(f, {same.begin(), same.end()})) << toString(f);
  }
}

TEST(Oracle, RvsMembersMatchDefinition) {
  Sampler s(4);
  for (std::uint64_t i = 0; i < 40; ++i) {
    const MultiFunction f = s.function(U().a, U().a, 1 + s.below(2));
    for (std::size_t m = 1; m <= 2; ++m) EXPECT_EQ(rvsMembers(f, m), oracle::rvs(f, m)) << toString(f);
  }
}

TEST(Oracle, LeastConsequentIsUnionOfImages) {
  Sampler s(5);
  for (std::uint64_t i = 0; i < 60; ++i) {
    const FunctionClass m = s.functionClass(U().a, U().b, 2, 4);
    const IntensionalCSF c = csf(m, 2);
    for (int k = 0; k < 5; ++k) {
      const Relation r = s.relation(U().a, 1 + s.below(2));
      EXPECT_EQ(oracle::tuplesOf(c.leastConsequent(r)), oracle::leastConsequent(m, r));
    }
  }
}

TEST(Oracle, TightMinorMatchesDefinition) {
  Sampler s(6);
  for (std::uint64_t i = 0; i < kSeeds; ++i) {
    const std::size_t target = 1 + s.below(2);
    const std::size_t vars = s.below(3);
    std::vector<std::size_t> arities;
    std::vector<Constraint> family;
    for (std::size_t j = 0, k = 1 + s.below(2); j < k; ++j) {
      arities.push_back(1 + s.below(2));
      family.push_back(s.constraint(U().a, U().b, arities.back()));
    }
    const Scheme h = s.scheme(target, arities, vars);
    const Constraint c = tightConjunctiveMinor(family, h);
    const auto [r, t] = oracle::tightMinor(family, h);
    EXPECT_EQ(oracle::tuplesOf(c.antecedent()), r) << toString(h);
    EXPECT_EQ(oracle::tuplesOf(c.consequent()), t) << toString(h);
  }
}

TEST(Property, ValueRestrictionPreservesSatisfaction) {
  Sampler s(7);
  for (std::uint64_t i = 0; i < kSeeds; ++i) {
    const MultiFunction f = s.function(U().a, U().b, 1);
    const Constraint c = s.constraint(U().a, U().b, 1 + s.below(2));
    if (!satisfies(f, c)) continue;
    for (const auto& g : rvsMembers(f, 1 + s.below(2))) EXPECT_TRUE(satisfies(g, c)) << toString(g);
  }
}

TEST(Property, MinorsPreserveSatisfaction) {
  Sampler s(8);
  for (std::uint64_t i = 0; i < kSeeds; ++i) {
    const MultiFunction f = s.function(U().a, U().b, 1 + s.below(2));
    std::vector<std::size_t> arities;
    std::vector<Constraint> family;
    for (std::size_t j = 0, k = 1 + s.below(2); j < k; ++j) {
      const std::size_t m = 1 + s.below(2);
      const Constraint c = s.constraint(U().a, U().b, m);
      arities.push_back(m);
      family.emplace_back(c.antecedent(), unite(c.consequent(), imageOfRelation(f, c.antecedent())));
    }
    // Weak minors only: full minors need f total.
    const Scheme h = s.scheme(1 + s.below(2), arities, 0);
    EXPECT_TRUE(satisfies(f, tightConjunctiveMinor(family, h))) << toString(f) << " " << toString(h);
  }
}

TEST(Property, ClosedSetsContainTheirGenerators) {
  Sampler s(9);
  Bounds b;
  for (std::uint64_t i = 0; i < 60; ++i) {
    const ConstraintSet t = s.constraintSet(U().a, U().b, 2, 3);
    const MinorClosedSet w = wcmClosure(t, b);
    t.forEach([&](const Constraint& c) { EXPECT_TRUE(w.contains(c)) << toString(c); });
    for (const auto& g : w.generators()) EXPECT_TRUE(w.contains(g));
    EXPECT_EQ(wcmClosure(w.members(), b), w);
  }
}

TEST(Property, CsfAdmitsItsClass) {
  Sampler s(10);
  for (std::uint64_t i = 0; i < 60; ++i) {
    const FunctionClass m = s.functionClass(U().a, U().b, 2, 4);
    const IntensionalCSF c = csf(m, 2);
    m.forEach([&](const MultiFunction& f) { EXPECT_TRUE(c.admits(f)) << toString(f); });
    rvsClosure(m).forEach([&](const MultiFunction& f) { EXPECT_TRUE(c.admits(f)) << toString(f); });
  }
}

TEST(Property, SeparatorsSeparateTheirOwnClass) {
  Sampler s(11);
  int tried = 0;
  for (std::uint64_t i = 0; i < kSeeds; ++i) {
    const FunctionClass m = s.functionClass(U().a, U().b, 1, 3);
    const MultiFunction f = s.function(U().a, U().b, 1);
    try {
      const Constraint c = separatingConstraint(m, f);
      ++tried;
      EXPECT_FALSE(satisfies(f, c));
      m.forEach([&](const MultiFunction& g) { EXPECT_TRUE(satisfies(g, c)) << toString(g); });
    } catch (const PreconditionError&) {
      FunctionClass withE = m;
      withE.insert(emptyValuedFunction(U().a, U().b, 1));
      EXPECT_TRUE(lcClosure(rvsClosure(withE)).contains(f));
    }
  }
  EXPECT_GT(tried, 0);
}
