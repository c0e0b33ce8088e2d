#include <gtest/gtest.h>

#include "galois/constraint.hpp"
#include "galois/enumerate.hpp"
#include "galois/error.hpp"
#include "galois/galois.hpp"

using namespace galois;

namespace {

UniverseRef two() {
  static const UniverseRef u = Universe::create("A", 2);
  return u;
}

Relation rel(std::size_t arity, std::vector<Tuple> tuples) { return Relation::fromTuples(two(), arity, tuples); }

}  // namespace

TEST(Constraint, BuiltIns) {
  const auto a = two();
  const Constraint e = Constraint::empty(a, a, 2);
  EXPECT_TRUE(e.antecedent().isEmpty());
  EXPECT_TRUE(e.consequent().isEmpty());
  EXPECT_TRUE(Constraint::trivial(a, a, 1).consequent().isFull());
  EXPECT_EQ(Constraint::equality(a, a).arity(), 2u);
  EXPECT_THROW(Constraint(Relation::full(a, 1), Relation::full(a, 2)), DomainError);
  EXPECT_EQ(toString(Constraint::equality(a, a)), "({(0,0),(1,1)}, {(0,0),(1,1)})");
}

TEST(Constraint, Relaxation) {
  const Constraint c0(rel(1, {{0}, {1}}), rel(1, {{0}}));
  const Constraint c(rel(1, {{0}}), rel(1, {{0}, {1}}));
  EXPECT_TRUE(isRelaxation(c, c0));
  EXPECT_TRUE(isRelaxation(c0, c0));
  EXPECT_FALSE(isRelaxation(c0, c));
  EXPECT_EQ(isFiniteRelaxation(c, c0), isRelaxation(c, c0));
}

TEST(Scheme, Validation) {
  EXPECT_THROW(Scheme(2, 0, {}), DomainError);
  EXPECT_THROW(Scheme(2, 0, {{Slot::target(2)}}), DomainError);
  EXPECT_THROW(Scheme(2, 1, {{Slot::variable(1)}}), DomainError);
  const Scheme h = Scheme::simple(2, {{1, 0}});
  EXPECT_TRUE(h.isSimple());
  EXPECT_EQ(h.sourceArity(0), 2u);
  EXPECT_EQ(Scheme::identity(3, 2).sourceCount(), 2u);
}

TEST(Scheme, Canonical) {
  // The same scheme written with renamed indeterminates and swapped maps.
  const Scheme x(1, 2, {{Slot::target(0), Slot::variable(1)}, {Slot::variable(1), Slot::variable(0)}});
  const Scheme y(1, 2, {{Slot::variable(0), Slot::variable(1)}, {Slot::target(0), Slot::variable(0)}});
  EXPECT_EQ(canonicalScheme(x), canonicalScheme(y));
  const Scheme unused(1, 3, {{Slot::target(0), Slot::variable(2)}});
  EXPECT_EQ(canonicalScheme(unused).indeterminates(), 1u);
}

TEST(TightMinor, Projection) {
  const auto a = two();
  // Projecting the equality constraint onto its first coordinate.
  const Scheme h(1, 1, {{Slot::target(0), Slot::variable(0)}});
  const std::vector<Constraint> family{Constraint::equality(a, a)};
  const Constraint c = tightConjunctiveMinor(family, h);
  EXPECT_TRUE(c.antecedent().isFull());
  EXPECT_TRUE(c.consequent().isFull());
  EXPECT_TRUE(isConjunctiveMinor(Constraint(rel(1, {{0}}), Relation::full(a, 1)), family, h));
  EXPECT_FALSE(isConjunctiveMinor(Constraint(Relation::full(a, 1), rel(1, {{0}})), family, h));
}

TEST(TightMinor, Intersection) {
  const Constraint x(rel(1, {{0}, {1}}), rel(1, {{0}}));
  const Constraint y(rel(1, {{0}}), rel(1, {{0}, {1}}));
  const std::vector<Constraint> family{x, y};
  const Constraint c = tightConjunctiveMinor(family, Scheme::identity(1, 2));
  EXPECT_EQ(c, Constraint(rel(1, {{0}}), rel(1, {{0}})));
  EXPECT_TRUE(isWeakConjunctiveMinor(c, family, Scheme::identity(1, 2)));
  EXPECT_THROW(isWeakConjunctiveMinor(c, family, Scheme(1, 1, {{Slot::variable(0)}, {Slot::target(0)}})),
               Error);
}

TEST(TightMinor, ArityMismatch) {
  const std::vector<Constraint> family{Constraint::equality(two(), two())};
  EXPECT_THROW(tightConjunctiveMinor(family, Scheme::simple(1, {{0}})), DomainError);
}

TEST(ConstraintSet, Bookkeeping) {
  const auto a = two();
  ConstraintSet t(a, a, 2);
  EXPECT_TRUE(t.insert(Constraint::equality(a, a)));
  EXPECT_FALSE(t.insert(Constraint::equality(a, a)));
  EXPECT_THROW(t.insert(Constraint::trivial(a, a, 3)), DomainError);
  ConstraintSet u(a, a, 2);
  u.insert(Constraint::empty(a, a, 1));
  EXPECT_EQ(unite(t, u).size(), 2u);
  EXPECT_TRUE(t.isSubsetOf(unite(t, u)));
  EXPECT_EQ(loClosure(t), t);
}

TEST(MinorClosure, EqualityGeneratesDiagonals) {
  const auto a = two();
  ConstraintSet t(a, a, 2);
  t.insert(Constraint::equality(a, a));
  Bounds b;
  const MinorClosedSet w = wcmClosure(t, b);
  EXPECT_EQ(w.completeness(), Completeness::Exact);
  EXPECT_TRUE(w.contains(Constraint::equality(a, a)));
  EXPECT_TRUE(w.contains(Constraint::trivial(a, a, 1)));
  // No simple minor of the equality constraint has an empty antecedent.
  EXPECT_FALSE(w.contains(Constraint::empty(a, a, 2)));
  // Relaxations are members.
  EXPECT_TRUE(w.contains(Constraint(rel(2, {{0, 0}}), rel(2, {{0, 0}, {1, 1}, {0, 1}}))));
  EXPECT_FALSE(w.contains(Constraint(Relation::full(a, 2), Relation::equality(a))));
  EXPECT_EQ(w.leastConsequent(rel(2, {{1, 1}})), Relation::equality(a));
  EXPECT_EQ(w.leastConsequent(Relation::full(a, 2)), Relation::full(a, 2));

  const MinorClosedSet c = cmClosure(t, b);
  EXPECT_EQ(c.completeness(), Completeness::LowerApproximation);
  EXPECT_TRUE(w.members().isSubsetOf(c.members()));
}

TEST(MinorClosure, EmptySetStaysEmpty) {
  const auto a = two();
  const MinorClosedSet w = wcmClosure(ConstraintSet(a, a, 2), Bounds{});
  EXPECT_FALSE(w.contains(Constraint::trivial(a, a, 2)));
  EXPECT_TRUE(w.members().empty());
  EXPECT_TRUE(w.generators().empty());
}

TEST(MinorClosure, BoundsValidate) {
  Bounds b;
  b.maxConstraintArity = 0;
  EXPECT_THROW(b.validate(), Error);
  EXPECT_THROW(wcmClosure(ConstraintSet(two(), two(), 2), b), Error);
}
