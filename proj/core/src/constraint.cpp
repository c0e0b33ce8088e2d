#include "galois/constraint.hpp"

#include "galois/error.hpp"

namespace galois {

Constraint::Constraint(Relation antecedent, Relation consequent)
    : antecedent_(std::move(antecedent)), consequent_(std::move(consequent)) {
  if (antecedent_.arity() != consequent_.arity()) {
    throw DomainError("constraint antecedent has arity " + std::to_string(antecedent_.arity()) +
                      " but consequent has arity " + std::to_string(consequent_.arity()));
  }
}

Constraint Constraint::empty(UniverseRef a, UniverseRef b, std::size_t arity) {
  return {Relation::empty(std::move(a), arity), Relation::empty(std::move(b), arity)};
}

Constraint Constraint::trivial(UniverseRef a, UniverseRef b, std::size_t arity) {
  return {Relation::full(std::move(a), arity), Relation::full(std::move(b), arity)};
}

Constraint Constraint::equality(UniverseRef a, UniverseRef b) {
  return {Relation::equality(std::move(a)), Relation::equality(std::move(b))};
}

std::string toString(const Constraint& c) {
  return "(" + toString(c.antecedent()) + ", " + toString(c.consequent()) + ")";
}

// ---------------------------------------------------------------------------

void Bounds::validate() const {
  if (maxConstraintArity < 1) throw DomainError("m_max must be at least 1");
  if (maxFunctionArity < 1) throw DomainError("n_max must be at least 1");
  if (maxFamilySize < 1) throw DomainError("j_max must be at least 1");
}

ConstraintSet::ConstraintSet(UniverseRef a, UniverseRef b, std::size_t arityCap)
    : a_(std::move(a)), b_(std::move(b)), perArity_(arityCap + 1) {
  if (arityCap == 0) throw DomainError("constraint set arity cap must be positive");
}

void ConstraintSet::requireMember(const Constraint& c) const {
  requireSameUniverse(c.antecedent().universe(), *a_, "constraint set antecedent");
  requireSameUniverse(c.consequent().universe(), *b_, "constraint set consequent");
  if (c.arity() > arityCap()) {
    throw DomainError("constraint of arity " + std::to_string(c.arity()) + " exceeds set cap " +
                      std::to_string(arityCap()));
  }
}

bool ConstraintSet::insert(const Constraint& c) {
  requireMember(c);
  return perArity_[c.arity()].insert(c).second;
}

bool ConstraintSet::contains(const Constraint& c) const {
  if (c.arity() > arityCap()) return false;
  return perArity_[c.arity()].count(c) != 0;
}

const std::set<Constraint>& ConstraintSet::members(std::size_t arity) const {
  static const std::set<Constraint> kNone;
  return arity < perArity_.size() ? perArity_[arity] : kNone;
}

std::size_t ConstraintSet::size() const noexcept {
  std::size_t n = 0;
  for (const auto& b : perArity_) n += b.size();
  return n;
}

std::vector<Constraint> ConstraintSet::toVector() const {
  std::vector<Constraint> out;
  forEach([&](const Constraint& c) { out.push_back(c); });
  return out;
}

bool ConstraintSet::isSubsetOf(const ConstraintSet& other) const {
  bool ok = true;
  forEach([&](const Constraint& c) { ok = ok && other.contains(c); });
  return ok;
}

ConstraintSet ConstraintSet::withCap(std::size_t arityCap) const {
  ConstraintSet out(a_, b_, arityCap);
  for (std::size_t m = 1; m < perArity_.size() && m <= arityCap; ++m) out.perArity_[m] = perArity_[m];
  return out;
}

ConstraintSet unite(const ConstraintSet& x, const ConstraintSet& y) {
  ConstraintSet out = x.withCap(std::max(x.arityCap(), y.arityCap()));
  y.forEach([&](const Constraint& c) { out.insert(c); });
  return out;
}

// ---------------------------------------------------------------------------

bool isRelaxation(const Constraint& c, const Constraint& c0) {
  requireCompatible(c.antecedent(), c0.antecedent(), "relaxation antecedent");
  requireCompatible(c.consequent(), c0.consequent(), "relaxation consequent");
  return c.antecedent().bits().isSubsetOf(c0.antecedent().bits()) &&
         c0.consequent().bits().isSubsetOf(c.consequent().bits());
}

bool isFiniteRelaxation(const Constraint& c, const Constraint& c0) { return isRelaxation(c, c0); }

namespace {

// Skolem search for one side: the set of target tuples t for which some
// assignment sigma: V -> U puts (t + sigma) o h_j into every relations[j].
Relation minorSide(std::span<const Relation* const> relations, const Scheme& scheme, const UniverseRef& u) {
  const std::size_t k = u->size();
  const std::size_t m = scheme.target();
  const std::size_t v = scheme.indeterminates();
  const std::uint64_t sigmaCount = u->tupleCount(v);
  Relation out(u, m);
  Bitset bits = out.bits();
  std::vector<Element> composed;
  for (std::uint64_t r = 0; r < bits.width(); ++r) {
    const Tuple a = tupleUnrank(r, m, k);
    for (std::uint64_t s = 0; s < sigmaCount; ++s) {
      const Tuple sigma = tupleUnrank(s, v, k);
      bool all = true;
      for (std::size_t j = 0; j < scheme.sourceCount() && all; ++j) {
        const auto h = scheme.map(j);
        composed.resize(h.size());
        for (std::size_t i = 0; i < h.size(); ++i) {
          composed[i] = h[i].indeterminate ? sigma[h[i].index] : a[h[i].index];
        }
        all = relations[j]->containsRank(tupleRank(composed, k));
      }
      if (all) {
        bits.set(r);
        break;
      }
    }
  }
  return {u, m, std::move(bits)};
}

void requireFamily(std::span<const Constraint> family, const Scheme& scheme) {
  if (family.empty()) throw DomainError("conjunctive minors need a non-empty family");
  if (family.size() != scheme.sourceCount()) {
    throw DomainError("family has " + std::to_string(family.size()) + " members but scheme has " +
                      std::to_string(scheme.sourceCount()) + " sources");
  }
  for (std::size_t j = 0; j < family.size(); ++j) {
    if (family[j].arity() != scheme.sourceArity(j)) {
      throw DomainError("family member " + std::to_string(j) + " has arity " + std::to_string(family[j].arity()) +
                        " but scheme source has arity " + std::to_string(scheme.sourceArity(j)));
    }
    requireSameUniverse(family[j].antecedent().universe(), family[0].antecedent().universe(), "family antecedents");
    requireSameUniverse(family[j].consequent().universe(), family[0].consequent().universe(), "family consequents");
  }
}

}  // namespace

Constraint tightConjunctiveMinor(std::span<const Constraint> family, const Scheme& scheme) {
  requireFamily(family, scheme);
  std::vector<const Relation*> antecedents;
  std::vector<const Relation*> consequents;
  for (const auto& c : family) {
    antecedents.push_back(&c.antecedent());
    consequents.push_back(&c.consequent());
  }
  return {minorSide(antecedents, scheme, family[0].antecedent().universePtr()),
          minorSide(consequents, scheme, family[0].consequent().universePtr())};
}

bool isConjunctiveMinor(const Constraint& c, std::span<const Constraint> family, const Scheme& scheme) {
  if (c.arity() != scheme.target()) {
    throw DomainError("constraint arity " + std::to_string(c.arity()) + " differs from scheme target " +
                      std::to_string(scheme.target()));
  }
  return isRelaxation(c, tightConjunctiveMinor(family, scheme));
}

bool isWeakConjunctiveMinor(const Constraint& c, std::span<const Constraint> family, const Scheme& scheme) {
  if (!scheme.isSimple()) throw DomainError("weak conjunctive minors need a simple scheme");
  return isConjunctiveMinor(c, family, scheme);
}

ConstraintSet loClosure(const ConstraintSet& t) { return t; }

}  // namespace galois
