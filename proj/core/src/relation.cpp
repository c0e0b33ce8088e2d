#include "galois/relation.hpp"

#include "galois/error.hpp"

namespace galois {
namespace {

constexpr std::uint64_t kMaxRelationBits = std::uint64_t{1} << 28;

std::size_t relationWidth(const Universe& u, std::size_t arity) {
  if (arity == 0) throw DomainError("relations must have positive arity");
  const std::uint64_t n = u.tupleCount(arity);
  if (n > kMaxRelationBits) {
    throw BudgetExceeded("relation of arity " + std::to_string(arity) + " over '" + u.name() +
                         "' needs " + std::to_string(n) + " bits");
  }
  return static_cast<std::size_t>(n);
}

}  // namespace

Relation::Relation(UniverseRef universe, std::size_t arity)
    : universe_(std::move(universe)), arity_(arity), members_(relationWidth(*universe_, arity)) {}

Relation::Relation(UniverseRef universe, std::size_t arity, Bitset members)
    : universe_(std::move(universe)), arity_(arity), members_(std::move(members)) {
  if (members_.width() != relationWidth(*universe_, arity_)) {
    throw DomainError("bitset width does not match relation arity");
  }
}

Relation Relation::full(UniverseRef universe, std::size_t arity) {
  Relation r(std::move(universe), arity);
  r.members_.setAll();
  return r;
}

Relation Relation::equality(UniverseRef universe) {
  Relation r(universe, 2);
  for (Element x = 0; x < universe->size(); ++x) r.insert(Tuple{x, x});
  return r;
}

Relation Relation::fromTuples(UniverseRef universe, std::size_t arity, std::span<const Tuple> tuples) {
  Relation r(std::move(universe), arity);
  for (const auto& t : tuples) r.insert(t);
  return r;
}

bool Relation::contains(const Tuple& t) const {
  if (t.arity() != arity_) {
    throw DomainError("tuple of arity " + std::to_string(t.arity()) + " tested against relation of arity " +
                      std::to_string(arity_));
  }
  return members_.test(tupleRank(t, *universe_));
}

void Relation::insert(const Tuple& t) {
  if (t.arity() != arity_) {
    throw DomainError("tuple of arity " + std::to_string(t.arity()) + " inserted into relation of arity " +
                      std::to_string(arity_));
  }
  members_.set(tupleRank(t, *universe_));
}

void Relation::erase(const Tuple& t) {
  if (t.arity() != arity_) throw DomainError("tuple arity does not match relation arity");
  members_.reset(tupleRank(t, *universe_));
}

std::vector<Tuple> Relation::tuples() const {
  std::vector<Tuple> out;
  members_.forEach([&](std::size_t r) { out.push_back(tupleUnrank(r, arity_, universe_->size())); });
  return out;
}

std::vector<std::uint64_t> Relation::ranks() const {
  std::vector<std::uint64_t> out;
  members_.forEach([&](std::size_t r) { out.push_back(r); });
  return out;
}

std::strong_ordering operator<=>(const Relation& a, const Relation& b) {
  if (auto c = a.arity_ <=> b.arity_; c != 0) return c;
  if (auto c = a.members_ <=> b.members_; c != 0) return c;
  const std::string& an = a.universe_ ? a.universe_->name() : std::string();
  const std::string& bn = b.universe_ ? b.universe_->name() : std::string();
  if (auto c = an <=> bn; c != 0) return c;
  return std::compare_three_way{}(a.universe_.get(), b.universe_.get());
}

void requireCompatible(const Relation& a, const Relation& b, std::string_view context) {
  requireSameUniverse(a.universe(), b.universe(), context);
  if (a.arity() != b.arity()) {
    throw DomainError(std::string(context) + ": arity " + std::to_string(a.arity()) + " vs " +
                      std::to_string(b.arity()));
  }
}

bool isSubset(const Relation& a, const Relation& b) {
  requireCompatible(a, b, "subset");
  return a.bits().isSubsetOf(b.bits());
}

Relation unite(const Relation& a, const Relation& b) {
  requireCompatible(a, b, "union");
  Bitset bits = a.bits();
  bits |= b.bits();
  return {a.universePtr(), a.arity(), std::move(bits)};
}

Relation intersect(const Relation& a, const Relation& b) {
  requireCompatible(a, b, "intersection");
  Bitset bits = a.bits();
  bits &= b.bits();
  return {a.universePtr(), a.arity(), std::move(bits)};
}

Relation remove(const Relation& r, const Tuple& t) {
  Relation out = r;
  out.erase(t);
  return out;
}

std::string toString(const Tuple& t, const Universe& u) {
  std::string s = "(";
  for (std::size_t i = 0; i < t.arity(); ++i) {
    if (i) s += ',';
    s += u.label(t[i]);
  }
  return s + ")";
}

std::string toString(const Relation& r) {
  if (r.isEmpty()) return "empty^" + std::to_string(r.arity());
  std::string s = "{";
  bool first = true;
  for (const auto& t : r.tuples()) {
    if (!first) s += ',';
    first = false;
    s += toString(t, r.universe());
  }
  return s + "}";
}

}  // namespace galois
