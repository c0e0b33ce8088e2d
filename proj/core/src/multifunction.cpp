#include "galois/multifunction.hpp"

#include <algorithm>
#include <bit>

#include "galois/error.hpp"

namespace galois {
namespace {

constexpr std::uint64_t kMaxTablePoints = std::uint64_t{1} << 24;

std::size_t tableSize(const Universe& domain, std::size_t arity) {
  if (arity == 0) throw DomainError("functions must have positive arity");
  const std::uint64_t n = domain.tupleCount(arity);
  if (n > kMaxTablePoints) {
    throw BudgetExceeded("function table of arity " + std::to_string(arity) + " over '" + domain.name() +
                         "' is too large");
  }
  return static_cast<std::size_t>(n);
}

}  // namespace

MultiFunction::MultiFunction(UniverseRef domain, UniverseRef codomain, std::size_t arity)
    : domain_(std::move(domain)),
      codomain_(std::move(codomain)),
      arity_(arity),
      table_(tableSize(*domain_, arity), 0) {}

MultiFunction::MultiFunction(UniverseRef domain, UniverseRef codomain, std::size_t arity,
                             std::vector<ValueSet> table)
    : domain_(std::move(domain)), codomain_(std::move(codomain)), arity_(arity), table_(std::move(table)) {
  if (table_.size() != tableSize(*domain_, arity_)) {
    throw DomainError("function table has " + std::to_string(table_.size()) + " entries, expected " +
                      std::to_string(tableSize(*domain_, arity_)));
  }
  const ValueSet allowed = codomain_->size() >= 32 ? ~ValueSet{0} : (ValueSet{1} << codomain_->size()) - 1;
  for (ValueSet v : table_) {
    if ((v & ~allowed) != 0) throw DomainError("function value outside codomain '" + codomain_->name() + "'");
  }
}

ValueSet MultiFunction::value(const Tuple& input) const {
  if (input.arity() != arity_) throw DomainError("input tuple arity does not match function arity");
  return table_[tupleRank(input, *domain_)];
}

void MultiFunction::setValue(std::uint64_t inputRank, ValueSet values) {
  if (inputRank >= table_.size()) throw DomainError("input rank out of range");
  table_[inputRank] = values;
}

void MultiFunction::setValue(const Tuple& input, ValueSet values) {
  if (input.arity() != arity_) throw DomainError("input tuple arity does not match function arity");
  setValue(tupleRank(input, *domain_), values);
}

bool MultiFunction::isTotal() const noexcept {
  return std::all_of(table_.begin(), table_.end(), [](ValueSet v) { return v != 0; });
}

bool MultiFunction::isPartial() const noexcept {
  return std::all_of(table_.begin(), table_.end(), [](ValueSet v) { return std::popcount(v) <= 1; });
}

bool MultiFunction::isEmptyValued() const noexcept {
  return std::all_of(table_.begin(), table_.end(), [](ValueSet v) { return v == 0; });
}

std::vector<std::uint64_t> MultiFunction::support() const {
  std::vector<std::uint64_t> out;
  for (std::size_t i = 0; i < table_.size(); ++i) {
    if (table_[i] != 0) out.push_back(i);
  }
  return out;
}

std::strong_ordering operator<=>(const MultiFunction& a, const MultiFunction& b) {
  if (auto c = a.arity_ <=> b.arity_; c != 0) return c;
  if (auto c = a.table_ <=> b.table_; c != 0) return c;
  if (a.domain_ != b.domain_) return std::compare_three_way{}(a.domain_.get(), b.domain_.get());
  return std::compare_three_way{}(a.codomain_.get(), b.codomain_.get());
}

MultiFunction emptyValuedFunction(UniverseRef domain, UniverseRef codomain, std::size_t arity) {
  return {std::move(domain), std::move(codomain), arity};
}

bool belongsTo(const MultiFunction& f, FunctionKind kind) noexcept {
  switch (kind) {
    case FunctionKind::Any:
      return true;
    case FunctionKind::Total:
      return f.isTotal();
    case FunctionKind::Partial:
      return f.isPartial();
    case FunctionKind::SingleValued:
      return f.isSingleValued();
  }
  return false;
}

std::string_view kindName(FunctionKind kind) noexcept {
  switch (kind) {
    case FunctionKind::Any:
      return "multivalued";
    case FunctionKind::Total:
      return "total";
    case FunctionKind::Partial:
      return "partial";
    case FunctionKind::SingleValued:
      return "single-valued";
  }
  return "?";
}

// ---------------------------------------------------------------------------

FunctionClass::FunctionClass(UniverseRef domain, UniverseRef codomain, std::size_t arityCap)
    : domain_(std::move(domain)), codomain_(std::move(codomain)), perArity_(arityCap + 1) {
  if (arityCap == 0) throw DomainError("function class arity cap must be positive");
}

void FunctionClass::requireMember(const MultiFunction& f) const {
  requireSameUniverse(f.domain(), *domain_, "function class domain");
  requireSameUniverse(f.codomain(), *codomain_, "function class codomain");
  if (f.arity() > arityCap()) {
    throw DomainError("function of arity " + std::to_string(f.arity()) + " exceeds class cap " +
                      std::to_string(arityCap()));
  }
}

bool FunctionClass::insert(const MultiFunction& f) {
  requireMember(f);
  return perArity_[f.arity()].insert(f).second;
}

bool FunctionClass::contains(const MultiFunction& f) const {
  if (f.domainPtr() != domain_ || f.codomainPtr() != codomain_ || f.arity() > arityCap()) return false;
  return perArity_[f.arity()].count(f) != 0;
}

const std::set<MultiFunction>& FunctionClass::members(std::size_t arity) const {
  static const std::set<MultiFunction> kNone;
  return arity < perArity_.size() ? perArity_[arity] : kNone;
}

std::size_t FunctionClass::size() const noexcept {
  std::size_t n = 0;
  for (const auto& b : perArity_) n += b.size();
  return n;
}

bool FunctionClass::isSubsetOf(const FunctionClass& other) const {
  for (std::size_t n = 1; n < perArity_.size(); ++n) {
    for (const auto& f : perArity_[n]) {
      if (!other.contains(f)) return false;
    }
  }
  return true;
}

FunctionClass FunctionClass::filtered(FunctionKind kind) const {
  FunctionClass out(domain_, codomain_, arityCap());
  forEach([&](const MultiFunction& f) {
    if (belongsTo(f, kind)) out.perArity_[f.arity()].insert(f);
  });
  return out;
}

FunctionClass FunctionClass::withCap(std::size_t arityCap) const {
  FunctionClass out(domain_, codomain_, arityCap);
  for (std::size_t n = 1; n < perArity_.size() && n <= arityCap; ++n) out.perArity_[n] = perArity_[n];
  return out;
}

FunctionClass unite(const FunctionClass& a, const FunctionClass& b) {
  requireSameUniverse(a.domain(), b.domain(), "class union");
  requireSameUniverse(a.codomain(), b.codomain(), "class union");
  FunctionClass out = a.withCap(std::max(a.arityCap(), b.arityCap()));
  b.forEach([&](const MultiFunction& f) { out.insert(f); });
  return out;
}

// ---------------------------------------------------------------------------

namespace {

// Adds the product of per-row value sets to `out`, an |B|^m bitset.
void addProduct(std::span<const ValueSet> rows, std::size_t base, Bitset& out) {
  const std::size_t m = rows.size();
  for (ValueSet v : rows) {
    if (v == 0) return;
  }
  std::vector<Element> digit(m);
  for (std::size_t i = 0; i < m; ++i) digit[i] = static_cast<Element>(std::countr_zero(rows[i]));
  while (true) {
    out.set(tupleRank(digit, base));
    std::size_t i = m;
    while (i-- > 0) {
      const ValueSet higher = rows[i] & ~((ValueSet{2} << digit[i]) - 1);
      if (higher != 0) {
        digit[i] = static_cast<Element>(std::countr_zero(higher));
        break;
      }
      digit[i] = static_cast<Element>(std::countr_zero(rows[i]));
      if (i == 0) return;
    }
  }
}

}  // namespace

Relation imageOfColumns(const MultiFunction& f, std::span<const Tuple> columns) {
  if (columns.size() != f.arity()) {
    throw DomainError("expected " + std::to_string(f.arity()) + " columns, got " + std::to_string(columns.size()));
  }
  const std::size_t m = columns.front().arity();
  for (const auto& c : columns) {
    if (c.arity() != m) throw DomainError("columns have different arities");
  }
  const std::size_t k = f.domain().size();
  std::vector<ValueSet> rows(m);
  std::vector<Element> row(f.arity());
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < f.arity(); ++j) {
      if (columns[j][i] >= k) throw DomainError("column entry outside domain");
      row[j] = columns[j][i];
    }
    rows[i] = f.value(tupleRank(row, k));
  }
  Relation out(f.codomainPtr(), m);
  Bitset bits = out.bits();
  addProduct(rows, f.codomain().size(), bits);
  return {f.codomainPtr(), m, std::move(bits)};
}

Relation imageOfRelation(const MultiFunction& f, const Relation& r) {
  requireSameUniverse(r.universe(), f.domain(), "image of relation");
  const std::size_t m = r.arity();
  const std::size_t n = f.arity();
  const std::size_t k = f.domain().size();
  Bitset bits(static_cast<std::size_t>(f.codomain().tupleCount(m)));
  const std::vector<Tuple> members = r.tuples();
  if (!members.empty()) {
    std::vector<std::size_t> choice(n, 0);
    std::vector<ValueSet> rows(m);
    std::vector<Element> row(n);
    while (true) {
      for (std::size_t i = 0; i < m; ++i) {
        for (std::size_t j = 0; j < n; ++j) row[j] = members[choice[j]][i];
        rows[i] = f.value(tupleRank(row, k));
      }
      addProduct(rows, f.codomain().size(), bits);
      std::size_t j = n;
      while (j-- > 0) {
        if (++choice[j] < members.size()) break;
        choice[j] = 0;
        if (j == 0) goto done;
      }
    }
  }
done:
  return {f.codomainPtr(), m, std::move(bits)};
}

bool isValueRestriction(const MultiFunction& g, const MultiFunction& f) {
  requireSameUniverse(g.domain(), f.domain(), "value restriction");
  requireSameUniverse(g.codomain(), f.codomain(), "value restriction");
  if (g.arity() != f.arity()) {
    throw DomainError("value restriction needs equal arities, got " + std::to_string(g.arity()) + " and " +
                      std::to_string(f.arity()));
  }
  for (std::size_t i = 0; i < g.points(); ++i) {
    if ((g.value(i) & ~f.value(i)) != 0) return false;
  }
  return true;
}

std::string valueSetString(ValueSet v, const Universe& codomain) {
  std::string s = "{";
  bool first = true;
  for (Element b = 0; b < codomain.size(); ++b) {
    if ((v >> b) & 1u) {
      if (!first) s += ',';
      first = false;
      s += codomain.label(b);
    }
  }
  return s + "}";
}

std::string toString(const MultiFunction& f) {
  std::string s = "[";
  for (std::size_t i = 0; i < f.points(); ++i) {
    if (i) s += "; ";
    s += toString(tupleUnrank(i, f.arity(), f.domain().size()), f.domain());
    s += "->";
    s += valueSetString(f.value(i), f.codomain());
  }
  return s + "]";
}

}  // namespace galois
