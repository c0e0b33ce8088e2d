#include <mutex>
#include <unordered_map>

#include "detail.hpp"
#include "galois/error.hpp"
#include "galois/galois.hpp"

namespace galois {

struct IntensionalCSF::State {
  State(FunctionClass cls, std::size_t cap) : m(std::move(cls)), maxArity(cap) {}

  FunctionClass m;
  std::size_t maxArity;
  std::size_t ka = 0;
  std::size_t kb = 0;
  std::vector<std::uint64_t> pointsA;
  std::vector<std::uint64_t> pointsB;
  std::vector<std::vector<std::vector<Element>>> digits;  // [arity][rank] over A
  mutable std::mutex mutex;
  mutable std::vector<std::unordered_map<std::uint64_t, std::uint64_t>> memo;

  std::uint64_t compute(std::size_t arity, std::uint64_t antecedent) const {
    std::vector<std::uint64_t> columns;
    for (std::uint64_t x = antecedent; x != 0; x &= x - 1) {
      columns.push_back(static_cast<std::uint64_t>(__builtin_ctzll(x)));
    }
    const std::uint64_t full = pointsB[arity] == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << pointsB[arity]) - 1;
    const auto& dig = digits[arity];
    std::uint64_t out = 0;
    std::vector<ValueSet> rows(arity);
    m.forEach([&](const MultiFunction& g) {
      if (out == full) return;
      detail::forEachChoice(columns.size(), g.arity(), [&](std::span<const std::size_t> choice) {
        for (std::size_t i = 0; i < arity; ++i) {
          std::uint64_t point = 0;
          for (std::size_t j = 0; j < choice.size(); ++j) point = point * ka + dig[columns[choice[j]]][i];
          rows[i] = g.value(point);
        }
        out |= detail::productMask(rows, kb);
        return out != full;
      });
    });
    return out;
  }

  std::uint64_t lookup(std::size_t arity, std::uint64_t antecedent) const {
    {
      std::lock_guard lock(mutex);
      auto it = memo[arity].find(antecedent);
      if (it != memo[arity].end()) return it->second;
    }
    const std::uint64_t s = compute(arity, antecedent);
    std::lock_guard lock(mutex);
    memo[arity].emplace(antecedent, s);
    return s;
  }
};

IntensionalCSF::IntensionalCSF(FunctionClass m, std::size_t maxArity)
    : state_(std::make_unique<State>(std::move(m), maxArity)) {
  if (maxArity == 0) throw DomainError("constraint arity cap must be positive");
  State& st = *state_;
  st.ka = st.m.domain().size();
  st.kb = st.m.codomain().size();
  st.pointsA.assign(maxArity + 1, 0);
  st.pointsB.assign(maxArity + 1, 0);
  st.digits.resize(maxArity + 1);
  st.memo.resize(maxArity + 1);
  for (std::size_t a = 1; a <= maxArity; ++a) {
    st.pointsA[a] = st.m.domain().tupleCount(a);
    st.pointsB[a] = st.m.codomain().tupleCount(a);
    if (st.pointsA[a] > 64 || st.pointsB[a] > 64) {
      throw BudgetExceeded("constraints of arity " + std::to_string(a) + " are too wide for the CSF tables");
    }
    st.digits[a] = detail::digitTable(st.ka, a);
  }
}

IntensionalCSF::~IntensionalCSF() = default;
IntensionalCSF::IntensionalCSF(IntensionalCSF&&) noexcept = default;
IntensionalCSF& IntensionalCSF::operator=(IntensionalCSF&&) noexcept = default;

const FunctionClass& IntensionalCSF::generators() const noexcept { return state_->m; }
std::size_t IntensionalCSF::maxArity() const noexcept { return state_->maxArity; }

std::uint64_t IntensionalCSF::leastConsequentMask(std::size_t arity, std::uint64_t antecedent) const {
  if (arity == 0 || arity > state_->maxArity) {
    throw DomainError("arity " + std::to_string(arity) + " is outside the CSF tables");
  }
  return state_->lookup(arity, antecedent);
}

Relation IntensionalCSF::leastConsequent(const Relation& antecedent) const {
  requireSameUniverse(antecedent.universe(), state_->m.domain(), "CSF antecedent");
  const std::uint64_t s = leastConsequentMask(antecedent.arity(), antecedent.bits().lowWord());
  const std::size_t width = static_cast<std::size_t>(state_->pointsB[antecedent.arity()]);
  return Relation(state_->m.codomainPtr(), antecedent.arity(), Bitset::fromWord(width, s));
}

bool IntensionalCSF::contains(const Constraint& c) const {
  requireSameUniverse(c.consequent().universe(), state_->m.codomain(), "CSF consequent");
  const Relation s = leastConsequent(c.antecedent());
  return isSubset(s, c.consequent());
}

namespace {

// Searches column tuples of the given arity for one whose image under f
// leaves S_min of the column set.
std::optional<Constraint> violationAt(const IntensionalCSF& csf, const MultiFunction& f, std::size_t arity,
                                      const std::vector<std::vector<Element>>& dig) {
  const std::size_t ka = f.domain().size();
  const std::size_t kb = f.codomain().size();
  const std::size_t n = f.arity();
  std::vector<ValueSet> rows(arity);
  std::optional<Constraint> out;
  detail::forEachChoice(dig.size(), n, [&](std::span<const std::size_t> choice) {
    std::uint64_t antecedent = 0;
    for (std::size_t j = 0; j < n; ++j) antecedent |= std::uint64_t{1} << choice[j];
    for (std::size_t i = 0; i < arity; ++i) {
      std::uint64_t point = 0;
      for (std::size_t j = 0; j < n; ++j) point = point * ka + dig[choice[j]][i];
      rows[i] = f.value(point);
      if (rows[i] == 0) return true;
    }
    const std::uint64_t image = detail::productMask(rows, kb);
    const std::uint64_t smin = csf.leastConsequentMask(arity, antecedent);
    if ((image & ~smin) == 0) return true;
    const std::size_t wa = dig.size();
    const std::size_t wb = static_cast<std::size_t>(f.codomain().tupleCount(arity));
    out = Constraint(Relation(f.domainPtr(), arity, Bitset::fromWord(wa, antecedent)),
                     Relation(f.codomainPtr(), arity, Bitset::fromWord(wb, smin)));
    return false;
  });
  return out;
}

}  // namespace

bool IntensionalCSF::admits(const MultiFunction& f) const {
  requireSameUniverse(f.domain(), state_->m.domain(), "CSF function domain");
  requireSameUniverse(f.codomain(), state_->m.codomain(), "CSF function codomain");
  const std::size_t top = state_->maxArity;
  return !violationAt(*this, f, top, state_->digits[top]).has_value();
}

std::optional<Constraint> IntensionalCSF::violatedBy(const MultiFunction& f) const {
  requireSameUniverse(f.domain(), state_->m.domain(), "CSF function domain");
  requireSameUniverse(f.codomain(), state_->m.codomain(), "CSF function codomain");
  for (std::size_t a = 1; a <= state_->maxArity; ++a) {
    if (auto c = violationAt(*this, f, a, state_->digits[a])) return c;
  }
  return std::nullopt;
}

namespace {

template <typename Cmp>
bool compareTables(const IntensionalCSF& x, const IntensionalCSF& y, Cmp&& cmp) {
  const std::size_t top = std::min(x.maxArity(), y.maxArity());
  for (std::size_t a = 1; a <= top; ++a) {
    const std::uint64_t points = x.generators().domain().tupleCount(a);
    if (points >= 32) throw BudgetExceeded("too many antecedents to compare CSF tables");
    for (std::uint64_t r = 0; r < (std::uint64_t{1} << points); ++r) {
      if (!cmp(x.leastConsequentMask(a, r), y.leastConsequentMask(a, r))) return false;
    }
  }
  return true;
}

}  // namespace

bool IntensionalCSF::sameTables(const IntensionalCSF& other) const {
  requireSameUniverse(other.generators().domain(), state_->m.domain(), "CSF comparison");
  requireSameUniverse(other.generators().codomain(), state_->m.codomain(), "CSF comparison");
  return compareTables(*this, other, [](std::uint64_t a, std::uint64_t b) { return a == b; });
}

bool IntensionalCSF::tablesBelow(const IntensionalCSF& other) const {
  requireSameUniverse(other.generators().domain(), state_->m.domain(), "CSF comparison");
  requireSameUniverse(other.generators().codomain(), state_->m.codomain(), "CSF comparison");
  return compareTables(*this, other, [](std::uint64_t a, std::uint64_t b) { return (a & ~b) == 0; });
}

IntensionalCSF csf(const FunctionClass& m, std::size_t maxArity) { return IntensionalCSF(m, maxArity); }

}  // namespace galois
