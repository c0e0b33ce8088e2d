#include <algorithm>
#include <bit>
#include <unordered_set>

#include "galois/error.hpp"
#include "galois/multifunction.hpp"

namespace galois {
namespace {

// All maps l: n -> m in lexicographic order, as digit vectors.
std::vector<std::vector<std::size_t>> allIndexMaps(std::size_t n, std::size_t m) {
  std::vector<std::vector<std::size_t>> out;
  std::vector<std::size_t> l(n, 0);
  while (true) {
    out.push_back(l);
    std::size_t i = n;
    while (i-- > 0) {
      if (++l[i] < m) break;
      l[i] = 0;
      if (i == 0) return out;
    }
  }
}

std::uint64_t popcountTotal(const MultiFunction& f) {
  std::uint64_t n = 0;
  for (ValueSet v : f.table()) n += static_cast<std::uint64_t>(std::popcount(v));
  return n;
}

// Per-point value choices for candidate enumeration.
std::vector<ValueSet> submasks(ValueSet mask, FunctionKind kind) {
  std::vector<ValueSet> out;
  for (ValueSet s = mask;; s = (s - 1) & mask) {
    const bool total = s != 0;
    const bool partial = std::popcount(s) <= 1;
    bool keep = true;
    if (kind == FunctionKind::Total) keep = total;
    if (kind == FunctionKind::Partial) keep = partial;
    if (kind == FunctionKind::SingleValued) keep = total && partial;
    if (keep) out.push_back(s);
    if (s == 0) break;
  }
  std::reverse(out.begin(), out.end());
  return out;
}

// Calls `visit` on every table obtained by picking one entry of choices[i]
// for each point i.
template <typename Visit>
void forEachTable(const std::vector<std::vector<ValueSet>>& choices, Visit&& visit) {
  for (const auto& c : choices) {
    if (c.empty()) return;
  }
  std::vector<std::size_t> digit(choices.size(), 0);
  std::vector<ValueSet> table(choices.size());
  for (std::size_t i = 0; i < choices.size(); ++i) table[i] = choices[i][0];
  while (true) {
    visit(table);
    std::size_t i = choices.size();
    while (i-- > 0) {
      if (++digit[i] < choices[i].size()) {
        table[i] = choices[i][digit[i]];
        break;
      }
      digit[i] = 0;
      table[i] = choices[i][0];
      if (i == 0) return;
    }
  }
}

std::uint64_t countTables(const std::vector<std::vector<ValueSet>>& choices, std::uint64_t limit) {
  std::uint64_t n = 1;
  for (const auto& c : choices) {
    if (c.empty()) return 0;
    if (n > limit / c.size()) return limit + 1;
    n *= c.size();
  }
  return n;
}

// Decides local coverage against a fixed family of same-arity members. For
// each (point, value) it keeps the set of members carrying that value at that
// point; a selection is covered when the running intersection stays non-empty.
class LocalCoverage {
 public:
  LocalCoverage(const std::set<MultiFunction>& members, std::size_t points, std::size_t codomainSize)
      : memberCount_(members.size()), codomainSize_(codomainSize), carriers_(points * codomainSize) {
    for (auto& b : carriers_) b = Bitset(memberCount_);
    std::size_t idx = 0;
    for (const auto& g : members) {
      for (std::size_t p = 0; p < points; ++p) {
        const ValueSet v = g.value(p);
        for (std::size_t b = 0; b < codomainSize; ++b) {
          if ((v >> b) & 1u) carriers_[p * codomainSize + b].set(idx);
        }
      }
      ++idx;
    }
  }

  bool covers(std::span<const ValueSet> table) const {
    if (memberCount_ == 0) return false;
    std::vector<std::uint64_t> supp;
    for (std::size_t p = 0; p < table.size(); ++p) {
      if (table[p] != 0) supp.push_back(p);
    }
    Bitset all(memberCount_);
    all.setAll();
    std::vector<std::unordered_set<Bitset>> good(supp.size() + 1);
    return explore(table, supp, 0, all, good);
  }

 private:
  bool explore(std::span<const ValueSet> table, const std::vector<std::uint64_t>& supp, std::size_t depth,
               const Bitset& candidates, std::vector<std::unordered_set<Bitset>>& good) const {
    if (depth == supp.size()) return true;
    if (good[depth].count(candidates) != 0) return true;
    const std::uint64_t p = supp[depth];
    const ValueSet v = table[p];
    for (std::size_t b = 0; b < codomainSize_; ++b) {
      if (((v >> b) & 1u) == 0) continue;
      Bitset next = candidates;
      next &= carriers_[p * codomainSize_ + b];
      if (next.none()) return false;
      if (!explore(table, supp, depth + 1, next, good)) return false;
    }
    good[depth].insert(candidates);
    return true;
  }

  std::size_t memberCount_;
  std::size_t codomainSize_;
  std::vector<Bitset> carriers_;
};

}  // namespace

MultiFunction substitute(const MultiFunction& f, std::span<const std::size_t> l, std::size_t targetArity) {
  if (l.size() != f.arity()) throw DomainError("substitution map must be defined on every variable of f");
  for (std::size_t x : l) {
    if (x >= targetArity) throw DomainError("substitution map leaves the target arity");
  }
  const std::size_t k = f.domain().size();
  MultiFunction g(f.domainPtr(), f.codomainPtr(), targetArity);
  std::vector<Element> composed(f.arity());
  for (std::size_t r = 0; r < g.points(); ++r) {
    const Tuple a = tupleUnrank(r, targetArity, k);
    for (std::size_t i = 0; i < l.size(); ++i) composed[i] = a[l[i]];
    g.setValue(r, f.value(tupleRank(composed, k)));
  }
  return g;
}

std::vector<MultiFunction> valueRestrictions(const MultiFunction& f, bool total, std::uint64_t maxCount) {
  std::vector<std::vector<ValueSet>> choices;
  choices.reserve(f.points());
  for (ValueSet v : f.table()) choices.push_back(submasks(v, total ? FunctionKind::Total : FunctionKind::Any));
  if (countTables(choices, maxCount) > maxCount) {
    throw BudgetExceeded("too many value restrictions of " + toString(f));
  }
  std::vector<MultiFunction> out;
  forEachTable(choices, [&](const std::vector<ValueSet>& table) {
    out.emplace_back(f.domainPtr(), f.codomainPtr(), f.arity(), table);
  });
  return out;
}

std::set<MultiFunction> rvsMembers(const MultiFunction& f, std::size_t targetArity) {
  if (targetArity == 0) throw DomainError("target arity must be positive");
  std::set<MultiFunction> out;
  for (const auto& l : allIndexMaps(f.arity(), targetArity)) {
    const MultiFunction gmax = substitute(f, l, targetArity);
    if (out.count(gmax) != 0) continue;
    for (auto& g : valueRestrictions(gmax)) out.insert(std::move(g));
  }
  return out;
}

namespace {

// Pointwise-maximal substitution instances of every member, per target arity.
std::vector<std::vector<MultiFunction>> maximalSubstitutions(const FunctionClass& m) {
  const std::size_t cap = m.arityCap();
  std::vector<std::set<MultiFunction>> found(cap + 1);
  m.forEach([&](const MultiFunction& f) {
    for (std::size_t t = 1; t <= cap; ++t) {
      for (const auto& l : allIndexMaps(f.arity(), t)) found[t].insert(substitute(f, l, t));
    }
  });
  std::vector<std::vector<MultiFunction>> out(cap + 1);
  for (std::size_t t = 1; t <= cap; ++t) {
    out[t].assign(found[t].begin(), found[t].end());
    std::stable_sort(out[t].begin(), out[t].end(), [](const MultiFunction& a, const MultiFunction& b) {
      return popcountTotal(a) > popcountTotal(b);
    });
  }
  return out;
}

}  // namespace

FunctionClass rvsClosure(const FunctionClass& m) {
  FunctionClass out(m.domainPtr(), m.codomainPtr(), m.arityCap());
  const auto maximal = maximalSubstitutions(m);
  for (std::size_t t = 1; t < maximal.size(); ++t) {
    for (const auto& gmax : maximal[t]) {
      // Value restrictions of a member are already present with it.
      if (out.contains(gmax)) continue;
      for (const auto& g : valueRestrictions(gmax)) out.insert(g);
    }
  }
  return out;
}

FunctionClass rvstClosure(const FunctionClass& m) {
  FunctionClass out = m;
  const auto maximal = maximalSubstitutions(m);
  for (std::size_t t = 1; t < maximal.size(); ++t) {
    for (const auto& gmax : maximal[t]) {
      if (!gmax.isTotal()) continue;
      for (const auto& g : valueRestrictions(gmax, /*total=*/true)) out.insert(g);
    }
  }
  return out;
}

bool isLocallyCovered(const MultiFunction& f, const FunctionClass& m) {
  requireSameUniverse(f.domain(), m.domain(), "local covering");
  requireSameUniverse(f.codomain(), m.codomain(), "local covering");
  const auto& members = m.members(f.arity());
  LocalCoverage coverage(members, f.points(), f.codomain().size());
  return coverage.covers(f.table());
}

FunctionClass lcClosure(const FunctionClass& m, FunctionKind variant, std::uint64_t maxCandidates) {
  FunctionClass out(m.domainPtr(), m.codomainPtr(), m.arityCap());
  for (std::size_t n = 1; n <= m.arityCap(); ++n) {
    const auto& members = m.members(n);
    if (members.empty()) continue;
    const std::size_t points = static_cast<std::size_t>(m.domain().tupleCount(n));
    // Any covered function takes values inside the pointwise union of M_n.
    std::vector<ValueSet> reach(points, 0);
    for (const auto& g : members) {
      for (std::size_t p = 0; p < points; ++p) reach[p] |= g.value(p);
    }
    std::vector<std::vector<ValueSet>> choices;
    for (ValueSet r : reach) choices.push_back(submasks(r, variant));
    if (countTables(choices, maxCandidates) > maxCandidates) {
      throw BudgetExceeded("local covering closure at arity " + std::to_string(n) + " exceeds candidate budget");
    }
    LocalCoverage coverage(members, points, m.codomain().size());
    forEachTable(choices, [&](const std::vector<ValueSet>& table) {
      if (coverage.covers(table)) out.insert(MultiFunction(m.domainPtr(), m.codomainPtr(), n, table));
    });
  }
  return out;
}

}  // namespace galois
