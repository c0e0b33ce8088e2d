#include "galois/enumerate.hpp"

#include <algorithm>
#include <numeric>
#include <set>

#include "detail.hpp"
#include "galois/error.hpp"

namespace galois {
namespace {

std::uint64_t saturatingPow2(std::uint64_t bits) {
  return bits >= 64 ? ~std::uint64_t{0} : std::uint64_t{1} << bits;
}

void requireBudget(std::uint64_t count, const Budget& budget, const std::string& what) {
  if (budget.maxTables == 0) throw DomainError("budget must allow at least one table");
  if (count > budget.maxTables) {
    throw BudgetExceeded(what + ": " + std::to_string(count) + " items exceed the budget of " +
                         std::to_string(budget.maxTables));
  }
}

}  // namespace

std::uint64_t functionCount(const Universe& a, const Universe& b, std::size_t arity) {
  const std::uint64_t points = a.tupleCount(arity);
  if (points >= 64) return ~std::uint64_t{0};
  const std::uint64_t bits = points * b.size();
  return saturatingPow2(bits);
}

FunctionStream::FunctionStream(UniverseRef a, UniverseRef b, std::size_t arity, const Budget& budget)
    : a_(std::move(a)), b_(std::move(b)), arity_(arity), count_(functionCount(*a_, *b_, arity)) {
  if (arity == 0) throw DomainError("functions must have positive arity");
  requireBudget(count_, budget, "function enumeration");
  end_ = count_;
}

FunctionStream& FunctionStream::range(std::uint64_t first, std::uint64_t last) {
  if (first > last || last > count_) throw DomainError("function stream range out of bounds");
  pos_ = first;
  end_ = last;
  return *this;
}

std::optional<MultiFunction> FunctionStream::next() {
  if (pos_ >= end_) return std::nullopt;
  const std::size_t points = static_cast<std::size_t>(a_->tupleCount(arity_));
  const std::size_t kb = b_->size();
  const std::uint64_t digitMask = (std::uint64_t{1} << kb) - 1;
  std::vector<ValueSet> table(points);
  std::uint64_t x = pos_++;
  for (std::size_t p = points; p-- > 0;) {
    table[p] = static_cast<ValueSet>(x & digitMask);
    x >>= kb;
  }
  return MultiFunction(a_, b_, arity_, std::move(table));
}

RelationStream::RelationStream(UniverseRef u, std::size_t arity, const Budget& budget)
    : u_(std::move(u)), arity_(arity) {
  if (arity == 0) throw DomainError("relations must have positive arity");
  const std::uint64_t width = u_->tupleCount(arity);
  width_ = static_cast<std::size_t>(std::min<std::uint64_t>(width, 64));
  count_ = saturatingPow2(width);
  requireBudget(count_, budget, "relation enumeration");
}

std::optional<Relation> RelationStream::next() {
  if (pos_ >= count_) return std::nullopt;
  return Relation(u_, arity_, Bitset::fromWord(width_, pos_++));
}

ConstraintStream::ConstraintStream(UniverseRef a, UniverseRef b, std::size_t arity, const Budget& budget)
    : a_(std::move(a)), b_(std::move(b)), arity_(arity) {
  if (arity == 0) throw DomainError("constraints must have positive arity");
  const std::uint64_t wa = a_->tupleCount(arity);
  const std::uint64_t wb = b_->tupleCount(arity);
  widthA_ = static_cast<std::size_t>(std::min<std::uint64_t>(wa, 64));
  widthB_ = static_cast<std::size_t>(std::min<std::uint64_t>(wb, 64));
  count_ = saturatingPow2(wa + wb);
  requireBudget(count_, budget, "constraint enumeration");
}

std::optional<Constraint> ConstraintStream::next() {
  if (pos_ >= count_) return std::nullopt;
  const std::uint64_t x = pos_++;
  const std::uint64_t s = x & ((std::uint64_t{1} << widthB_) - 1);
  const std::uint64_t r = x >> widthB_;
  return Constraint(Relation(a_, arity_, Bitset::fromWord(widthA_, r)),
                    Relation(b_, arity_, Bitset::fromWord(widthB_, s)));
}

// ---------------------------------------------------------------------------

Scheme canonicalScheme(const Scheme& h) {
  // Drop unused indeterminates, then take the least sorted form over all
  // renamings.
  std::vector<std::size_t> used;
  for (std::size_t j = 0; j < h.sourceCount(); ++j) {
    for (const Slot& s : h.map(j)) {
      if (s.indeterminate && std::find(used.begin(), used.end(), s.index) == used.end()) used.push_back(s.index);
    }
  }
  std::sort(used.begin(), used.end());
  std::vector<std::size_t> perm(used.size());
  std::iota(perm.begin(), perm.end(), 0);
  std::optional<std::vector<std::vector<Slot>>> best;
  do {
    std::vector<std::vector<Slot>> maps;
    for (std::size_t j = 0; j < h.sourceCount(); ++j) {
      std::vector<Slot> row;
      for (const Slot& s : h.map(j)) {
        if (!s.indeterminate) {
          row.push_back(s);
        } else {
          const auto pos = static_cast<std::size_t>(std::find(used.begin(), used.end(), s.index) - used.begin());
          row.push_back(Slot::variable(perm[pos]));
        }
      }
      maps.push_back(std::move(row));
    }
    std::sort(maps.begin(), maps.end());
    if (!best || maps < *best) best = std::move(maps);
  } while (std::next_permutation(perm.begin(), perm.end()));
  return Scheme(h.target(), used.size(), std::move(*best));
}

std::vector<Scheme> allSchemes(const Bounds& bounds, std::size_t maxSourceArity, const Budget& budget) {
  bounds.validate();
  if (maxSourceArity == 0) throw DomainError("source arity cap must be positive");
  std::set<Scheme> found;
  std::uint64_t visited = 0;
  for (std::size_t m = 1; m <= bounds.maxConstraintArity; ++m) {
    for (std::size_t v = 0; v <= bounds.maxIndeterminates; ++v) {
      const std::size_t width = m + v;
      std::vector<std::vector<Slot>> maps;
      for (std::size_t n = 1; n <= maxSourceArity; ++n) {
        const std::uint64_t count = detail::ipow(width, n);
        for (std::uint64_t r = 0; r < count; ++r) {
          std::vector<Slot> row;
          for (Element e : tupleUnrank(r, n, width).entries()) {
            row.push_back(e < m ? Slot::target(e) : Slot::variable(e - m));
          }
          maps.push_back(std::move(row));
        }
      }
      for (std::size_t j = 1; j <= bounds.maxFamilySize; ++j) {
        std::vector<std::size_t> pick(j, 0);
        while (true) {
          if (++visited > budget.maxTables) throw BudgetExceeded("scheme enumeration exceeds the budget");
          std::vector<std::vector<Slot>> family;
          std::uint64_t usedVars = 0;
          for (std::size_t i : pick) {
            family.push_back(maps[i]);
            for (const Slot& s : maps[i]) {
              if (s.indeterminate) usedVars |= std::uint64_t{1} << s.index;
            }
          }
          if (usedVars == (std::uint64_t{1} << v) - 1) {
            found.insert(canonicalScheme(Scheme(m, v, std::move(family))));
          }
          // Next non-decreasing index sequence.
          std::size_t i = j;
          while (i-- > 0 && pick[i] + 1 == maps.size()) {
          }
          if (i == static_cast<std::size_t>(-1)) break;
          ++pick[i];
          for (std::size_t k = i + 1; k < j; ++k) pick[k] = pick[i];
        }
      }
    }
  }
  return {found.begin(), found.end()};
}

// ---------------------------------------------------------------------------

std::uint64_t Sampler::below(std::uint64_t n) {
  if (n == 0) throw DomainError("cannot sample from an empty range");
  return rng_() % n;
}

MultiFunction Sampler::function(const UniverseRef& a, const UniverseRef& b, std::size_t arity, FunctionKind kind) {
  MultiFunction f(a, b, arity);
  const std::size_t kb = b->size();
  const std::uint64_t subsets = std::uint64_t{1} << kb;
  for (std::size_t p = 0; p < f.points(); ++p) {
    ValueSet v = 0;
    switch (kind) {
      case FunctionKind::Any:
        v = static_cast<ValueSet>(below(subsets));
        break;
      case FunctionKind::Total:
        v = static_cast<ValueSet>(1 + below(subsets - 1));
        break;
      case FunctionKind::Partial: {
        const std::uint64_t x = below(kb + 1);
        v = x == 0 ? 0 : ValueSet{1} << (x - 1);
        break;
      }
      case FunctionKind::SingleValued:
        v = ValueSet{1} << below(kb);
        break;
    }
    f.setValue(p, v);
  }
  return f;
}

Relation Sampler::relation(const UniverseRef& u, std::size_t arity) {
  Relation r(u, arity);
  const std::uint64_t width = u->tupleCount(arity);
  for (std::uint64_t i = 0; i < width; ++i) {
    if (rng_() & 1u) r.insertRank(i);
  }
  return r;
}

Constraint Sampler::constraint(const UniverseRef& a, const UniverseRef& b, std::size_t arity) {
  Relation r = relation(a, arity);
  Relation s = relation(b, arity);
  return Constraint(std::move(r), std::move(s));
}

FunctionClass Sampler::functionClass(const UniverseRef& a, const UniverseRef& b, std::size_t arityCap,
                                     std::size_t maxMembers, FunctionKind kind) {
  FunctionClass out(a, b, arityCap);
  const std::uint64_t size = below(maxMembers + 1);
  for (std::uint64_t i = 0; i < size; ++i) {
    const std::size_t arity = 1 + static_cast<std::size_t>(below(arityCap));
    out.insert(function(a, b, arity, kind));
  }
  return out;
}

ConstraintSet Sampler::constraintSet(const UniverseRef& a, const UniverseRef& b, std::size_t arityCap,
                                     std::size_t maxMembers) {
  ConstraintSet out(a, b, arityCap);
  const std::uint64_t size = below(maxMembers + 1);
  for (std::uint64_t i = 0; i < size; ++i) {
    const std::size_t arity = 1 + static_cast<std::size_t>(below(arityCap));
    out.insert(constraint(a, b, arity));
  }
  return out;
}

Scheme Sampler::scheme(std::size_t target, const std::vector<std::size_t>& sourceArities,
                       std::size_t indeterminates) {
  std::vector<std::vector<Slot>> maps;
  for (std::size_t n : sourceArities) {
    std::vector<Slot> row;
    for (std::size_t i = 0; i < n; ++i) {
      const std::size_t x = static_cast<std::size_t>(below(target + indeterminates));
      row.push_back(x < target ? Slot::target(x) : Slot::variable(x - target));
    }
    maps.push_back(std::move(row));
  }
  return Scheme(target, indeterminates, std::move(maps));
}

MultiFunction sampleFunction(std::uint64_t seed, const UniverseRef& a, const UniverseRef& b, std::size_t arity,
                             FunctionKind kind) {
  return Sampler(seed).function(a, b, arity, kind);
}

FunctionClass sampleClass(std::uint64_t seed, const UniverseRef& a, const UniverseRef& b, std::size_t arityCap,
                          std::size_t maxMembers, FunctionKind kind) {
  return Sampler(seed).functionClass(a, b, arityCap, maxMembers, kind);
}

ConstraintSet sampleConstraintSet(std::uint64_t seed, const UniverseRef& a, const UniverseRef& b,
                                  std::size_t arityCap, std::size_t maxMembers) {
  return Sampler(seed).constraintSet(a, b, arityCap, maxMembers);
}

}  // namespace galois
