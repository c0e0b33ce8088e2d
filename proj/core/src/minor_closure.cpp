#include <algorithm>
#include <bit>
#include <map>
#include <numeric>

#include "galois/constraint.hpp"
#include "galois/error.hpp"

namespace galois {
namespace {

constexpr std::size_t kMaxAntecedentPoints = 20;
constexpr std::size_t kMaxConsequentPoints = 63;

std::uint64_t ipow(std::uint64_t base, std::size_t e) {
  std::uint64_t r = 1;
  while (e-- > 0) r *= base;
  return r;
}

// A scheme map n -> m + V encoded as slot codes: code < m is a target
// position, code >= m is indeterminate code - m.
using MapCode = std::vector<std::uint8_t>;

std::vector<MapCode> allMapCodes(std::size_t n, std::size_t width) {
  std::vector<MapCode> out;
  MapCode h(n, 0);
  while (true) {
    out.push_back(h);
    std::size_t i = n;
    while (i-- > 0) {
      if (++h[i] < width) break;
      h[i] = 0;
      if (i == 0) return out;
    }
  }
}

// pull[t] = rank(t o h) for every t in U^width, where t is read as the target
// digits followed by the indeterminate digits.
std::vector<std::uint32_t> pullArray(const MapCode& h, std::size_t width, std::size_t k) {
  const std::uint64_t count = ipow(k, width);
  std::vector<std::uint32_t> pull(count);
  std::vector<std::uint32_t> digits(width);
  for (std::uint64_t t = 0; t < count; ++t) {
    std::uint64_t x = t;
    for (std::size_t i = width; i-- > 0;) {
      digits[i] = static_cast<std::uint32_t>(x % k);
      x /= k;
    }
    std::uint32_t r = 0;
    for (std::uint8_t c : h) r = r * static_cast<std::uint32_t>(k) + digits[c];
    pull[t] = r;
  }
  return pull;
}

struct MapEntry {
  MapCode code;
  std::uint32_t usedVars = 0;  // bitmask of indeterminates appearing in the map
  std::vector<std::uint32_t> pullA;
  std::vector<std::uint32_t> pullB;
};

struct Generator {
  std::size_t arity;
  std::uint64_t r;
  std::uint64_t s;
};

}  // namespace

class MinorClosureEngine {
 public:
  MinorClosureEngine(const ConstraintSet& t, const Bounds& bounds, MinorKind kind)
      : t_(t), bounds_(bounds), kind_(kind), ka_(t.antecedentUniverse().size()), kb_(t.consequentUniverse().size()) {
    bounds_.validate();
    const std::size_t mmax = bounds_.maxConstraintArity;
    if (t.arityCap() > mmax) {
      t.forEach([&](const Constraint& c) {
        if (c.arity() > mmax) {
          throw DomainError("constraint of arity " + std::to_string(c.arity()) + " exceeds m_max " +
                            std::to_string(mmax));
        }
      });
    }
    result_.a_ = t.antecedentPtr();
    result_.b_ = t.consequentPtr();
    result_.kind_ = kind;
    result_.bounds_ = bounds_;
    result_.completeness_ = kind == MinorKind::Weak ? Completeness::Exact : Completeness::LowerApproximation;
    result_.table_.resize(mmax + 1);
    pointsA_.resize(mmax + 1);
    pointsB_.resize(mmax + 1);
    for (std::size_t m = 1; m <= mmax; ++m) {
      pointsA_[m] = ipow(ka_, m);
      pointsB_[m] = ipow(kb_, m);
      if (pointsA_[m] > kMaxAntecedentPoints || pointsB_[m] > kMaxConsequentPoints) {
        throw BudgetExceeded("closure tables at arity " + std::to_string(m) + " exceed the supported size");
      }
      result_.table_[m].assign(std::size_t{1} << pointsA_[m], MinorClosedSet::kUndefined);
    }
  }

  MinorClosedSet run() {
    t_.forEach([&](const Constraint& c) {
      add(c.arity(), c.antecedent().bits().lowWord(), c.consequent().bits().lowWord());
    });
    std::size_t rounds = 0;
    bool changed = true;
    while (changed) {
      ++rounds;
      changed = round();
    }
    result_.rounds_ = rounds;
    return std::move(result_);
  }

 private:

  // Inserts (r, s) together with its relaxations and its intersections with
  // existing members: every subset q of r gets S_min(q) &= s.
  bool add(std::size_t m, std::uint64_t r, std::uint64_t s) {
    auto& table = result_.table_[m];
    bool changed = false;
    for (std::uint64_t q = r;; q = (q - 1) & r) {
      std::uint64_t& slot = table[q];
      const std::uint64_t next = slot == MinorClosedSet::kUndefined ? s : (slot & s);
      if (next != slot) {
        slot = next;
        changed = true;
      }
      if (q == 0) break;
    }
    return changed;
  }

  std::vector<Generator> generators() const {
    std::vector<Generator> out;
    for (std::size_t m = 1; m < result_.table_.size(); ++m) {
      const auto& table = result_.table_[m];
      const std::uint64_t points = pointsA_[m];
      for (std::uint64_t r = 0; r < table.size(); ++r) {
        const std::uint64_t s = table[r];
        if (s == MinorClosedSet::kUndefined) continue;
        bool dominated = false;
        for (std::uint64_t x = 0; x < points && !dominated; ++x) {
          const std::uint64_t bit = std::uint64_t{1} << x;
          dominated = (r & bit) == 0 && table[r | bit] == s;
        }
        if (!dominated) out.push_back({m, r, s});
      }
    }
    return out;
  }

  const std::vector<MapEntry>& maps(std::size_t n, std::size_t m, std::size_t v) {
    auto key = std::make_tuple(n, m, v);
    auto it = mapCache_.find(key);
    if (it != mapCache_.end()) return it->second;
    std::vector<MapEntry> entries;
    const std::size_t width = m + v;
    for (auto& code : allMapCodes(n, width)) {
      MapEntry e;
      for (std::uint8_t c : code) {
        if (c >= m) e.usedVars |= std::uint32_t{1} << (c - m);
      }
      e.pullA = pullArray(code, width, ka_);
      e.pullB = pullArray(code, width, kb_);
      e.code = std::move(code);
      entries.push_back(std::move(e));
    }
    return mapCache_.emplace(key, std::move(entries)).first->second;
  }

  // One side of a tight minor over masks.
  static std::uint64_t side(std::span<const std::uint64_t> rel, std::span<const std::vector<std::uint32_t>* const> pulls,
                            std::uint64_t targets, std::uint64_t sigmas) {
    std::uint64_t out = 0;
    for (std::uint64_t a = 0; a < targets; ++a) {
      for (std::uint64_t s = 0; s < sigmas; ++s) {
        const std::uint64_t t = a * sigmas + s;
        bool all = true;
        for (std::size_t j = 0; j < rel.size() && all; ++j) all = (rel[j] >> (*pulls[j])[t]) & 1u;
        if (all) {
          out |= std::uint64_t{1} << a;
          break;
        }
      }
    }
    return out;
  }

  bool round() {
    const auto gens = generators();
    bool changed = false;
    const std::size_t mmax = bounds_.maxConstraintArity;
    // Simple schemes with a single source; intersections of several sources
    // are already folded into the table.
    for (const auto& g : gens) {
      for (std::size_t m = 1; m <= mmax; ++m) {
        for (const auto& e : maps(g.arity, m, 0)) {
          const std::vector<std::uint32_t>* pa = &e.pullA;
          const std::vector<std::uint32_t>* pb = &e.pullB;
          const std::uint64_t r = side({&g.r, 1}, {&pa, 1}, pointsA_[m], 1);
          const std::uint64_t s = side({&g.s, 1}, {&pb, 1}, pointsB_[m], 1);
          changed |= add(m, r, s);
        }
      }
    }
    if (kind_ == MinorKind::Full) {
      for (std::size_t v = 1; v <= bounds_.maxIndeterminates; ++v) {
        for (std::size_t m = 1; m <= mmax; ++m) {
          for (std::size_t j = 1; j <= bounds_.maxFamilySize; ++j) {
            Family family;
            family.m = m;
            family.v = v;
            family.size = j;
            changed |= expand(gens, family, 0, 0);
          }
        }
      }
    }
    return changed;
  }

  struct Family {
    std::size_t m = 0, v = 0, size = 0;
    std::vector<const Generator*> members;
    std::vector<const MapEntry*> maps;
  };

  static bool canonicalVariables(const Family& f, std::size_t v) {
    // Indeterminates first appear in order 0, 1, ..., v-1 and all occur.
    std::size_t next = 0;
    for (const MapEntry* e : f.maps) {
      for (std::uint8_t c : e->code) {
        if (c < f.m) continue;
        const std::size_t var = c - f.m;
        if (var > next) return false;
        if (var == next) ++next;
      }
    }
    return next == v;
  }

  static bool variablesConnect(const Family& f) {
    // Members that share no indeterminate give an intersection of smaller
    // minors, which the table already contains.
    const std::size_t j = f.maps.size();
    if (j == 1) return true;
    std::vector<std::size_t> parent(j);
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](std::size_t x) {
      while (parent[x] != x) x = parent[x] = parent[parent[x]];
      return x;
    };
    for (std::size_t a = 0; a < j; ++a) {
      for (std::size_t b = a + 1; b < j; ++b) {
        if ((f.maps[a]->usedVars & f.maps[b]->usedVars) != 0) parent[find(a)] = find(b);
      }
    }
    for (std::size_t a = 1; a < j; ++a) {
      if (find(a) != find(0)) return false;
    }
    return true;
  }

  bool expand(const std::vector<Generator>& gens, Family& f, std::size_t depth, std::size_t firstGen) {
    if (depth == f.size) {
      if (!canonicalVariables(f, f.v) || !variablesConnect(f)) return false;
      std::vector<std::uint64_t> rs, ss;
      std::vector<const std::vector<std::uint32_t>*> pa, pb;
      for (std::size_t j = 0; j < f.size; ++j) {
        rs.push_back(f.members[j]->r);
        ss.push_back(f.members[j]->s);
        pa.push_back(&f.maps[j]->pullA);
        pb.push_back(&f.maps[j]->pullB);
      }
      const std::uint64_t r = side(rs, pa, pointsA_[f.m], ipow(ka_, f.v));
      const std::uint64_t s = side(ss, pb, pointsB_[f.m], ipow(kb_, f.v));
      return add(f.m, r, s);
    }
    bool changed = false;
    for (std::size_t gi = firstGen; gi < gens.size(); ++gi) {
      const Generator& g = gens[gi];
      for (const auto& e : maps(g.arity, f.m, f.v)) {
        f.members.push_back(&g);
        f.maps.push_back(&e);
        changed |= expand(gens, f, depth + 1, gi);
        f.members.pop_back();
        f.maps.pop_back();
      }
    }
    return changed;
  }

  const ConstraintSet& t_;
  Bounds bounds_;
  MinorKind kind_;
  std::size_t ka_;
  std::size_t kb_;
  std::vector<std::uint64_t> pointsA_;
  std::vector<std::uint64_t> pointsB_;
  std::map<std::tuple<std::size_t, std::size_t, std::size_t>, std::vector<MapEntry>> mapCache_;
  MinorClosedSet result_;
};

MinorClosedSet wcmClosure(const ConstraintSet& t, const Bounds& bounds) {
  return MinorClosureEngine(t, bounds, MinorKind::Weak).run();
}

MinorClosedSet cmClosure(const ConstraintSet& t, const Bounds& bounds) {
  return MinorClosureEngine(t, bounds, MinorKind::Full).run();
}

// ---------------------------------------------------------------------------

bool MinorClosedSet::contains(const Constraint& c) const {
  requireSameUniverse(c.antecedent().universe(), *a_, "closed set antecedent");
  requireSameUniverse(c.consequent().universe(), *b_, "closed set consequent");
  if (c.arity() > maxArity()) {
    throw DomainError("constraint arity " + std::to_string(c.arity()) + " is above the closure's arity cap " +
                      std::to_string(maxArity()));
  }
  const std::uint64_t s = table_[c.arity()][c.antecedent().bits().lowWord()];
  return s != kUndefined && (s & ~c.consequent().bits().lowWord()) == 0;
}

std::optional<Relation> MinorClosedSet::leastConsequent(const Relation& antecedent) const {
  requireSameUniverse(antecedent.universe(), *a_, "closed set antecedent");
  if (antecedent.arity() > maxArity()) throw DomainError("antecedent arity above the closure's arity cap");
  const std::uint64_t s = table_[antecedent.arity()][antecedent.bits().lowWord()];
  if (s == kUndefined) return std::nullopt;
  const std::size_t width = static_cast<std::size_t>(b_->tupleCount(antecedent.arity()));
  return Relation(b_, antecedent.arity(), Bitset::fromWord(width, s));
}

std::vector<Constraint> MinorClosedSet::generators() const {
  std::vector<Constraint> out;
  for (std::size_t m = 1; m < table_.size(); ++m) {
    const auto& table = table_[m];
    const std::size_t wa = static_cast<std::size_t>(a_->tupleCount(m));
    const std::size_t wb = static_cast<std::size_t>(b_->tupleCount(m));
    const std::uint64_t full = (std::uint64_t{1} << wb) - 1;
    for (std::uint64_t r = 0; r < table.size(); ++r) {
      const std::uint64_t s = table[r];
      if (s == kUndefined || s == full) continue;
      bool dominated = false;
      for (std::size_t x = 0; x < wa && !dominated; ++x) {
        const std::uint64_t bit = std::uint64_t{1} << x;
        dominated = (r & bit) == 0 && table[r | bit] == s;
      }
      if (!dominated) {
        out.emplace_back(Relation(a_, m, Bitset::fromWord(wa, r)), Relation(b_, m, Bitset::fromWord(wb, s)));
      }
    }
  }
  return out;
}

std::uint64_t MinorClosedSet::countAtArity(std::size_t arity) const {
  if (arity == 0 || arity > maxArity()) return 0;
  const std::size_t wb = static_cast<std::size_t>(b_->tupleCount(arity));
  std::uint64_t n = 0;
  for (std::uint64_t s : table_[arity]) {
    if (s == kUndefined) continue;
    const std::size_t freeBits = wb - static_cast<std::size_t>(std::popcount(s));
    const std::uint64_t add = freeBits >= 63 ? ~std::uint64_t{0} : std::uint64_t{1} << freeBits;
    n = n > ~std::uint64_t{0} - add ? ~std::uint64_t{0} : n + add;
  }
  return n;
}

ConstraintSet MinorClosedSet::members() const {
  std::uint64_t total = 0;
  for (std::size_t m = 1; m <= maxArity(); ++m) total += countAtArity(m);
  if (total > (std::uint64_t{1} << 20)) {
    throw BudgetExceeded("closed set has " + std::to_string(total) + " members; query it intensionally");
  }
  ConstraintSet out(a_, b_, maxArity());
  for (std::size_t m = 1; m <= maxArity(); ++m) {
    const std::size_t wa = static_cast<std::size_t>(a_->tupleCount(m));
    const std::size_t wb = static_cast<std::size_t>(b_->tupleCount(m));
    const std::uint64_t full = (std::uint64_t{1} << wb) - 1;
    for (std::uint64_t r = 0; r < table_[m].size(); ++r) {
      const std::uint64_t s = table_[m][r];
      if (s == kUndefined) continue;
      const std::uint64_t freeMask = full & ~s;
      for (std::uint64_t extra = freeMask;; extra = (extra - 1) & freeMask) {
        out.insert(Constraint(Relation(a_, m, Bitset::fromWord(wa, r)), Relation(b_, m, Bitset::fromWord(wb, s | extra))));
        if (extra == 0) break;
      }
    }
  }
  return out;
}

}  // namespace galois
