#include <algorithm>
#include <cmath>
#include <set>

#include "detail.hpp"
#include "galois/error.hpp"
#include "galois/galois.hpp"

namespace galois {

std::string_view verdictName(Verdict v) noexcept {
  switch (v) {
    case Verdict::Inside:
      return "inside";
    case Verdict::Outside:
      return "outside";
    case Verdict::Inconclusive:
      break;
  }
  return "inconclusive";
}

Constraint separatingConstraint(const FunctionClass& m, const MultiFunction& f) {
  requireSameUniverse(f.domain(), m.domain(), "separating constraint");
  requireSameUniverse(f.codomain(), m.codomain(), "separating constraint");
  const std::size_t n = f.arity();
  const auto support = f.support();
  if (support.empty()) throw PreconditionError("an empty-valued function belongs to every Galois closed class");

  FunctionClass generators(m.domainPtr(), m.codomainPtr(), std::max(m.arityCap(), n));
  m.forEach([&](const MultiFunction& g) { generators.insert(g); });
  generators.insert(emptyValuedFunction(m.domainPtr(), m.codomainPtr(), 1));
  if (isLocallyCovered(f, rvsClosure(generators))) {
    throw PreconditionError("the function lies in LC(RVS(M + {e_1})); no constraint separates it");
  }

  // Columns a^1..a^n of the |F| x n matrix whose rows list F by rank.
  const std::size_t width = support.size();
  const std::size_t ka = f.domain().size();
  std::vector<Tuple> columns(n, Tuple(std::vector<Element>(width)));
  for (std::size_t i = 0; i < width; ++i) {
    const Tuple row = tupleUnrank(support[i], n, ka);
    for (std::size_t j = 0; j < n; ++j) columns[j][i] = row[j];
  }
  const Relation r = Relation::fromTuples(m.domainPtr(), width, columns);
  Relation s(m.codomainPtr(), width);
  m.forEach([&](const MultiFunction& g) { s = unite(s, imageOfRelation(g, r)); });
  return Constraint(r, s);
}

namespace {

void requireSeparable(const MinorClosedSet& t, const Constraint& c) {
  requireSameUniverse(c.antecedent().universe(), *t.antecedentPtr(), "separation antecedent");
  requireSameUniverse(c.consequent().universe(), *t.consequentPtr(), "separation consequent");
  if (c.arity() > t.maxArity()) throw DomainError("constraint arity is above the closed set's arity cap");
  const auto& a = t.antecedentPtr();
  const auto& b = t.consequentPtr();
  if (!t.contains(Constraint::empty(a, b, 1)) || !t.contains(Constraint::trivial(a, b, 1))) {
    throw PreconditionError("the closed set must contain (empty, empty) and (A, B)");
  }
  if (t.contains(c)) throw PreconditionError("the constraint belongs to the closed set; nothing separates it");
}

// F listed by rank as the columns of an m x n matrix; rows[i] is the rank in
// A^n of row i.
struct Matrix {
  std::size_t m = 0;
  std::size_t n = 0;
  std::vector<std::uint64_t> rows;
};

Matrix matrixOf(const Relation& f) {
  Matrix out;
  out.m = f.arity();
  const auto columns = f.tuples();
  out.n = columns.size();
  const std::size_t ka = f.universe().size();
  out.rows.assign(out.m, 0);
  for (std::size_t i = 0; i < out.m; ++i) {
    for (const Tuple& col : columns) out.rows[i] = out.rows[i] * ka + col[i];
  }
  return out;
}

// Candidate entries s in S_min(F) - S_0, ascending.
std::vector<std::uint64_t> candidates(const MinorClosedSet& t, const Constraint& c) {
  const auto smin = t.leastConsequent(c.antecedent());
  std::vector<std::uint64_t> out;
  const Relation& s0 = c.consequent();
  const std::uint64_t width = c.consequent().universe().tupleCount(c.arity());
  for (std::uint64_t r = 0; r < width; ++r) {
    if ((!smin || smin->containsRank(r)) && !s0.containsRank(r)) out.push_back(r);
  }
  return out;
}

// g(row i) collects s_j over the rows j equal to row i.
MultiFunction rowFunction(const MinorClosedSet& t, const Matrix& mx, const Tuple& s) {
  MultiFunction g(t.antecedentPtr(), t.consequentPtr(), mx.n);
  for (std::size_t i = 0; i < mx.m; ++i) g.setValue(mx.rows[i], g.value(mx.rows[i]) | (ValueSet{1} << s[i]));
  return g;
}

bool replays(const MultiFunction& g, const std::vector<Constraint>& generators, const Constraint& c) {
  if (satisfies(g, c)) return false;
  return std::all_of(generators.begin(), generators.end(), [&](const Constraint& k) { return satisfies(g, k); });
}

SeparationReport constructive(const MinorClosedSet& t, const Constraint& c) {
  requireSeparable(t, c);
  SeparationReport report;
  report.bounds = t.bounds();
  report.trace.antecedent = c.antecedent();
  report.trace.consequent = c.consequent();
  report.trace.width = c.arity();
  const auto cand = candidates(t, c);
  if (cand.empty()) {
    report.trace.note = "S_min(F) lies inside S_0";
    return report;
  }
  const Tuple s = tupleUnrank(cand.front(), c.arity(), c.consequent().universe());
  report.trace.chosen = s;
  const Matrix mx = matrixOf(c.antecedent());
  MultiFunction g = rowFunction(t, mx, s);
  if (replays(g, t.generators(), c)) {
    report.verdict = Verdict::Outside;
    report.witness = std::move(g);
  } else {
    report.trace.note = "the constructed function violates a member of the closed set; raise the bounds";
  }
  return report;
}

}  // namespace

SeparationReport separatingFunction(const MinorClosedSet& t, const Constraint& c) { return constructive(t, c); }

SeparationReport separatingPartialFunction(const MinorClosedSet& t, const Constraint& c) {
  if (t.maxArity() < 2 || !t.contains(Constraint::equality(t.antecedentPtr(), t.consequentPtr()))) {
    throw PreconditionError("the closed set must contain (=_A, =_B)");
  }
  SeparationReport report = constructive(t, c);
  if (report.witness && !report.witness->isPartial()) {
    throw Error("separating function " + toString(*report.witness) +
                " is not partial although (=_A, =_B) is in the closed set");
  }
  return report;
}

namespace {

// Backtracking over singleton values on the points outside the rows of F.
// A check is a generator together with the row points of one column choice;
// it is evaluated once its last point has a value, since unassigned points
// are empty-valued and make the product empty.
class TotalSearch {
 public:
  TotalSearch(const MinorClosedSet& t, const Matrix& mx, std::uint64_t maxNodes)
      : mx_(mx), maxNodes_(maxNodes), ka_(t.antecedentPtr()->size()), kb_(t.consequentPtr()->size()) {
    points_ = detail::ipow(ka_, mx.n);
    std::vector<bool> inRows(points_, false);
    for (std::uint64_t p : mx.rows) inRows[p] = true;
    // Row points first, then the rest ascending.
    order_.assign(points_, 0);
    std::size_t pos = 0;
    for (std::uint64_t p = 0; p < points_; ++p) {
      if (inRows[p]) order_[p] = pos++;
    }
    fixedCount_ = pos;
    for (std::uint64_t p = 0; p < points_; ++p) {
      if (!inRows[p]) {
        order_[p] = pos++;
        free_.push_back(p);
      }
    }
    byStep_.resize(points_);
    generators_ = t.generators();
    std::set<std::pair<std::size_t, std::vector<std::uint64_t>>> seen;
    for (std::size_t gi = 0; gi < generators_.size(); ++gi) {
      const Constraint& k = generators_[gi];
      const auto columns = k.antecedent().tuples();
      const std::size_t m = k.arity();
      if (static_cast<double>(mx.n) * std::log2(static_cast<double>(std::max<std::size_t>(columns.size(), 1))) > 22) {
        throw BudgetExceeded("too many column choices to index the total search");
      }
      detail::forEachChoice(columns.size(), mx.n, [&](std::span<const std::size_t> choice) {
        std::vector<std::uint64_t> pts(m, 0);
        for (std::size_t i = 0; i < m; ++i) {
          for (std::size_t j = 0; j < mx.n; ++j) pts[i] = pts[i] * ka_ + columns[choice[j]][i];
        }
        if (!seen.emplace(gi, pts).second) return true;
        std::size_t last = 0;
        for (std::uint64_t p : pts) last = std::max(last, order_[p]);
        byStep_[last].push_back(checks_.size());
        checks_.push_back({gi, std::move(pts)});
        return true;
      });
    }
  }

  std::size_t freePoints() const noexcept { return free_.size(); }
  const std::vector<std::uint64_t>& freeList() const noexcept { return free_; }
  std::uint64_t nodes() const noexcept { return nodes_; }
  bool exhausted() const noexcept { return exhausted_; }

  // Completes the row values into a total table satisfying every generator.
  std::optional<std::vector<ValueSet>> run(const std::vector<ValueSet>& rowValues) {
    table_ = rowValues;
    for (std::size_t step = 0; step < fixedCount_; ++step) {
      for (std::size_t ci : byStep_[step]) {
        if (!holds(checks_[ci])) return std::nullopt;
      }
    }
    if (dfs(0)) return table_;
    return std::nullopt;
  }

 private:
  struct Check {
    std::size_t generator;
    std::vector<std::uint64_t> points;
  };

  bool holds(const Check& ck) {
    rows_.clear();
    for (std::uint64_t p : ck.points) {
      if (table_[p] == 0) return true;
      rows_.push_back(table_[p]);
    }
    detail::productRanks(rows_, kb_, ranks_);
    const Relation& s = generators_[ck.generator].consequent();
    return std::all_of(ranks_.begin(), ranks_.end(), [&](std::uint64_t r) { return s.containsRank(r); });
  }

  bool dfs(std::size_t index) {
    if (index == free_.size()) return true;
    const std::uint64_t p = free_[index];
    const std::size_t step = fixedCount_ + index;
    for (std::size_t b = 0; b < kb_; ++b) {
      if (++nodes_ > maxNodes_) {
        exhausted_ = true;
        return false;
      }
      table_[p] = ValueSet{1} << b;
      bool ok = true;
      for (std::size_t ci : byStep_[step]) {
        if (!holds(checks_[ci])) {
          ok = false;
          break;
        }
      }
      if (ok && dfs(index + 1)) return true;
      if (exhausted_) break;
    }
    table_[p] = 0;
    return false;
  }

  const Matrix& mx_;
  std::uint64_t maxNodes_;
  std::size_t ka_;
  std::size_t kb_;
  std::uint64_t points_ = 0;
  std::vector<std::size_t> order_;
  std::size_t fixedCount_ = 0;
  std::vector<std::uint64_t> free_;
  std::vector<Constraint> generators_;
  std::vector<Check> checks_;
  std::vector<std::vector<std::size_t>> byStep_;
  std::vector<ValueSet> table_;
  std::vector<ValueSet> rows_;
  std::vector<std::uint64_t> ranks_;
  std::uint64_t nodes_ = 0;
  bool exhausted_ = false;
};

constexpr std::uint64_t kMaxLiftedTuples = std::uint64_t{1} << 20;

// (R_F, S_F): the columns of F extended by the free points, and every
// mu-tuple whose first m entries lie in S_0.
void recordLift(SeparationReport& report, const Constraint& c, const Matrix& mx,
                const std::vector<std::uint64_t>& freePoints) {
  const std::size_t m = c.arity();
  const std::size_t mu = m + freePoints.size();
  const auto& a = c.antecedent().universePtr();
  const auto& b = c.consequent().universePtr();
  report.trace.width = mu;
  if (a->tupleCount(mu) > kMaxLiftedTuples || b->tupleCount(mu) > kMaxLiftedTuples) return;

  const auto columnsF = c.antecedent().tuples();
  std::vector<Tuple> columns;
  for (std::size_t j = 0; j < mx.n; ++j) {
    std::vector<Element> col(mu);
    for (std::size_t i = 0; i < m; ++i) col[i] = columnsF[j][i];
    for (std::size_t x = 0; x < freePoints.size(); ++x) col[m + x] = tupleUnrank(freePoints[x], mx.n, *a)[j];
    columns.emplace_back(std::move(col));
  }
  const Relation rF = Relation::fromTuples(a, mu, columns);
  Relation sF(b, mu);
  const std::uint64_t tail = b->tupleCount(mu - m);
  const std::uint64_t widthB = b->tupleCount(mu);
  for (std::uint64_t r = 0; r < widthB; ++r) {
    if (c.consequent().containsRank(r / tail)) sF.insertRank(r);
  }
  report.trace.lifted = Constraint(rF, sF);
}

}  // namespace

SeparationReport separatingTotalFunction(const MinorClosedSet& t, const Constraint& c, std::uint64_t maxNodes) {
  requireSeparable(t, c);
  SeparationReport report;
  report.bounds = t.bounds();
  report.trace.antecedent = c.antecedent();
  report.trace.consequent = c.consequent();
  const Matrix mx = matrixOf(c.antecedent());
  TotalSearch search(t, mx, maxNodes);
  recordLift(report, c, mx, search.freeList());

  const auto& b = *t.consequentPtr();
  for (std::uint64_t prefix : candidates(t, c)) {
    const Tuple s = tupleUnrank(prefix, c.arity(), b);
    std::vector<ValueSet> table(detail::ipow(t.antecedentPtr()->size(), mx.n), 0);
    for (std::size_t i = 0; i < mx.m; ++i) table[mx.rows[i]] |= ValueSet{1} << s[i];
    auto done = search.run(table);
    if (search.exhausted()) break;
    if (!done) continue;
    MultiFunction g(t.antecedentPtr(), t.consequentPtr(), mx.n, std::move(*done));
    std::vector<Element> full(s.entries().begin(), s.entries().end());
    for (std::uint64_t p : search.freeList()) full.push_back(static_cast<Element>(__builtin_ctz(g.value(p))));
    report.trace.chosen = Tuple(std::move(full));
    report.trace.searchNodes = search.nodes();
    if (g.isTotal() && replays(g, t.generators(), c)) {
      report.verdict = Verdict::Outside;
      report.witness = std::move(g);
    } else {
      report.trace.note = "the completed function failed its replay";
    }
    return report;
  }
  report.trace.searchNodes = search.nodes();
  report.trace.note = search.exhausted()
                          ? "search budget exhausted"
                          : "every total function satisfying the closed set satisfies the constraint; the bounded "
                            "closure is missing it";
  return report;
}

}  // namespace galois
