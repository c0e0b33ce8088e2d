#include <algorithm>
#include <thread>

#include "detail.hpp"
#include "galois/enumerate.hpp"
#include "galois/error.hpp"
#include "galois/galois.hpp"

namespace galois {

namespace {

// Visits column choices until one has an image tuple outside S; returns
// that choice and tuple rank.
std::optional<std::pair<std::vector<std::size_t>, std::uint64_t>> scan(const MultiFunction& f, const Constraint& c,
                                                                       const std::vector<Tuple>& columns) {
  requireSameUniverse(f.domain(), c.antecedent().universe(), "satisfaction antecedent");
  requireSameUniverse(f.codomain(), c.consequent().universe(), "satisfaction consequent");
  const std::size_t m = c.arity();
  const std::size_t n = f.arity();
  const std::size_t ka = f.domain().size();
  const std::size_t kb = f.codomain().size();
  const Relation& s = c.consequent();

  std::vector<ValueSet> rows(m);
  std::vector<std::uint64_t> ranks;
  std::optional<std::pair<std::vector<std::size_t>, std::uint64_t>> out;
  detail::forEachChoice(columns.size(), n, [&](std::span<const std::size_t> choice) {
    for (std::size_t i = 0; i < m; ++i) {
      std::uint64_t point = 0;
      for (std::size_t j = 0; j < n; ++j) point = point * ka + columns[choice[j]][i];
      rows[i] = f.value(point);
      if (rows[i] == 0) return true;
    }
    detail::productRanks(rows, kb, ranks);
    for (std::uint64_t r : ranks) {
      if (!s.containsRank(r)) {
        out.emplace(std::vector<std::size_t>(choice.begin(), choice.end()), r);
        return false;
      }
    }
    return true;
  });
  return out;
}

}  // namespace

bool satisfies(const MultiFunction& f, const Constraint& c) {
  return !scan(f, c, c.antecedent().tuples()).has_value();
}

std::optional<Violation> findViolation(const MultiFunction& f, const Constraint& c) {
  const auto columns = c.antecedent().tuples();
  const auto hit = scan(f, c, columns);
  if (!hit) return std::nullopt;
  Violation v;
  for (std::size_t j : hit->first) v.columns.push_back(columns[j]);
  v.image = tupleUnrank(hit->second, c.arity(), c.consequent().universe());
  return v;
}

bool satisfiesAll(const MultiFunction& f, const ConstraintSet& t) { return !firstViolated(f, t).has_value(); }

bool satisfiesAll(const MultiFunction& f, const MinorClosedSet& t) {
  for (const auto& c : t.generators()) {
    if (!satisfies(f, c)) return false;
  }
  return true;
}

std::optional<Constraint> firstViolated(const MultiFunction& f, const ConstraintSet& t) {
  std::optional<Constraint> out;
  t.forEach([&](const Constraint& c) {
    if (!out && !satisfies(f, c)) out = c;
  });
  return out;
}

bool inFsc(const MultiFunction& f, const ConstraintSet& t, FunctionKind kind) {
  return belongsTo(f, kind) && satisfiesAll(f, t);
}

FunctionClass fsc(const ConstraintSet& t, std::size_t maxArity, FunctionKind kind, std::uint64_t maxTables,
                  unsigned workers) {
  if (maxArity == 0) throw DomainError("function arity cap must be positive");
  FunctionClass out(t.antecedentPtr(), t.consequentPtr(), maxArity);
  workers = std::max(1u, workers);
  for (std::size_t n = 1; n <= maxArity; ++n) {
    const std::uint64_t count = functionCount(t.antecedentUniverse(), t.consequentUniverse(), n);
    if (count > maxTables) {
      throw BudgetExceeded("enumerating " + std::to_string(count) + " functions of arity " + std::to_string(n) +
                           " exceeds the table budget");
    }
    std::vector<std::vector<MultiFunction>> found(workers);
    auto sweep = [&](unsigned w) {
      const std::uint64_t first = count * w / workers;
      const std::uint64_t last = count * (w + 1) / workers;
      FunctionStream s(t.antecedentPtr(), t.consequentPtr(), n, Budget{maxTables, 0});
      s.range(first, last);
      while (auto f = s.next()) {
        if (inFsc(*f, t, kind)) found[w].push_back(std::move(*f));
      }
    };
    if (workers == 1) {
      sweep(0);
    } else {
      std::vector<std::thread> pool;
      for (unsigned w = 0; w < workers; ++w) pool.emplace_back(sweep, w);
      for (auto& th : pool) th.join();
    }
    for (const auto& part : found) {
      for (const auto& f : part) out.insert(f);
    }
  }
  return out;
}

}  // namespace galois
