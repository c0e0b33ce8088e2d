#include <algorithm>
#include <bit>
#include <thread>

#include "detail.hpp"
#include "galois/enumerate.hpp"
#include "galois/error.hpp"
#include "galois/galois.hpp"

namespace galois {

std::string_view variantName(Variant v) noexcept {
  switch (v) {
    case Variant::I:
      return "i";
    case Variant::II:
      return "ii";
    case Variant::III:
      return "iii";
    case Variant::IV:
      break;
  }
  return "iv";
}

Variant parseVariant(std::string_view s) {
  if (s == "i") return Variant::I;
  if (s == "ii") return Variant::II;
  if (s == "iii") return Variant::III;
  if (s == "iv") return Variant::IV;
  throw DomainError("unknown variant '" + std::string(s) + "', expected i, ii, iii or iv");
}

FunctionKind variantKind(Variant v) noexcept {
  switch (v) {
    case Variant::I:
      return FunctionKind::Any;
    case Variant::II:
      return FunctionKind::Partial;
    case Variant::III:
      return FunctionKind::Total;
    case Variant::IV:
      break;
  }
  return FunctionKind::SingleValued;
}

Prop2Report verifyProp2(const FunctionClass& m, const Bounds& bounds, Variant variant, std::uint64_t maxTables,
                        unsigned workers) {
  bounds.validate();
  const std::size_t nmax = bounds.maxFunctionArity;
  const std::uint64_t needed = m.domain().tupleCount(nmax);
  if (bounds.maxConstraintArity < needed) {
    throw PreconditionError("m_max must be at least |A|^n_max = " + std::to_string(needed) +
                            " for the constraint side to separate every function");
  }
  const FunctionKind kind = variantKind(variant);
  bool inside = true;
  m.forEach([&](const MultiFunction& f) { inside = inside && belongsTo(f, kind); });
  if (!inside) {
    throw PreconditionError("variant " + std::string(variantName(variant)) + " needs every member of M to be " +
                            std::string(kindName(kind)));
  }

  const std::size_t cap = std::max(m.arityCap(), nmax);
  FunctionClass seed = m.withCap(cap);
  if (variant == Variant::I || variant == Variant::II) {
    seed.insert(emptyValuedFunction(m.domainPtr(), m.codomainPtr(), 1));
  }
  const FunctionClass substituted =
      (variant == Variant::I || variant == Variant::II) ? rvsClosure(seed) : rvstClosure(seed);
  FunctionClass rhs = lcClosure(substituted.withCap(nmax), kind);

  const IntensionalCSF table = csf(m, bounds.maxConstraintArity);
  FunctionClass lhs(m.domainPtr(), m.codomainPtr(), nmax);
  workers = std::max(1u, workers);
  for (std::size_t n = 1; n <= nmax; ++n) {
    const std::uint64_t count = functionCount(m.domain(), m.codomain(), n);
    if (count > maxTables) throw BudgetExceeded("too many functions of arity " + std::to_string(n));
    std::vector<std::vector<MultiFunction>> found(workers);
    auto sweep = [&](unsigned w) {
      FunctionStream s(m.domainPtr(), m.codomainPtr(), n, Budget{maxTables, 0});
      s.range(count * w / workers, count * (w + 1) / workers);
      while (auto f = s.next()) {
        if (belongsTo(*f, kind) && table.admits(*f)) found[w].push_back(std::move(*f));
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
      for (const auto& f : part) lhs.insert(f);
    }
  }

  Prop2Report report{variant, bounds, lhs, rhs, lhs == rhs, std::nullopt};
  if (!report.equal) {
    for (std::size_t n = 1; n <= nmax && !report.counterexample; ++n) {
      for (const auto& f : lhs.members(n)) {
        if (!rhs.contains(f)) {
          report.counterexample = f;
          break;
        }
      }
      for (const auto& f : rhs.members(n)) {
        if (!report.counterexample && !lhs.contains(f)) report.counterexample = f;
      }
    }
  }
  return report;
}

// ---------------------------------------------------------------------------

bool Prop4Report::agree() const {
  return std::all_of(perArity.begin(), perArity.end(), [](const ArityTally& t) { return t.inconclusive == 0; });
}

ConstraintSet prop4Generators(const ConstraintSet& t, Variant variant, std::size_t arityCap) {
  const auto& a = t.antecedentPtr();
  const auto& b = t.consequentPtr();
  const bool equality = variant == Variant::II || variant == Variant::IV;
  ConstraintSet out = t.withCap(std::max({arityCap, t.arityCap(), equality ? std::size_t{2} : std::size_t{1}}));
  out.insert(Constraint::empty(a, b, 1));
  if (variant != Variant::IV) out.insert(Constraint::trivial(a, b, 1));
  if (equality) out.insert(Constraint::equality(a, b));
  return out;
}

MinorClosedSet prop4Closure(const ConstraintSet& t, const Bounds& bounds, Variant variant) {
  const ConstraintSet generators = prop4Generators(t, variant, bounds.maxConstraintArity);
  if (variant == Variant::I || variant == Variant::II) return wcmClosure(generators, bounds);
  return cmClosure(generators, bounds);
}

namespace {

SeparationReport separate(const MinorClosedSet& closure, const Constraint& c, Variant variant) {
  switch (variant) {
    case Variant::I:
      return separatingFunction(closure, c);
    case Variant::II:
      return separatingPartialFunction(closure, c);
    case Variant::III:
      return separatingTotalFunction(closure, c);
    case Variant::IV:
      break;
  }
  SeparationReport r = separatingTotalFunction(closure, c);
  if (r.witness && !r.witness->isSingleValued()) {
    throw Error("total separating function " + toString(*r.witness) + " is not single-valued");
  }
  return r;
}

}  // namespace

Prop4Report verifyProp4(const ConstraintSet& t, const Bounds& bounds, Variant variant, bool keepWitnesses) {
  bounds.validate();
  Prop4Report report;
  report.variant = variant;
  report.bounds = bounds;
  report.closure = prop4Closure(t, bounds, variant);
  const auto& a = t.antecedentPtr();
  const auto& b = t.consequentPtr();
  const std::size_t mmax = bounds.maxConstraintArity;
  report.perArity.assign(mmax + 1, ArityTally{});

  for (std::size_t m = 1; m <= mmax; ++m) {
    const std::size_t wa = static_cast<std::size_t>(a->tupleCount(m));
    const std::size_t wb = static_cast<std::size_t>(b->tupleCount(m));
    if (wb > 62) throw BudgetExceeded("too many consequents to tally at arity " + std::to_string(m));
    const std::uint64_t all = std::uint64_t{1} << wb;
    const Relation fullB = Relation::full(b, m);
    ArityTally& tally = report.perArity[m];
    for (std::uint64_t rmask = 0; rmask < (std::uint64_t{1} << wa); ++rmask) {
      const Relation r(a, m, Bitset::fromWord(wa, rmask));
      const auto smin = report.closure.leastConsequent(r);
      if (!smin) {
        tally.inconclusive += all;
        continue;
      }
      const std::size_t sminSize = smin->size();
      tally.inside += std::uint64_t{1} << (wb - sminSize);
      // Each outside (R, S) misses some s of S_min(R); a function violating
      // (R, B^m - {s}) violates all of them.
      std::size_t separated = 0;
      for (std::uint64_t s : smin->ranks()) {
        const Tuple tuple = tupleUnrank(s, m, *b);
        const Constraint c(r, remove(fullB, tuple));
        SeparationReport sep = separate(report.closure, c, variant);
        if (sep.verdict == Verdict::Outside) {
          ++separated;
          if (keepWitnesses) report.witnesses.emplace_back(c, *sep.witness);
        } else {
          report.inconclusive.push_back(c);
        }
      }
      tally.outside += all - (std::uint64_t{1} << (wb - separated));
      tally.inconclusive += (std::uint64_t{1} << (wb - separated)) - (std::uint64_t{1} << (wb - sminSize));
    }
  }
  return report;
}

}  // namespace galois
