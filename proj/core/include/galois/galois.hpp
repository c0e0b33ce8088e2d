#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "galois/constraint.hpp"
#include "galois/multifunction.hpp"

namespace galois {

/// fR is contained in S.
bool satisfies(const MultiFunction& f, const Constraint& c);
bool satisfiesAll(const MultiFunction& f, const ConstraintSet& t);
/// Checks the generators of a closed set; every member relaxes one of them.
bool satisfiesAll(const MultiFunction& f, const MinorClosedSet& t);

/// A choice of columns a^1..a^n from R with a tuple of f(a^1..a^n) outside S.
struct Violation {
  std::vector<Tuple> columns;
  Tuple image;
};
std::optional<Violation> findViolation(const MultiFunction& f, const Constraint& c);

/// A constraint of t that f violates, if any.
std::optional<Constraint> firstViolated(const MultiFunction& f, const ConstraintSet& t);

/// CSF(M) held as its least consequents: for every antecedent R of arity at
/// most maxArity, S_min(R) is the union of gR over the members g of M.
/// Entries are computed on first use and cached; queries are thread-safe.
class IntensionalCSF {
 public:
  IntensionalCSF(FunctionClass m, std::size_t maxArity);
  ~IntensionalCSF();
  IntensionalCSF(IntensionalCSF&&) noexcept;
  IntensionalCSF& operator=(IntensionalCSF&&) noexcept;

  const FunctionClass& generators() const noexcept;
  std::size_t maxArity() const noexcept;

  Relation leastConsequent(const Relation& antecedent) const;
  /// Same as leastConsequent on bit masks over A^m and B^m.
  std::uint64_t leastConsequentMask(std::size_t arity, std::uint64_t antecedent) const;
  bool contains(const Constraint& c) const;

  /// Whether f satisfies every member of CSF(M) of arity at most maxArity.
  /// A violation at arity m persists at every larger arity, so only the top
  /// arity is inspected.
  bool admits(const MultiFunction& f) const;
  /// A member of CSF(M) violated by f, if any.
  std::optional<Constraint> violatedBy(const MultiFunction& f) const;

  /// S_min agrees with other's on every antecedent of every shared arity.
  bool sameTables(const IntensionalCSF& other) const;
  /// Every S_min here is contained in other's, i.e. CSF(other) is a subset
  /// of CSF(this).
  bool tablesBelow(const IntensionalCSF& other) const;

 private:
  struct State;
  std::unique_ptr<State> state_;
};

IntensionalCSF csf(const FunctionClass& m, std::size_t maxArity);

/// The functions of arity at most maxArity satisfying every constraint of t,
/// by enumeration. Throws BudgetExceeded past maxTables candidates per arity;
/// use satisfiesAll for single functions instead.
FunctionClass fsc(const ConstraintSet& t, std::size_t maxArity, FunctionKind kind = FunctionKind::Any,
                  std::uint64_t maxTables = std::uint64_t{1} << 20, unsigned workers = 1);
inline FunctionClass mfsc(const ConstraintSet& t, std::size_t maxArity,
                          std::uint64_t maxTables = std::uint64_t{1} << 20) {
  return fsc(t, maxArity, FunctionKind::Any, maxTables);
}
inline FunctionClass tfsc(const ConstraintSet& t, std::size_t maxArity,
                          std::uint64_t maxTables = std::uint64_t{1} << 20) {
  return fsc(t, maxArity, FunctionKind::Total, maxTables);
}
inline FunctionClass pfsc(const ConstraintSet& t, std::size_t maxArity,
                          std::uint64_t maxTables = std::uint64_t{1} << 20) {
  return fsc(t, maxArity, FunctionKind::Partial, maxTables);
}
inline FunctionClass sfsc(const ConstraintSet& t, std::size_t maxArity,
                          std::uint64_t maxTables = std::uint64_t{1} << 20) {
  return fsc(t, maxArity, FunctionKind::SingleValued, maxTables);
}

/// Predicate form of fsc for a single function.
bool inFsc(const MultiFunction& f, const ConstraintSet& t, FunctionKind kind = FunctionKind::Any);

// ---------------------------------------------------------------------------
// Separating objects.

/// A constraint satisfied by every member of M and violated by f. F is the
/// support of f listed by ascending rank, R the set of columns of F and S
/// the union of gR over M. Throws PreconditionError when f lies in
/// LC(RVS(M + {e_1})), where no separator exists.
Constraint separatingConstraint(const FunctionClass& m, const MultiFunction& f);

enum class Verdict { Inside, Outside, Inconclusive };
std::string_view verdictName(Verdict v) noexcept;

struct SeparationTrace {
  std::optional<Relation> antecedent;  // F
  std::optional<Relation> consequent;  // S_0
  std::optional<Tuple> chosen;         // s
  std::size_t width = 0;               // rows of the columns of F (m, or mu for the total case)
  /// The lifted constraint (R_F, S_F) of the total construction, when small
  /// enough to materialize.
  std::optional<Constraint> lifted;
  std::uint64_t searchNodes = 0;
  std::string note;
};

struct SeparationReport {
  Verdict verdict = Verdict::Inconclusive;
  std::optional<MultiFunction> witness;
  SeparationTrace trace;
  Bounds bounds;
};

/// A function satisfying every member of t and violating c. t must contain
/// (empty, empty) and (A, B) and not contain c. The witness is built from
/// the rank-minimal s in S_min(F) - S_0 and replayed against t; a failed
/// replay yields Inconclusive.
SeparationReport separatingFunction(const MinorClosedSet& t, const Constraint& c);
/// As separatingFunction with (=_A, =_B) in t; the witness is then partial.
/// Throws Error if it is not.
SeparationReport separatingPartialFunction(const MinorClosedSet& t, const Constraint& c);
/// A total separating function of arity |F|. Values on the rows of F come
/// from a prefix s in S_min(F) - S_0; the remaining points get singleton
/// values by a pruned search against the generators of t. When no prefix
/// admits a completion, c is implied by t for total functions and the verdict
/// is Inconclusive (the bounded closure missed it). maxNodes caps the search.
SeparationReport separatingTotalFunction(const MinorClosedSet& t, const Constraint& c,
                                         std::uint64_t maxNodes = std::uint64_t{1} << 22);

// ---------------------------------------------------------------------------
// Factorization checks.

enum class Variant { I, II, III, IV };
std::string_view variantName(Variant v) noexcept;
Variant parseVariant(std::string_view s);
/// The function kind each variant restricts to: any, partial, total,
/// single-valued.
FunctionKind variantKind(Variant v) noexcept;

struct Prop2Report {
  Variant variant = Variant::I;
  Bounds bounds;
  FunctionClass lhs;  // xFSC(CSF(M)) up to maxFunctionArity
  FunctionClass rhs;  // the LC/RVS factorization
  bool equal = false;
  std::optional<MultiFunction> counterexample;
};

/// Computes both sides of the factorization of the closure of M through
/// CSF at arities up to bounds.maxFunctionArity. Needs
/// maxConstraintArity >= |A|^maxFunctionArity so that every separating
/// constraint is represented, and M inside the kind of the variant.
Prop2Report verifyProp2(const FunctionClass& m, const Bounds& bounds, Variant variant,
                        std::uint64_t maxTables = std::uint64_t{1} << 20, unsigned workers = 1);

struct ArityTally {
  std::uint64_t inside = 0;
  std::uint64_t outside = 0;
  std::uint64_t inconclusive = 0;
};

struct Prop4Report {
  Variant variant = Variant::I;
  Bounds bounds;
  MinorClosedSet closure;               // right side
  std::vector<ArityTally> perArity;     // index 0 unused
  std::vector<Constraint> inconclusive; // (R, B^m - {s}) that could not be decided
  std::vector<std::pair<Constraint, MultiFunction>> witnesses;
  bool agree() const;
};

/// Decides CSF(xFSC(T)) on every constraint of arity at most
/// bounds.maxConstraintArity: members of the bounded closure are inside,
/// the rest get a separating function or are reported inconclusive.
Prop4Report verifyProp4(const ConstraintSet& t, const Bounds& bounds, Variant variant,
                        bool keepWitnesses = false);

/// T together with the constraints the variant adds before closing.
ConstraintSet prop4Generators(const ConstraintSet& t, Variant variant, std::size_t arityCap);
/// The closure the variant applies: weak minors for I and II, minors for III
/// and IV.
MinorClosedSet prop4Closure(const ConstraintSet& t, const Bounds& bounds, Variant variant);

}  // namespace galois
