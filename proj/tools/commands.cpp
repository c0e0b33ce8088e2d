#include "commands.hpp"

#include <algorithm>
#include <map>
#include <ostream>
#include <sstream>

#include "galois/enumerate.hpp"
#include "galois/galois.hpp"

namespace galois::cli {
namespace {

using nlohmann::json;

// Collects a report once and renders it as text lines or one JSON object.
class Report {
 public:
  explicit Report(const std::string& command) { json_["command"] = command; }

  void value(const std::string& key, const std::string& text, json j) {
    lines_.push_back(key + ": " + text);
    json_[key] = std::move(j);
  }
  void value(const std::string& key, const std::string& text) { value(key, text, text); }
  void value(const std::string& key, std::uint64_t n) { value(key, std::to_string(n), n); }
  void flag(const std::string& key, bool b) { value(key, b ? "yes" : "no", b); }

  void list(const std::string& key, const std::vector<std::string>& text, json j) {
    lines_.push_back(key + " (" + std::to_string(text.size()) + "):");
    for (const auto& t : text) lines_.push_back("  " + t);
    json_[key] = std::move(j);
  }

  void write(std::ostream& out, bool machine) const {
    if (machine) {
      out << json_.dump() << '\n';
      return;
    }
    for (const auto& l : lines_) out << l << '\n';
  }

 private:
  std::vector<std::string> lines_;
  json json_;
};

struct Context {
  const ProblemDocument& doc;
  const std::vector<std::string>& operands;
  const Options& opts;
  Bounds bounds;
  std::uint64_t budget;
};

const std::string& operand(const Context& ctx, std::size_t i, const char* what) {
  if (i >= ctx.operands.size()) throw DomainError(std::string("missing operand: ") + what);
  return ctx.operands[i];
}

void requireOperands(const Context& ctx, std::size_t most) {
  if (ctx.operands.size() > most) throw DomainError("unexpected operand '" + ctx.operands[most] + "'");
}

std::vector<std::string> classText(const FunctionClass& m) {
  std::vector<std::string> out;
  m.forEach([&](const MultiFunction& f) { out.push_back(toString(f)); });
  return out;
}

json classJson(const FunctionClass& m) {
  json j = json::array();
  m.forEach([&](const MultiFunction& f) { j.push_back(functionJson(f)); });
  return j;
}

void emitClass(Report& r, const std::string& key, const FunctionClass& m) {
  r.list(key, classText(m), classJson(m));
}

void emitConstraints(Report& r, const std::string& key, const std::vector<Constraint>& cs) {
  std::vector<std::string> text;
  json j = json::array();
  for (const auto& c : cs) {
    text.push_back(toString(c));
    j.push_back(constraintJson(c));
  }
  r.list(key, text, j);
}

void emitFunction(Report& r, const std::string& key, const MultiFunction& f) {
  r.list(key, functionRows(f), functionJson(f));
}

std::string kindText(FunctionKind k) { return std::string(kindName(k)); }

// ---------------------------------------------------------------------------

int checkSat(const Context& ctx, Report& r) {
  requireOperands(ctx, 2);
  const MultiFunction f = ctx.doc.function(operand(ctx, 0, "function"));
  const Constraint c = ctx.doc.constraint(operand(ctx, 1, "constraint"));
  r.value("function", toString(f));
  r.value("constraint", toString(c));
  const auto violation = findViolation(f, c);
  if (!violation) {
    r.value("status", "satisfied");
    return kComputed;
  }
  r.value("status", "violated");
  std::vector<std::string> text;
  json cols = json::array();
  for (const auto& a : violation->columns) {
    text.push_back(tupleText(a, f.domain()));
    cols.push_back(tupleJson(a, f.domain()));
  }
  r.list("columns", text, cols);
  r.value("image", tupleText(violation->image, f.codomain()), tupleJson(violation->image, f.codomain()));
  return kViolated;
}

int image(const Context& ctx, Report& r) {
  requireOperands(ctx, 2);
  const MultiFunction f = ctx.doc.function(operand(ctx, 0, "function"));
  const Relation rel = ctx.doc.relation(operand(ctx, 1, "relation"), ctx.doc.domain);
  const Relation img = imageOfRelation(f, rel);
  r.value("function", toString(f));
  r.value("relation", toString(rel), relationJson(rel));
  r.value("image", toString(img), relationJson(img));
  return kComputed;
}

// A missing class or set operand means the document's only one.
FunctionClass classOperand(const Context& ctx, std::size_t i) {
  const std::string name = i < ctx.operands.size() ? ctx.operands[i] : ctx.doc.soleClass();
  return ctx.doc.functionClass(name, ctx.bounds.maxFunctionArity);
}

ConstraintSet setOperand(const Context& ctx, std::size_t i) {
  const std::string name = i < ctx.operands.size() ? ctx.operands[i] : ctx.doc.soleSet();
  return ctx.doc.constraintSet(name, ctx.bounds.maxConstraintArity);
}

int closeRvs(const Context& ctx, Report& r) {
  requireOperands(ctx, 1);
  const FunctionClass m = classOperand(ctx, 0);
  const FunctionClass out = ctx.opts.total ? rvstClosure(m) : rvsClosure(m);
  r.value("closure", ctx.opts.total ? "rvs-total" : "rvs");
  r.value("size", out.size());
  emitClass(r, "members", out);
  return kComputed;
}

int closeLc(const Context& ctx, Report& r) {
  requireOperands(ctx, 1);
  const FunctionClass m = classOperand(ctx, 0);
  const FunctionKind kind = parseKind(ctx.opts.kind);
  const FunctionClass out = lcClosure(m, kind, ctx.budget);
  r.value("closure", "lc");
  r.value("kind", kindText(kind));
  r.value("size", out.size());
  emitClass(r, "members", out);
  return kComputed;
}

void emitClosed(Report& r, const MinorClosedSet& closed) {
  r.value("completeness", closed.completeness() == Completeness::Exact ? "exact" : "lower-approximation");
  r.value("rounds", closed.rounds());
  std::vector<std::string> text;
  json counts = json::object();
  for (std::size_t m = 1; m <= closed.maxArity(); ++m) {
    const std::uint64_t n = closed.countAtArity(m);
    text.push_back("arity " + std::to_string(m) + ": " + std::to_string(n));
    counts[std::to_string(m)] = n;
  }
  r.list("members", text, counts);
  emitConstraints(r, "generators", closed.generators());
}

int closeMinor(const Context& ctx, Report& r, bool weak) {
  requireOperands(ctx, 1);
  const ConstraintSet t = setOperand(ctx, 0);
  const MinorClosedSet closed = weak ? wcmClosure(t, ctx.bounds) : cmClosure(t, ctx.bounds);
  r.value("closure", weak ? "wcm" : "cm");
  emitClosed(r, closed);
  return kComputed;
}

int closeLo(const Context& ctx, Report& r) {
  requireOperands(ctx, 1);
  const ConstraintSet t = setOperand(ctx, 0);
  const ConstraintSet out = loClosure(t);
  r.value("closure", "lo");
  r.value("size", out.size());
  emitConstraints(r, "members", out.toVector());
  return kComputed;
}

int csfCommand(const Context& ctx, Report& r) {
  requireOperands(ctx, 2);
  const FunctionClass m = classOperand(ctx, 0);
  const IntensionalCSF closed = csf(m, ctx.bounds.maxConstraintArity);
  if (ctx.operands.size() == 2) {
    const Relation rel = ctx.doc.relation(ctx.operands[1], ctx.doc.domain);
    const Relation s = closed.leastConsequent(rel);
    r.value("antecedent", toString(rel), relationJson(rel));
    r.value("least-consequent", toString(s), relationJson(s));
    return kComputed;
  }
  std::vector<std::string> text;
  json rows = json::array();
  const auto& a = ctx.doc.domain;
  for (std::size_t k = 1; k <= ctx.bounds.maxConstraintArity; ++k) {
    RelationStream stream(a, k, Budget{ctx.budget, 0});
    while (auto rel = stream.next()) {
      const Relation s = closed.leastConsequent(*rel);
      text.push_back(toString(*rel) + " -> " + toString(s));
      rows.push_back({{"antecedent", relationJson(*rel)}, {"least-consequent", relationJson(s)}});
    }
  }
  r.list("least-consequents", text, rows);
  return kComputed;
}

int fscCommand(const Context& ctx, Report& r, FunctionKind kind) {
  requireOperands(ctx, 1);
  const ConstraintSet t = setOperand(ctx, 0);
  const FunctionClass out = fsc(t, ctx.bounds.maxFunctionArity, kind, ctx.budget, ctx.opts.workers);
  r.value("kind", kindText(kind));
  r.value("size", out.size());
  emitClass(r, "members", out);
  return kComputed;
}

int separateConstraint(const Context& ctx, Report& r) {
  requireOperands(ctx, 2);
  const FunctionClass m = ctx.doc.functionClass(operand(ctx, 0, "class"), ctx.bounds.maxFunctionArity);
  const MultiFunction f = ctx.doc.function(operand(ctx, 1, "function"));
  r.value("function", toString(f));
  Constraint c;
  try {
    c = separatingConstraint(m, f);
  } catch (const PreconditionError& e) {
    r.value("verdict", "inside");
    r.value("note", e.what());
    return kComputed;
  }
  r.value("verdict", "outside");
  r.value("constraint", toString(c), constraintJson(c));
  if (const auto violation = findViolation(f, c)) {
    r.value("image", tupleText(violation->image, f.codomain()), tupleJson(violation->image, f.codomain()));
  }
  return kViolated;
}

void emitSeparation(Report& r, const SeparationReport& rep) {
  r.value("verdict", std::string(verdictName(rep.verdict)));
  if (rep.witness) emitFunction(r, "witness", *rep.witness);
  const auto& t = rep.trace;
  if (t.antecedent) r.value("F", toString(*t.antecedent), relationJson(*t.antecedent));
  if (t.consequent) r.value("S0", toString(*t.consequent), relationJson(*t.consequent));
  if (t.chosen && t.consequent) {
    const auto& b = t.consequent->universe();
    r.value("s", tupleText(*t.chosen, b), tupleJson(*t.chosen, b));
  }
  if (t.width) r.value("width", t.width);
  if (t.searchNodes) r.value("search-nodes", t.searchNodes);
  if (!t.note.empty()) r.value("note", t.note);
}

int separateFunction(const Context& ctx, Report& r) {
  requireOperands(ctx, 2);
  if (ctx.opts.partial && ctx.opts.total) throw DomainError("--partial and --total exclude each other");
  const std::string tname = operand(ctx, 0, "constraint set");
  const Constraint c = ctx.doc.constraint(operand(ctx, 1, "constraint"));
  Bounds bounds = ctx.bounds;
  bounds.maxConstraintArity = std::max(bounds.maxConstraintArity, c.arity());
  const ConstraintSet t = ctx.doc.constraintSet(tname, bounds.maxConstraintArity);
  const Variant variant = ctx.opts.total ? Variant::III : ctx.opts.partial ? Variant::II : Variant::I;
  const MinorClosedSet closed = prop4Closure(t, bounds, variant);
  r.value("constraint", toString(c), constraintJson(c));
  r.value("closure", closed.kind() == MinorKind::Weak ? "wcm" : "cm");
  if (closed.contains(c)) {
    r.value("verdict", "inside");
    return kComputed;
  }
  const SeparationReport rep = ctx.opts.total     ? separatingTotalFunction(closed, c)
                               : ctx.opts.partial ? separatingPartialFunction(closed, c)
                                                  : separatingFunction(closed, c);
  emitSeparation(r, rep);
  switch (rep.verdict) {
    case Verdict::Outside:
      return kViolated;
    case Verdict::Inside:
      return kComputed;
    case Verdict::Inconclusive:
      break;
  }
  return kInconclusive;
}

void emitPerArity(Report& r, const std::string& key, const FunctionClass& m) {
  std::vector<std::string> text;
  json j = json::object();
  for (std::size_t n = 1; n <= m.arityCap(); ++n) {
    text.push_back("arity " + std::to_string(n) + ": " + std::to_string(m.members(n).size()));
    j[std::to_string(n)] = m.members(n).size();
  }
  r.list(key, text, j);
}

int verifyProp2Command(const Context& ctx, Report& r) {
  requireOperands(ctx, 2);
  const Variant variant = parseVariant(operand(ctx, 0, "variant"));
  const FunctionClass m = classOperand(ctx, 1);
  const Prop2Report rep = verifyProp2(m, ctx.bounds, variant, ctx.budget, ctx.opts.workers);
  r.value("variant", std::string(variantName(variant)));
  r.value("lhs-size", rep.lhs.size());
  r.value("rhs-size", rep.rhs.size());
  emitPerArity(r, "lhs", rep.lhs);
  emitPerArity(r, "rhs", rep.rhs);
  r.flag("equal", rep.equal);
  if (rep.counterexample) {
    emitFunction(r, "counterexample", *rep.counterexample);
    return kViolated;
  }
  return kComputed;
}

int verifyProp4Command(const Context& ctx, Report& r) {
  requireOperands(ctx, 2);
  const Variant variant = parseVariant(operand(ctx, 0, "variant"));
  const ConstraintSet t = setOperand(ctx, 1);
  const Prop4Report rep = verifyProp4(t, ctx.bounds, variant);
  r.value("variant", std::string(variantName(variant)));
  r.value("closure", rep.closure.kind() == MinorKind::Weak ? "wcm" : "cm");
  std::vector<std::string> text;
  json j = json::object();
  for (std::size_t m = 1; m < rep.perArity.size(); ++m) {
    const auto& a = rep.perArity[m];
    text.push_back("arity " + std::to_string(m) + ": inside " + std::to_string(a.inside) + ", outside " +
                   std::to_string(a.outside) + ", inconclusive " + std::to_string(a.inconclusive));
    j[std::to_string(m)] = {{"inside", a.inside}, {"outside", a.outside}, {"inconclusive", a.inconclusive}};
  }
  r.list("tally", text, j);
  r.flag("agree", rep.agree());
  if (!rep.inconclusive.empty()) emitConstraints(r, "undecided", rep.inconclusive);
  return rep.agree() ? kComputed : kInconclusive;
}

std::size_t arityOperand(const Context& ctx, std::size_t i) {
  const std::string& text = operand(ctx, i, "arity");
  std::size_t pos = 0;
  unsigned long n = 0;
  try {
    n = std::stoul(text, &pos);
  } catch (const std::exception&) {
    pos = 0;
  }
  if (pos != text.size() || n == 0) throw DomainError("arity must be a positive integer, not '" + text + "'");
  return n;
}

int enumerateCommand(const Context& ctx, Report& r) {
  const std::string what = operand(ctx, 0, "what to enumerate");
  const Budget budget{ctx.budget, ctx.opts.seed.value_or(ctx.doc.bounds.seed.value_or(0))};
  const auto& a = ctx.doc.domain;
  const auto& b = ctx.doc.codomain;
  r.value("what", what);
  if (what == "functions") {
    requireOperands(ctx, 2);
    const FunctionKind kind = parseKind(ctx.opts.kind);
    FunctionStream stream(a, b, arityOperand(ctx, 1), budget);
    FunctionClass out(a, b, arityOperand(ctx, 1));
    while (auto f = stream.next()) {
      if (belongsTo(*f, kind)) out.insert(*f);
    }
    r.value("size", out.size());
    emitClass(r, "members", out);
  } else if (what == "relations") {
    requireOperands(ctx, 2);
    RelationStream stream(a, arityOperand(ctx, 1), budget);
    std::vector<std::string> text;
    json j = json::array();
    while (auto rel = stream.next()) {
      text.push_back(toString(*rel));
      j.push_back(relationJson(*rel));
    }
    r.list("members", text, j);
  } else if (what == "constraints") {
    requireOperands(ctx, 2);
    ConstraintStream stream(a, b, arityOperand(ctx, 1), budget);
    std::vector<Constraint> all;
    while (auto c = stream.next()) all.push_back(*c);
    emitConstraints(r, "members", all);
  } else if (what == "schemes") {
    requireOperands(ctx, 1);
    const auto schemes = allSchemes(ctx.bounds, ctx.bounds.maxFunctionArity, budget);
    std::vector<std::string> text;
    for (const auto& h : schemes) text.push_back(toString(h));
    r.list("members", text, text);
  } else if (what == "sample") {
    requireOperands(ctx, 3);
    const std::string sort = operand(ctx, 1, "function, class or set");
    Sampler sampler(budget.seed);
    r.value("seed", budget.seed);
    if (sort == "function") {
      emitFunction(r, "function",
                   sampler.function(a, b, ctx.operands.size() > 2 ? arityOperand(ctx, 2) : ctx.bounds.maxFunctionArity,
                                    parseKind(ctx.opts.kind)));
    } else if (sort == "class") {
      requireOperands(ctx, 2);
      emitClass(r, "class", sampler.functionClass(a, b, ctx.bounds.maxFunctionArity, 4, parseKind(ctx.opts.kind)));
    } else if (sort == "set") {
      requireOperands(ctx, 2);
      emitConstraints(r, "set", sampler.constraintSet(a, b, ctx.bounds.maxConstraintArity, 4).toVector());
    } else {
      throw DomainError("can sample a function, class or set, not '" + sort + "'");
    }
  } else {
    throw DomainError("can enumerate functions, relations, constraints, schemes or sample, not '" + what + "'");
  }
  return kComputed;
}

int formatCommand(const Context& ctx, std::ostream& out) {
  requireOperands(ctx, 0);
  if (ctx.opts.machine) {
    out << toJson(ctx.doc).dump(2) << '\n';
  } else {
    out << serialize(ctx.doc);
  }
  return kComputed;
}

}  // namespace

FunctionKind parseKind(const std::string& text) {
  if (text == "any") return FunctionKind::Any;
  if (text == "total") return FunctionKind::Total;
  if (text == "partial") return FunctionKind::Partial;
  if (text == "single") return FunctionKind::SingleValued;
  throw DomainError("kind must be any, total, partial or single, not '" + text + "'");
}

Bounds effectiveBounds(const ProblemDocument& doc, const Options& opts) {
  Bounds b = doc.bounds.bounds;
  std::istringstream in(opts.bounds);
  std::string item;
  while (std::getline(in, item, ',')) {
    if (item.empty()) continue;
    const auto eq = item.find('=');
    if (eq == std::string::npos) throw DomainError("--bounds expects key=value pairs, got '" + item + "'");
    const std::string key = item.substr(0, eq);
    std::size_t value = 0;
    try {
      std::size_t pos = 0;
      value = std::stoul(item.substr(eq + 1), &pos);
      if (pos != item.size() - eq - 1) throw DomainError("");
    } catch (const std::exception&) {
      throw DomainError("--bounds value for " + key + " is not a non-negative integer");
    }
    if (key == "n_max") {
      b.maxFunctionArity = value;
    } else if (key == "m_max") {
      b.maxConstraintArity = value;
    } else if (key == "j_max") {
      b.maxFamilySize = value;
    } else if (key == "v_max") {
      b.maxIndeterminates = value;
    } else {
      throw DomainError("unknown bound '" + key + "'");
    }
  }
  b.validate();
  return b;
}

const std::vector<std::string>& commandNames() {
  static const std::vector<std::string> names{
      "check-sat", "image",   "close-rvs", "close-lc",  "close-wcm",           "close-cm",
      "close-lo",  "csf",     "mfsc",      "tfsc",      "pfsc",                "sfsc",
      "separate-constraint", "separate-function", "verify-prop2", "verify-prop4", "enumerate", "format"};
  return names;
}

int run(const std::string& command, const ProblemDocument& doc, const std::vector<std::string>& operands,
        const Options& opts, std::ostream& out) {
  const Context ctx{doc, operands, opts, effectiveBounds(doc, opts),
                    opts.budget.value_or(doc.bounds.budget.value_or(std::uint64_t{1} << 20))};
  if (command == "format") return formatCommand(ctx, out);

  Report r(command);
  int code = kComputed;
  if (command == "check-sat") {
    code = checkSat(ctx, r);
  } else if (command == "image") {
    code = image(ctx, r);
  } else if (command == "close-rvs") {
    code = closeRvs(ctx, r);
  } else if (command == "close-lc") {
    code = closeLc(ctx, r);
  } else if (command == "close-wcm" || command == "close-cm") {
    code = closeMinor(ctx, r, command == "close-wcm");
  } else if (command == "close-lo") {
    code = closeLo(ctx, r);
  } else if (command == "csf") {
    code = csfCommand(ctx, r);
  } else if (command == "mfsc") {
    code = fscCommand(ctx, r, FunctionKind::Any);
  } else if (command == "tfsc") {
    code = fscCommand(ctx, r, FunctionKind::Total);
  } else if (command == "pfsc") {
    code = fscCommand(ctx, r, FunctionKind::Partial);
  } else if (command == "sfsc") {
    code = fscCommand(ctx, r, FunctionKind::SingleValued);
  } else if (command == "separate-constraint") {
    code = separateConstraint(ctx, r);
  } else if (command == "separate-function") {
    code = separateFunction(ctx, r);
  } else if (command == "verify-prop2") {
    code = verifyProp2Command(ctx, r);
  } else if (command == "verify-prop4") {
    code = verifyProp4Command(ctx, r);
  } else if (command == "enumerate") {
    code = enumerateCommand(ctx, r);
  } else {
    throw DomainError("unknown command '" + command + "'");
  }
  r.value("exit", static_cast<std::uint64_t>(code));
  r.write(out, opts.machine);
  return code;
}

}  // namespace galois::cli
