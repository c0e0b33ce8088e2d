#include "document.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <fstream>
#include <map>
#include <set>
#include <sstream>

namespace galois::cli {
namespace {

bool isIdentStart(char c) { return std::isalpha(static_cast<unsigned char>(c)) || c == '_'; }
bool isIdentChar(char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_'; }
bool isLabelChar(char c) { return isIdentChar(c) || c == '-' || c == '.'; }

// Scanner over one line of input; columns are 1-based.
class Cursor {
 public:
  Cursor(std::string_view text, std::size_t line, std::size_t offset = 0) : text_(text), line_(line), pos_(offset) {}

  [[noreturn]] void fail(const std::string& message) const { throw ParseError(line_, pos_ + 1, message); }
  [[noreturn]] void failAt(std::size_t pos, const std::string& message) const {
    throw ParseError(line_, pos + 1, message);
  }

  void skipSpace() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }
  bool atEnd() {
    skipSpace();
    return pos_ >= text_.size();
  }
  char peek() {
    skipSpace();
    return pos_ < text_.size() ? text_[pos_] : '\0';
  }
  bool accept(char c) {
    if (peek() != c) return false;
    ++pos_;
    return true;
  }
  void expect(char c) {
    if (!accept(c)) fail(std::string("expected '") + c + "'");
  }
  bool accept(std::string_view word) {
    skipSpace();
    if (text_.substr(pos_, word.size()) != word) return false;
    pos_ += word.size();
    return true;
  }
  void expect(std::string_view word) {
    if (!accept(word)) fail("expected '" + std::string(word) + "'");
  }
  std::string identifier() {
    skipSpace();
    if (pos_ >= text_.size() || !isIdentStart(text_[pos_])) fail("expected a name");
    const std::size_t start = pos_;
    while (pos_ < text_.size() && isIdentChar(text_[pos_])) ++pos_;
    return std::string(text_.substr(start, pos_ - start));
  }
  std::string label() {
    skipSpace();
    const std::size_t start = pos_;
    while (pos_ < text_.size() && isLabelChar(text_[pos_])) ++pos_;
    if (start == pos_) fail("expected an element label");
    return std::string(text_.substr(start, pos_ - start));
  }
  std::uint64_t integer() {
    skipSpace();
    std::uint64_t value = 0;
    const auto* first = text_.data() + pos_;
    const auto* last = text_.data() + text_.size();
    const auto [ptr, ec] = std::from_chars(first, last, value);
    if (ec != std::errc{} || ptr == first) fail("expected a non-negative integer");
    pos_ += static_cast<std::size_t>(ptr - first);
    return value;
  }
  void expectEnd() {
    if (!atEnd()) fail("unexpected text '" + std::string(text_.substr(pos_)) + "'");
  }
  std::size_t pos() const noexcept { return pos_; }
  std::size_t line() const noexcept { return line_; }

 private:
  std::string_view text_;
  std::size_t line_;
  std::size_t pos_;
};

Element element(Cursor& cur, const Universe& u) {
  const std::size_t at = cur.pos();
  const std::string text = cur.label();
  if (auto e = u.find(text)) return *e;
  cur.failAt(at, "'" + text + "' is not an element of " + u.name());
}

Tuple tuple(Cursor& cur, const Universe& u) {
  cur.expect('(');
  std::vector<Element> entries;
  if (!cur.accept(')')) {
    do {
      entries.push_back(element(cur, u));
    } while (cur.accept(','));
    cur.expect(')');
  }
  if (entries.empty()) cur.fail("tuples must have positive arity");
  return Tuple(std::move(entries));
}

ValueSet valueSet(Cursor& cur, const Universe& u) {
  cur.expect('{');
  ValueSet v = 0;
  if (!cur.accept('}')) {
    do {
      v |= ValueSet{1} << element(cur, u);
    } while (cur.accept(','));
    cur.expect('}');
  }
  return v;
}

// Relation token: empty^m, full^m, eq, a literal {(..),...}, or a name
// looked up by `named`.
template <typename Lookup>
Relation relationToken(Cursor& cur, const UniverseRef& u, Lookup&& named) {
  const std::size_t at = cur.pos();
  if (cur.peek() == '{') {
    cur.expect('{');
    if (cur.peek() == '}') cur.fail("write empty^m for an empty relation so that its arity is explicit");
    std::vector<Tuple> tuples;
    do {
      tuples.push_back(tuple(cur, *u));
      if (tuples.back().arity() != tuples.front().arity()) cur.failAt(at, "tuples of different arities in relation");
    } while (cur.accept(','));
    cur.expect('}');
    return Relation::fromTuples(u, tuples.front().arity(), tuples);
  }
  const std::string name = cur.identifier();
  if ((name == "empty" || name == "full") && cur.accept('^')) {
    const std::uint64_t m = cur.integer();
    if (m == 0) cur.failAt(at, "relations must have positive arity");
    return name == "empty" ? Relation::empty(u, m) : Relation::full(u, m);
  }
  if (name == "eq") return Relation::equality(u);
  return named(name, at);
}

std::string relationTokenText(const Relation& r) { return toString(r); }

std::optional<std::size_t> suffixNumber(std::string_view name, std::string_view prefix) {
  if (name.size() <= prefix.size() || name.substr(0, prefix.size()) != prefix) return std::nullopt;
  std::size_t value = 0;
  const auto digits = name.substr(prefix.size());
  const auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), value);
  if (ec != std::errc{} || ptr != digits.data() + digits.size() || value == 0) return std::nullopt;
  return value;
}

struct RawLine {
  std::size_t line;
  std::string text;
};

template <typename T>
const T* findNamed(const std::vector<T>& items, std::string_view name) {
  for (const auto& item : items) {
    if (item.name == name) return &item;
  }
  return nullptr;
}

ListEntry listEntry(Cursor& cur) {
  ListEntry e;
  e.name = cur.identifier();
  cur.expect('=');
  cur.expect('{');
  if (!cur.accept('}')) {
    do {
      e.members.push_back(cur.identifier());
    } while (cur.accept(','));
    cur.expect('}');
  }
  cur.expectEnd();
  return e;
}

const std::vector<std::string> kBoundKeys{"n_max", "m_max", "j_max", "v_max", "budget", "seed"};

const std::vector<std::string> kSections{"universes", "problem", "functions", "relations",
                                         "constraints", "classes", "sets", "bounds"};

}  // namespace

ProblemDocument parseDocument(std::string_view text) {
  std::map<std::string, std::vector<RawLine>> sections;
  std::string current;
  std::set<std::string> seen;
  std::size_t lineNo = 0;
  std::istringstream in{std::string(text)};
  std::string line;
  while (std::getline(in, line)) {
    ++lineNo;
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    if (!line.empty() && line.back() == '\r') line.pop_back();
    Cursor cur(line, lineNo);
    if (cur.atEnd()) continue;
    if (cur.peek() == '[') {
      cur.expect('[');
      const std::size_t at = cur.pos();
      const std::string name = cur.identifier();
      cur.expect(']');
      cur.expectEnd();
      if (std::find(kSections.begin(), kSections.end(), name) == kSections.end()) {
        cur.failAt(at, "unknown section [" + name + "]");
      }
      if (!seen.insert(name).second) cur.failAt(at, "section [" + name + "] appears twice");
      current = name;
      continue;
    }
    if (current.empty()) cur.fail("text before the first section header");
    sections[current].push_back({lineNo, line});
  }

  ProblemDocument doc;
  std::size_t lastLine = lineNo + 1;

  for (const auto& raw : sections["universes"]) {
    Cursor cur(raw.text, raw.line);
    const std::size_t at = cur.pos();
    const std::string name = cur.identifier();
    cur.expect('=');
    UniverseRef u;
    try {
      if (cur.peek() == '{') {
        cur.expect('{');
        std::vector<std::string> labels;
        if (!cur.accept('}')) {
          do {
            labels.push_back(cur.label());
          } while (cur.accept(','));
          cur.expect('}');
        }
        u = Universe::create(name, labels.size(), labels);
      } else {
        u = Universe::create(name, cur.integer());
      }
    } catch (const ParseError&) {
      throw;
    } catch (const Error& e) {
      cur.failAt(at, e.what());
    }
    cur.expectEnd();
    if (doc.universe(name)) cur.failAt(at, "universe '" + name + "' declared twice");
    doc.universes.push_back(u);
  }

  for (const auto& raw : sections["problem"]) {
    Cursor cur(raw.text, raw.line);
    const std::size_t at = cur.pos();
    const std::string key = cur.identifier();
    cur.expect('=');
    const std::size_t refAt = cur.pos();
    const std::string ref = cur.identifier();
    cur.expectEnd();
    UniverseRef u = doc.universe(ref);
    if (!u) cur.failAt(refAt, "unknown universe '" + ref + "'");
    if (key == "domain") {
      if (doc.domain) cur.failAt(at, "domain given twice");
      doc.domain = u;
    } else if (key == "codomain") {
      if (doc.codomain) cur.failAt(at, "codomain given twice");
      doc.codomain = u;
    } else {
      cur.failAt(at, "unknown problem key '" + key + "'");
    }
  }
  if (!doc.domain || !doc.codomain) {
    // A single declared universe serves as both sides.
    if (doc.universes.size() == 1 && !doc.domain && !doc.codomain) {
      doc.domain = doc.codomain = doc.universes.front();
    } else {
      throw ParseError(lastLine, 1, "the [problem] section must name a domain and a codomain");
    }
  }

  {
    const auto& lines = sections["functions"];
    std::size_t i = 0;
    while (i < lines.size()) {
      Cursor cur(lines[i].text, lines[i].line);
      const std::size_t at = cur.pos();
      if (cur.peek() == '(') cur.fail("table row outside a function declaration");
      const std::string name = cur.identifier();
      cur.expect(':');
      const std::uint64_t arity = cur.integer();
      cur.expectEnd();
      if (arity == 0) cur.failAt(at, "functions must have positive arity");
      if (findNamed(doc.functions, name)) cur.failAt(at, "duplicate function name '" + name + "'");
      MultiFunction f;
      try {
        f = MultiFunction(doc.domain, doc.codomain, arity);
      } catch (const Error& e) {
        cur.failAt(at, e.what());
      }
      std::vector<bool> filled(f.points(), false);
      const std::size_t header = lines[i].line;
      ++i;
      while (i < lines.size()) {
        Cursor row(lines[i].text, lines[i].line);
        if (row.peek() != '(') break;
        const std::size_t rowAt = row.pos();
        const Tuple input = tuple(row, *doc.domain);
        if (input.arity() != arity) row.failAt(rowAt, "input tuple arity differs from the function's");
        row.expect("->");
        const ValueSet v = valueSet(row, *doc.codomain);
        row.expectEnd();
        const std::uint64_t rank = tupleRank(input, *doc.domain);
        if (filled[rank]) row.failAt(rowAt, "row " + toString(input, *doc.domain) + " listed twice");
        filled[rank] = true;
        f.setValue(rank, v);
        ++i;
      }
      for (std::size_t p = 0; p < filled.size(); ++p) {
        if (!filled[p]) {
          throw ParseError(header, 1,
                           "function '" + name + "' has no row for input " +
                               toString(tupleUnrank(p, arity, *doc.domain), *doc.domain));
        }
      }
      doc.functions.push_back({name, std::move(f)});
    }
  }

  for (const auto& raw : sections["relations"]) {
    Cursor cur(raw.text, raw.line);
    const std::size_t at = cur.pos();
    const std::string name = cur.identifier();
    cur.expect(':');
    const std::size_t uAt = cur.pos();
    const std::string uname = cur.identifier();
    UniverseRef u = doc.universe(uname);
    if (!u) cur.failAt(uAt, "unknown universe '" + uname + "'");
    cur.expect('^');
    const std::uint64_t arity = cur.integer();
    if (arity == 0) cur.failAt(uAt, "relations must have positive arity");
    cur.expect('=');
    const std::size_t valueAt = cur.pos();
    Relation r = relationToken(cur, u, [&](const std::string& ref, std::size_t refAt) -> Relation {
      if (const auto* other = findNamed(doc.relations, ref)) return other->value;
      cur.failAt(refAt, "unknown relation '" + ref + "'");
    });
    cur.expectEnd();
    if (r.arity() != arity) cur.failAt(valueAt, "relation value has arity " + std::to_string(r.arity()));
    if (&r.universe() != u.get()) cur.failAt(valueAt, "relation value is over another universe");
    if (findNamed(doc.relations, name)) cur.failAt(at, "duplicate relation name '" + name + "'");
    doc.relations.push_back({name, std::move(r)});
  }

  for (const auto& raw : sections["constraints"]) {
    Cursor cur(raw.text, raw.line);
    const std::size_t at = cur.pos();
    ConstraintEntry e;
    e.name = cur.identifier();
    cur.expect('=');
    cur.expect('(');
    auto side = [&](const UniverseRef& u, std::string& token) {
      const bool literal = cur.peek() == '{';
      const std::size_t sideAt = cur.pos();
      Relation r = relationToken(cur, u, [&](const std::string& ref, std::size_t refAt) -> Relation {
        const auto* named = findNamed(doc.relations, ref);
        if (!named) cur.failAt(refAt, "unknown relation '" + ref + "'");
        if (&named->value.universe() != u.get()) {
          cur.failAt(refAt, "relation '" + ref + "' is not over " + u->name());
        }
        return named->value;
      });
      token = literal ? relationTokenText(r) : std::string(std::string_view(raw.text).substr(sideAt, cur.pos() - sideAt));
      return r;
    };
    Relation r = side(doc.domain, e.antecedent);
    cur.expect(',');
    const std::size_t sAt = cur.pos();
    Relation s = side(doc.codomain, e.consequent);
    cur.expect(')');
    cur.expectEnd();
    if (r.arity() != s.arity()) {
      cur.failAt(sAt, "antecedent has arity " + std::to_string(r.arity()) + " but consequent has arity " +
                          std::to_string(s.arity()));
    }
    if (findNamed(doc.constraints, e.name)) cur.failAt(at, "duplicate constraint name '" + e.name + "'");
    e.value = Constraint(std::move(r), std::move(s));
    doc.constraints.push_back(std::move(e));
  }

  for (const char* kind : {"classes", "sets"}) {
    const bool classes = std::string_view(kind) == "classes";
    auto& out = classes ? doc.classes : doc.sets;
    for (const auto& raw : sections[kind]) {
      Cursor cur(raw.text, raw.line);
      const std::size_t at = cur.pos();
      ListEntry e = listEntry(cur);
      if (findNamed(out, e.name)) cur.failAt(at, "duplicate name '" + e.name + "'");
      for (const auto& member : e.members) {
        try {
          if (classes) {
            doc.function(member);
          } else {
            doc.constraint(member);
          }
        } catch (const Error& err) {
          const std::size_t col = raw.text.find(member, raw.text.find('{'));
          throw ParseError(raw.line, col + 1, err.what());
        }
      }
      out.push_back(std::move(e));
    }
  }

  for (const auto& raw : sections["bounds"]) {
    Cursor cur(raw.text, raw.line);
    const std::size_t at = cur.pos();
    const std::string key = cur.identifier();
    cur.expect('=');
    const std::uint64_t value = cur.integer();
    cur.expectEnd();
    auto& b = doc.bounds;
    if (std::find(b.keys.begin(), b.keys.end(), key) != b.keys.end()) cur.failAt(at, "bound '" + key + "' set twice");
    if (key == "n_max") {
      b.bounds.maxFunctionArity = value;
    } else if (key == "m_max") {
      b.bounds.maxConstraintArity = value;
    } else if (key == "j_max") {
      b.bounds.maxFamilySize = value;
    } else if (key == "v_max") {
      b.bounds.maxIndeterminates = value;
    } else if (key == "budget") {
      b.budget = value;
    } else if (key == "seed") {
      b.seed = value;
    } else {
      cur.failAt(at, "unknown bound '" + key + "'");
    }
    b.keys.push_back(key);
    try {
      b.bounds.validate();
    } catch (const Error& e) {
      cur.failAt(at, e.what());
    }
  }
  return doc;
}

// ---------------------------------------------------------------------------

UniverseRef ProblemDocument::universe(std::string_view name) const {
  for (const auto& u : universes) {
    if (u->name() == name) return u;
  }
  return nullptr;
}

MultiFunction ProblemDocument::function(std::string_view name) const {
  if (const auto* f = findNamed(functions, name)) return f->value;
  if (auto n = suffixNumber(name, "e")) return emptyValuedFunction(domain, codomain, *n);
  throw DomainError("unknown function '" + std::string(name) + "'");
}

Constraint ProblemDocument::constraint(std::string_view name) const {
  if (const auto* c = findNamed(constraints, name)) return c->value;
  if (auto m = suffixNumber(name, "empty")) return Constraint::empty(domain, codomain, *m);
  if (auto m = suffixNumber(name, "trivial")) return Constraint::trivial(domain, codomain, *m);
  if (name == "equality") return Constraint::equality(domain, codomain);
  throw DomainError("unknown constraint '" + std::string(name) + "'");
}

Relation ProblemDocument::relation(std::string_view token, const UniverseRef& over) const {
  const std::string text(token);
  Cursor cur(text, 1);
  Relation r = relationToken(cur, over, [&](const std::string& ref, std::size_t refAt) -> Relation {
    const auto* named = findNamed(relations, ref);
    if (!named) cur.failAt(refAt, "unknown relation '" + ref + "'");
    if (&named->value.universe() != over.get()) cur.failAt(refAt, "relation '" + ref + "' is over another universe");
    return named->value;
  });
  cur.expectEnd();
  return r;
}

FunctionClass ProblemDocument::functionClass(std::string_view name, std::size_t arityCap) const {
  const auto* entry = findNamed(classes, name);
  if (!entry) throw DomainError("unknown class '" + std::string(name) + "'");
  std::vector<MultiFunction> members;
  for (const auto& m : entry->members) {
    members.push_back(function(m));
    arityCap = std::max(arityCap, members.back().arity());
  }
  FunctionClass out(domain, codomain, arityCap);
  for (const auto& f : members) out.insert(f);
  return out;
}

ConstraintSet ProblemDocument::constraintSet(std::string_view name, std::size_t arityCap) const {
  const auto* entry = findNamed(sets, name);
  if (!entry) throw DomainError("unknown constraint set '" + std::string(name) + "'");
  std::vector<Constraint> members;
  for (const auto& m : entry->members) {
    members.push_back(constraint(m));
    arityCap = std::max(arityCap, members.back().arity());
  }
  ConstraintSet out(domain, codomain, arityCap);
  for (const auto& c : members) out.insert(c);
  return out;
}

std::string ProblemDocument::soleClass() const {
  if (classes.size() != 1) throw DomainError("name a class; the document declares " + std::to_string(classes.size()));
  return classes.front().name;
}

std::string ProblemDocument::soleSet() const {
  if (sets.size() != 1) {
    throw DomainError("name a constraint set; the document declares " + std::to_string(sets.size()));
  }
  return sets.front().name;
}

// ---------------------------------------------------------------------------

std::string tupleText(const Tuple& t, const Universe& u) { return toString(t, u); }

std::vector<std::string> functionRows(const MultiFunction& f) {
  std::vector<std::string> rows;
  for (std::size_t p = 0; p < f.points(); ++p) {
    rows.push_back(toString(tupleUnrank(p, f.arity(), f.domain()), f.domain()) + " -> " +
                   valueSetString(f.value(p), f.codomain()));
  }
  return rows;
}

namespace {

std::string universeText(const Universe& u) {
  if (!u.hasLabels()) return u.name() + " = " + std::to_string(u.size());
  std::string s = u.name() + " = {";
  for (Element e = 0; e < u.size(); ++e) {
    if (e) s += ", ";
    s += u.label(e);
  }
  return s + "}";
}

std::string listText(const ListEntry& e) {
  std::string s = e.name + " = {";
  for (std::size_t i = 0; i < e.members.size(); ++i) {
    if (i) s += ", ";
    s += e.members[i];
  }
  return s + "}";
}

std::uint64_t boundValue(const DocumentBounds& b, const std::string& key) {
  if (key == "n_max") return b.bounds.maxFunctionArity;
  if (key == "m_max") return b.bounds.maxConstraintArity;
  if (key == "j_max") return b.bounds.maxFamilySize;
  if (key == "v_max") return b.bounds.maxIndeterminates;
  if (key == "budget") return b.budget.value_or(0);
  return b.seed.value_or(0);
}

}  // namespace

std::string serialize(const ProblemDocument& doc) {
  std::ostringstream out;
  bool first = true;
  auto section = [&](const char* name) {
    if (!first) out << '\n';
    first = false;
    out << '[' << name << "]\n";
  };
  section("universes");
  for (const auto& u : doc.universes) out << universeText(*u) << '\n';
  section("problem");
  out << "domain = " << doc.domain->name() << '\n' << "codomain = " << doc.codomain->name() << '\n';
  if (!doc.functions.empty()) {
    section("functions");
    for (const auto& f : doc.functions) {
      out << f.name << " : " << f.value.arity() << '\n';
      for (const auto& row : functionRows(f.value)) out << "  " << row << '\n';
    }
  }
  if (!doc.relations.empty()) {
    section("relations");
    for (const auto& r : doc.relations) {
      out << r.name << " : " << r.value.universe().name() << '^' << r.value.arity() << " = " << toString(r.value)
          << '\n';
    }
  }
  if (!doc.constraints.empty()) {
    section("constraints");
    for (const auto& c : doc.constraints) out << c.name << " = (" << c.antecedent << ", " << c.consequent << ")\n";
  }
  if (!doc.classes.empty()) {
    section("classes");
    for (const auto& e : doc.classes) out << listText(e) << '\n';
  }
  if (!doc.sets.empty()) {
    section("sets");
    for (const auto& e : doc.sets) out << listText(e) << '\n';
  }
  if (!doc.bounds.keys.empty()) {
    section("bounds");
    const auto& present = doc.bounds.keys;
    for (const auto& key : kBoundKeys) {
      if (std::find(present.begin(), present.end(), key) != present.end()) {
        out << key << " = " << boundValue(doc.bounds, key) << '\n';
      }
    }
  }
  return out.str();
}

// ---------------------------------------------------------------------------

nlohmann::json tupleJson(const Tuple& t, const Universe& u) {
  nlohmann::json j = nlohmann::json::array();
  for (std::size_t i = 0; i < t.arity(); ++i) j.push_back(u.label(t[i]));
  return j;
}

nlohmann::json relationJson(const Relation& r) {
  nlohmann::json tuples = nlohmann::json::array();
  for (const auto& t : r.tuples()) tuples.push_back(tupleJson(t, r.universe()));
  return {{"universe", r.universe().name()}, {"arity", r.arity()}, {"tuples", tuples}};
}

nlohmann::json constraintJson(const Constraint& c) {
  return {{"antecedent", relationJson(c.antecedent())}, {"consequent", relationJson(c.consequent())}};
}

nlohmann::json functionJson(const MultiFunction& f) {
  nlohmann::json rows = nlohmann::json::array();
  for (std::size_t p = 0; p < f.points(); ++p) {
    nlohmann::json values = nlohmann::json::array();
    for (Element b = 0; b < f.codomain().size(); ++b) {
      if ((f.value(p) >> b) & 1u) values.push_back(f.codomain().label(b));
    }
    rows.push_back({{"input", tupleJson(tupleUnrank(p, f.arity(), f.domain()), f.domain())}, {"values", values}});
  }
  return {{"arity", f.arity()}, {"table", rows}};
}

nlohmann::json toJson(const ProblemDocument& doc) {
  nlohmann::json j;
  j["universes"] = nlohmann::json::array();
  for (const auto& u : doc.universes) {
    nlohmann::json entry{{"name", u->name()}, {"size", u->size()}};
    if (u->hasLabels()) {
      nlohmann::json labels = nlohmann::json::array();
      for (Element e = 0; e < u->size(); ++e) labels.push_back(u->label(e));
      entry["labels"] = labels;
    }
    j["universes"].push_back(entry);
  }
  j["problem"] = {{"domain", doc.domain->name()}, {"codomain", doc.codomain->name()}};
  j["functions"] = nlohmann::json::array();
  for (const auto& f : doc.functions) {
    nlohmann::json entry = functionJson(f.value);
    entry["name"] = f.name;
    j["functions"].push_back(entry);
  }
  j["relations"] = nlohmann::json::array();
  for (const auto& r : doc.relations) {
    nlohmann::json entry = relationJson(r.value);
    entry["name"] = r.name;
    j["relations"].push_back(entry);
  }
  j["constraints"] = nlohmann::json::array();
  for (const auto& c : doc.constraints) {
    j["constraints"].push_back({{"name", c.name}, {"antecedent", c.antecedent}, {"consequent", c.consequent}});
  }
  for (const char* kind : {"classes", "sets"}) {
    const auto& list = std::string_view(kind) == "classes" ? doc.classes : doc.sets;
    j[kind] = nlohmann::json::array();
    for (const auto& e : list) j[kind].push_back({{"name", e.name}, {"members", e.members}});
  }
  j["bounds"] = nlohmann::json::object();
  for (const auto& key : doc.bounds.keys) j["bounds"][key] = boundValue(doc.bounds, key);
  return j;
}

namespace {

std::string joinLabels(const nlohmann::json& labels) {
  std::string s;
  for (std::size_t i = 0; i < labels.size(); ++i) {
    if (i) s += ",";
    s += labels.at(i).get<std::string>();
  }
  return s;
}

}  // namespace

ProblemDocument fromJson(const nlohmann::json& j) {
  // The JSON form mirrors the text form entry by entry; rebuild the text and
  // parse it so both share one validator.
  std::ostringstream text;
  try {
    text << "[universes]\n";
    for (const auto& u : j.at("universes")) {
      text << u.at("name").get<std::string>() << " = ";
      if (u.contains("labels")) {
        text << '{' << joinLabels(u.at("labels")) << "}\n";
      } else {
        text << u.at("size").get<std::uint64_t>() << '\n';
      }
    }
    text << "[problem]\n";
    text << "domain = " << j.at("problem").at("domain").get<std::string>() << '\n';
    text << "codomain = " << j.at("problem").at("codomain").get<std::string>() << '\n';
    text << "[functions]\n";
    for (const auto& f : j.value("functions", nlohmann::json::array())) {
      text << f.at("name").get<std::string>() << " : " << f.at("arity").get<std::uint64_t>() << '\n';
      for (const auto& row : f.at("table")) {
        text << "  (" << joinLabels(row.at("input")) << ") -> {" << joinLabels(row.at("values")) << "}\n";
      }
    }
    text << "[relations]\n";
    for (const auto& r : j.value("relations", nlohmann::json::array())) {
      text << r.at("name").get<std::string>() << " : " << r.at("universe").get<std::string>() << '^'
           << r.at("arity").get<std::uint64_t>() << " = ";
      if (r.at("tuples").empty()) {
        text << "empty^" << r.at("arity").get<std::uint64_t>() << '\n';
      } else {
        text << '{';
        bool first = true;
        for (const auto& t : r.at("tuples")) {
          if (!first) text << ',';
          first = false;
          text << '(' << joinLabels(t) << ')';
        }
        text << "}\n";
      }
    }
    text << "[constraints]\n";
    for (const auto& c : j.value("constraints", nlohmann::json::array())) {
      text << c.at("name").get<std::string>() << " = (" << c.at("antecedent").get<std::string>() << ", "
           << c.at("consequent").get<std::string>() << ")\n";
    }
    for (const char* kind : {"classes", "sets"}) {
      text << '[' << kind << "]\n";
      for (const auto& e : j.value(kind, nlohmann::json::array())) {
        ListEntry entry{e.at("name").get<std::string>(), e.at("members").get<std::vector<std::string>>()};
        text << listText(entry) << '\n';
      }
    }
    text << "[bounds]\n";
    const nlohmann::json bounds = j.value("bounds", nlohmann::json::object());
    for (const auto& [key, value] : bounds.items()) text << key << " = " << value.get<std::uint64_t>() << '\n';
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(1, 1, std::string("malformed JSON document: ") + e.what());
  }
  try {
    return parseDocument(text.str());
  } catch (const ParseError& e) {
    throw ParseError(1, 1, std::string("invalid JSON document: ") + e.what());
  }
}

ProblemDocument loadDocument(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot open '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  const std::string text = buf.str();
  if (path.size() >= 5 && path.substr(path.size() - 5) == ".json") {
    nlohmann::json j;
    try {
      j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
      throw ParseError(1, e.byte, std::string("malformed JSON: ") + e.what());
    }
    return fromJson(j);
  }
  return parseDocument(text);
}

}  // namespace galois::cli
