#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <nlohmann/json.hpp>

#include "galois/constraint.hpp"
#include "galois/error.hpp"
#include "galois/multifunction.hpp"

namespace galois::cli {

/// Malformed problem text; what() is "line:column: message".
class ParseError : public Error {
 public:
  ParseError(std::size_t line, std::size_t column, const std::string& message)
      : Error(std::to_string(line) + ":" + std::to_string(column) + ": " + message), line_(line), column_(column) {}
  std::size_t line() const noexcept { return line_; }
  std::size_t column() const noexcept { return column_; }

 private:
  std::size_t line_;
  std::size_t column_;
};

template <typename T>
struct Named {
  std::string name;
  T value;
};

struct ConstraintEntry {
  std::string name;
  std::string antecedent;  // reference token as written
  std::string consequent;
  Constraint value;
};

struct ListEntry {
  std::string name;
  std::vector<std::string> members;
};

struct DocumentBounds {
  Bounds bounds;
  std::optional<std::uint64_t> budget;
  std::optional<std::uint64_t> seed;
  /// Keys present in the file, in order, for round-tripping.
  std::vector<std::string> keys;
};

/// A parsed problem file. Every reference is resolved at parse time.
struct ProblemDocument {
  std::vector<UniverseRef> universes;
  UniverseRef domain;
  UniverseRef codomain;
  std::vector<Named<MultiFunction>> functions;
  std::vector<Named<Relation>> relations;
  std::vector<ConstraintEntry> constraints;
  std::vector<ListEntry> classes;
  std::vector<ListEntry> sets;
  DocumentBounds bounds;

  UniverseRef universe(std::string_view name) const;
  /// Declared names, then built-ins: e<n> for the n-ary empty-valued function.
  MultiFunction function(std::string_view name) const;
  /// Declared names, then built-ins: empty<m>, trivial<m>, equality.
  Constraint constraint(std::string_view name) const;
  Relation relation(std::string_view token, const UniverseRef& over) const;
  FunctionClass functionClass(std::string_view name, std::size_t arityCap) const;
  ConstraintSet constraintSet(std::string_view name, std::size_t arityCap) const;
  /// The only class (or set) when exactly one is declared.
  std::string soleClass() const;
  std::string soleSet() const;
};

ProblemDocument parseDocument(std::string_view text);
/// Canonical text; parseDocument(serialize(d)) serializes back to the same text.
std::string serialize(const ProblemDocument& doc);

nlohmann::json toJson(const ProblemDocument& doc);
ProblemDocument fromJson(const nlohmann::json& j);

/// Reads a file, choosing JSON for a .json suffix and text otherwise.
ProblemDocument loadDocument(const std::string& path);

// Value renderings shared by the text and JSON outputs.
std::string tupleText(const Tuple& t, const Universe& u);
nlohmann::json tupleJson(const Tuple& t, const Universe& u);
nlohmann::json relationJson(const Relation& r);
nlohmann::json constraintJson(const Constraint& c);
nlohmann::json functionJson(const MultiFunction& f);
/// One "(inputs) -> {values}" row per input tuple.
std::vector<std::string> functionRows(const MultiFunction& f);

}  // namespace galois::cli
