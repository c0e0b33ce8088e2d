#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "document.hpp"

namespace galois::cli {

enum ExitCode : int { kComputed = 0, kViolated = 1, kInputError = 2, kInconclusive = 3 };

struct Options {
  /// "n_max=1,m_max=2", overriding the document's [bounds].
  std::string bounds;
  std::optional<std::uint64_t> seed;
  std::optional<std::uint64_t> budget;
  bool machine = false;
  unsigned workers = 1;
  bool partial = false;
  bool total = false;
  /// any, total, partial or single.
  std::string kind = "any";
};

/// Bounds from the document with the --bounds overrides applied.
Bounds effectiveBounds(const ProblemDocument& doc, const Options& opts);
FunctionKind parseKind(const std::string& text);

const std::vector<std::string>& commandNames();

/// Runs one command and writes its report. Errors propagate as exceptions;
/// the return value is the exit code for a completed run.
int run(const std::string& command, const ProblemDocument& doc, const std::vector<std::string>& operands,
        const Options& opts, std::ostream& out);

}  // namespace galois::cli
