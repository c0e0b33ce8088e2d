#include <gtest/gtest.h>

#include <fstream>
#include <sstream>

#include "commands.hpp"
#include "document.hpp"

using namespace galois;
using namespace galois::cli;

namespace {

std::string fixture(const std::string& name) {
  std::ifstream in(std::string(GALOIS_FIXTURE_DIR) + "/" + name);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::pair<int, std::string> runOn(const std::string& file, const std::string& command,
                                  const std::vector<std::string>& operands, Options opts = {}) {
  const ProblemDocument doc = parseDocument(fixture(file));
  std::ostringstream out;
  const int code = run(command, doc, operands, opts, out);
  return {code, out.str()};
}

std::pair<int, std::string> runText(const std::string& command, const std::vector<std::string>& operands,
                                    Options opts = {}) {
  return runOn("example.gal", command, operands, opts);
}

void expectParseError(const std::string& text, std::size_t line, const std::string& fragment) {
  try {
    parseDocument(text);
    FAIL() << "no error for:\n" << text;
  } catch (const ParseError& e) {
    EXPECT_EQ(e.line(), line) << e.what();
    EXPECT_NE(std::string(e.what()).find(fragment), std::string::npos) << e.what();
  }
}

}  // namespace

TEST(Document, ParsesFixture) {
  const ProblemDocument doc = parseDocument(fixture("example.gal"));
  EXPECT_EQ(doc.domain, doc.codomain);
  EXPECT_EQ(doc.functions.size(), 5u);
  EXPECT_EQ(doc.soleClass(), "M");
  EXPECT_EQ(doc.bounds.bounds.maxFunctionArity, 1u);
  EXPECT_EQ(doc.bounds.bounds.maxConstraintArity, 2u);
  EXPECT_EQ(doc.functionClass("M", 1).size(), 3u);
  EXPECT_EQ(toString(doc.function("f")), "[(0)->{0,1}; (1)->{1}]");
  EXPECT_TRUE(doc.function("e2").isEmptyValued());
  EXPECT_EQ(doc.constraint("trivial1"), Constraint::trivial(doc.domain, doc.codomain, 1));
  EXPECT_THROW(doc.function("nope"), Error);
}

TEST(Document, TextRoundTrip) {
  const std::string once = serialize(parseDocument(fixture("example.gal")));
  EXPECT_EQ(serialize(parseDocument(once)), once);
}

TEST(Document, JsonRoundTrip) {
  const ProblemDocument doc = parseDocument(fixture("example.gal"));
  const nlohmann::json j = toJson(doc);
  EXPECT_EQ(serialize(fromJson(j)), serialize(doc));
  EXPECT_EQ(toJson(fromJson(j)), j);
  EXPECT_THROW(fromJson(nlohmann::json::parse("{\"functions\": 3}")), Error);
}

TEST(Document, RelationsAndConstraints) {
  const std::string text =
      "[universes]\nA = {a, b}\nB = {0, 1, 2}\n"
      "[problem]\ndomain = A\ncodomain = B\n"
      "[relations]\nR : A^2 = {(a,b),(b,b)}\n"
      "[constraints]\nc = (R, {(0,1),(2,2)})\nd = (full^1, empty^1)\n"
      "[sets]\nT = {c, d, equality}\n";
  const ProblemDocument doc = parseDocument(text);
  EXPECT_EQ(doc.relation("R", doc.domain).size(), 2u);
  EXPECT_EQ(doc.constraint("c").consequent().size(), 2u);
  EXPECT_EQ(doc.constraintSet("T", 2).size(), 3u);
  EXPECT_EQ(serialize(parseDocument(serialize(doc))), serialize(doc));
}

TEST(Document, ParseErrors) {
  expectParseError("[nonsense]\n", 1, "section");
  expectParseError("[universes]\nA = {0, 1}\n[functions]\nf : 1\n  (0) -> {0}\n", 4, "no row");
  expectParseError("[universes]\nA = {0, 1}\n[functions]\nf : 1\n  (0) -> {0}\n  (0) -> {1}\n  (1) -> {1}\n", 6,
                   "listed twice");
  expectParseError("[universes]\nA = {0, 1}\n[functions]\nf : 1\n  (0) -> {7}\n  (1) -> {1}\n", 5, "7");
  expectParseError("[universes]\nA = {0, 1}\n[classes]\nM = {ghost}\n", 4, "ghost");
  expectParseError("[universes]\nA = {0, 1}\n[bounds]\nm_max = x\n", 4, "non-negative");
  expectParseError("[universes]\nA = {0, 1}\n[relations]\nR : A^2 = {}\n", 4, "empty");
  expectParseError("[universes]\nA = {0, 1}\n[relations]\nR : A^2 = {(0)}\n", 4, "arity");
}

TEST(Commands, CheckSat) {
  EXPECT_EQ(runText("check-sat", {"f", "trivial1"}).first, kComputed);
  const auto [code, text] = runText("check-sat", {"f", "equality"});
  EXPECT_EQ(code, kViolated);
  EXPECT_NE(text.find("image"), std::string::npos);
}

TEST(Commands, SeparateConstraint) {
  auto [code, text] = runText("separate-constraint", {"M", "g"});
  EXPECT_EQ(code, kViolated);
  EXPECT_NE(text.find("outside"), std::string::npos);
  EXPECT_EQ(runText("separate-constraint", {"M", "f"}).first, kComputed);
}

TEST(Commands, MachineOutputIsJson) {
  Options opts;
  opts.machine = true;
  const auto [code, text] = runText("verify-prop2", {"i"}, opts);
  EXPECT_EQ(code, kViolated);
  const nlohmann::json j = nlohmann::json::parse(text);
  EXPECT_EQ(j["command"], "verify-prop2");
  EXPECT_EQ(j["exit"], 1);
}

TEST(Commands, BoundsOverride) {
  Options opts;
  opts.bounds = "m_max=1";
  const ProblemDocument doc = parseDocument(fixture("example.gal"));
  EXPECT_EQ(effectiveBounds(doc, opts).maxConstraintArity, 1u);
  opts.bounds = "q=1";
  EXPECT_THROW(effectiveBounds(doc, opts), Error);
  EXPECT_THROW(runText("no-such-command", {}), Error);
  EXPECT_THROW(parseKind("sometimes"), Error);
}

TEST(Commands, EveryCommandRuns) {
  const std::vector<std::pair<std::string, std::vector<std::string>>> calls{
      {"image", {"f", "eq"}},
      {"close-rvs", {}},
      {"close-lc", {}},
      {"csf", {}},
      {"enumerate", {"functions", "1"}},
      {"format", {}},
  };
  for (const auto& [cmd, ops] : calls) {
    EXPECT_EQ(runText(cmd, ops).first, kComputed) << cmd;
  }
}

TEST(Commands, ConstraintSide) {
  EXPECT_EQ(runOn("equality.gal", "close-wcm", {"T"}).first, kComputed);
  EXPECT_EQ(runOn("equality.gal", "mfsc", {"T"}).first, kComputed);
  EXPECT_EQ(runOn("equality.gal", "verify-prop4", {"iii", "T"}).first, kComputed);

  auto [code, text] = runOn("equality.gal", "separate-function", {"T", "pin"});
  EXPECT_EQ(code, kViolated);
  EXPECT_NE(text.find("outside"), std::string::npos);
  Options total;
  total.total = true;
  EXPECT_EQ(runOn("equality.gal", "separate-function", {"T", "pin"}, total).first, kViolated);
  EXPECT_EQ(runOn("equality.gal", "separate-function", {"T", "equality"}).first, kComputed);
}
