#include <cstdlib>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "commands.hpp"

namespace {

unsigned workersFromEnvironment() {
  const char* text = std::getenv("GALOIS_WORKERS");
  if (text == nullptr || *text == '\0') return 1;
  try {
    const unsigned long n = std::stoul(text);
    return n == 0 ? 1u : static_cast<unsigned>(n);
  } catch (const std::exception&) {
    return 1;
  }
}

}  // namespace

int main(int argc, char** argv) {
  using namespace galois::cli;
  CLI::App app{"Galois connections between multivalued functions and relational constraints"};
  std::string command;
  std::string file;
  std::vector<std::string> operands;
  Options opts;
  std::string format = "text";

  std::string commands;
  for (const auto& c : commandNames()) commands += (commands.empty() ? "" : ", ") + c;
  app.add_option("command", command, "One of: " + commands)->required();
  app.add_option("file", file, "Problem file (.json for the machine form)")->required();
  app.add_option("operands", operands, "Command operands: names, relation literals, variants");
  app.add_option("--bounds", opts.bounds, "Bound overrides, e.g. n_max=1,m_max=2");
  app.add_option("--seed", opts.seed, "Seed for sampling");
  app.add_option("--budget", opts.budget, "Enumeration budget in tables");
  app.add_option("--format", format, "Output format")->check(CLI::IsMember({"text", "machine"}));
  app.add_option("--kind", opts.kind, "Function kind for close-lc and enumerate")
      ->check(CLI::IsMember({"any", "total", "partial", "single"}));
  app.add_flag("--partial", opts.partial, "separate-function: partial witness");
  app.add_flag("--total", opts.total, "separate-function: total witness; close-rvs: total substitutions");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kInputError;
  }
  opts.machine = format == "machine";
  opts.workers = workersFromEnvironment();

  try {
    const ProblemDocument doc = loadDocument(file);
    return run(command, doc, operands, opts, std::cout);
  } catch (const ParseError& e) {
    std::cerr << file << ':' << e.what() << '\n';
    return kInputError;
  } catch (const galois::BudgetExceeded& e) {
    std::cerr << "inconclusive: " << e.what() << '\n';
    return kInconclusive;
  } catch (const galois::Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kInputError;
  }
}
