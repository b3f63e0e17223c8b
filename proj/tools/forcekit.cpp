#include <CLI11.hpp>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <thread>

#include "forcekit/linalg.hpp"
#include "forcekit/report.hpp"
#include "forcekit/suites.hpp"
#include "forcekit/tables.hpp"

namespace {

using namespace forcekit;

constexpr int kExitOk = 0;
constexpr int kExitVerifyFailed = 1;
constexpr int kExitBadInput = 2;
constexpr int kExitBudget = 3;

struct GraphSource {
  std::string family;
  std::string file;
};

struct Loaded {
  Graph graph;
  std::string description;
  std::optional<FamilySpec> family;
};

Loaded load(const GraphSource& src) {
  if (!src.family.empty()) {
    FamilySpec spec = parse_family(src.family);
    return {build_family(spec), to_string(spec), spec};
  }
  std::ifstream in(src.file);
  if (!in) throw ParseError("cannot read " + src.file);
  std::ostringstream text;
  text << in.rdbuf();
  return {parse_graph(text.str()), src.file, std::nullopt};
}

std::uint64_t default_budget() {
  const char* env = std::getenv("FORCEKIT_BUDGET");
  if (!env || !*env) return kDefaultNodeCap;
  char* end = nullptr;
  const unsigned long long v = std::strtoull(env, &end, 10);
  if (*end != '\0' || v == 0) throw std::invalid_argument("FORCEKIT_BUDGET must be a positive integer");
  return v;
}

int default_jobs() { return std::max(1U, std::thread::hardware_concurrency()); }

void add_source(CLI::App* cmd, GraphSource& src) {
  auto* group = cmd->add_option_group("source", "exactly one graph source");
  group->add_option("--family", src.family, "family instance, e.g. wheel:7 or cycle:3+path:2");
  group->add_option("--file", src.file, "edge-list file: header 'n m' then m lines 'u v'");
  group->require_option(1);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Zero forcing and failed zero forcing numbers"};
  app.require_subcommand(1);

  std::uint64_t budget = 0;
  bool json = false;

  GraphSource source;
  std::string rule = "both";
  std::vector<std::string> params = {"Z", "F"};
  bool timings = false;
  auto* analyze_cmd = app.add_subcommand("analyze", "compute Z, Z+, F, F+ for one graph");
  add_source(analyze_cmd, source);
  analyze_cmd->add_option("--rule", rule, "color-change rule")->check(CLI::IsMember({"standard", "psd", "both"}));
  analyze_cmd->add_option("--params", params, "parameters to compute")->check(CLI::IsMember({"Z", "F"}))->delimiter(',');
  analyze_cmd->add_flag("--json", json, "JSON output");
  analyze_cmd->add_flag("--timings", timings, "include wall-clock seconds per parameter");
  analyze_cmd->add_option("--budget", budget, "search node cap");

  SuiteOptions suite;
  suite.jobs = default_jobs();
  std::string suite_name;
  auto* verify_cmd = app.add_subcommand("verify", "run a theorem conformance suite");
  verify_cmd->add_option("--suite", suite_name, "suite name")->required()->check(CLI::IsMember(suite_names()));
  verify_cmd->add_option("--max-n", suite.max_n, "largest instance order (0: suite default)");
  verify_cmd->add_option("--seed", suite.seed, "root seed");
  verify_cmd->add_option("--jobs", suite.jobs, "worker threads")->check(CLI::PositiveNumber);
  verify_cmd->add_option("--trials", suite.trials, "matrices per instance and rule (linalg)")->check(CLI::PositiveNumber);
  verify_cmd->add_flag("--json", json, "JSON output");
  verify_cmd->add_option("--budget", budget, "search node cap");

  int which = 1;
  auto* table_cmd = app.add_subcommand("table", "summary table of F (1) or F+ (2) with computed columns");
  table_cmd->add_option("which", which, "1 or 2")->required()->check(CLI::IsMember({1, 2}));
  table_cmd->add_option("--max-n", suite.max_n, "largest instance order (0: default ranges)");
  table_cmd->add_option("--jobs", suite.jobs, "worker threads")->check(CLI::PositiveNumber);
  table_cmd->add_option("--budget", budget, "search node cap");

  GraphSource matrix_source;
  std::string kind = "sample";
  std::uint64_t seed = 1;
  int trial = 0;
  auto* matrix_cmd = app.add_subcommand("matrix", "print a pattern matrix as dense text");
  add_source(matrix_cmd, matrix_source);
  matrix_cmd->add_option("--kind", kind, "matrix construction")
      ->check(CLI::IsMember({"sample", "laplacian", "unit-laplacian", "adjacency", "trial-standard", "trial-psd"}));
  matrix_cmd->add_option("--seed", seed, "seed");
  matrix_cmd->add_option("--trial", trial, "trial index for trial-* kinds")->check(CLI::NonNegativeNumber);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitBadInput;
  }

  try {
    SearchOptions search{budget ? budget : default_budget()};

    if (*analyze_cmd) {
      const Loaded g = load(source);
      AnalyzeOptions options;
      options.standard = rule != "psd";
      options.psd = rule != "standard";
      options.zero_forcing = std::find(params.begin(), params.end(), "Z") != params.end();
      options.failed = std::find(params.begin(), params.end(), "F") != params.end();
      options.search = search;
      const ParamReport report = analyze(g.graph, g.description, g.family, options);
      std::cout << (json ? report_json(report, timings) : report_tsv(report, timings));
      return kExitOk;
    }

    if (*verify_cmd) {
      suite.search = search;
      const SuiteReport report = run_suite(suite_name, suite);
      std::cout << (json ? suite_json(report) : suite_tsv(report));
      return report.passed() ? kExitOk : kExitVerifyFailed;
    }

    if (*table_cmd) {
      suite.search = search;
      std::cout << render_table(which, suite);
      return kExitOk;
    }

    if (*matrix_cmd) {
      const Loaded g = load(matrix_source);
      const PatternMatrix m = [&] {
        if (kind == "sample") return sample_pattern_matrix(g.graph, seed);
        if (kind == "laplacian") return weighted_laplacian(g.graph, seed);
        if (kind == "unit-laplacian") return unit_laplacian(g.graph);
        if (kind == "adjacency") return adjacency_matrix(g.graph);
        if (kind == "trial-standard") return trial_matrix(g.graph, Rule::Standard, trial, seed);
        return trial_matrix(g.graph, Rule::PositiveSemidefinite, trial, seed);
      }();
      write_dense(std::cout, m.entries);
      return kExitOk;
    }
  } catch (const BudgetExceeded& e) {
    std::cerr << "forcekit: " << e.what() << '\n';
    return kExitBudget;
  } catch (const std::exception& e) {
    std::cerr << "forcekit: " << e.what() << '\n';
    return kExitBadInput;
  }
  return kExitOk;
}
