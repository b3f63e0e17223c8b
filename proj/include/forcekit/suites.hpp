#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "forcekit/extremal.hpp"
#include "forcekit/family.hpp"
#include "forcekit/random.hpp"
#include "forcekit/theorems.hpp"

namespace forcekit {

struct SuiteOptions {
  /// Upper bound on instance order; 0 keeps the suite's default range.
  /// For exhaustive6 it is the largest enumerated order (default 6, at most 7).
  int max_n = 0;
  std::uint64_t seed = 1;
  int jobs = 1;
  /// Matrices per family instance and rule in the linalg suite.
  int trials = 100;
  SearchOptions search;
};

struct Tally {
  std::uint64_t passed = 0;
  std::uint64_t failed = 0;
};

struct SuiteReport {
  static constexpr std::size_t kFailureCap = 50;

  std::string suite;
  std::uint64_t seed = 0;
  std::map<std::string, Tally> tallies;
  /// First kFailureCap failures in deterministic work order.
  std::vector<TheoremReport> failures;
  std::uint64_t failure_count = 0;

  void add(const TheoremReport& r);
  void add(const std::vector<TheoremReport>& rs);
  /// Appends `other` after this report's contents.
  void merge(const SuiteReport& other);
  bool passed() const { return failure_count == 0; }
  std::uint64_t checks() const;
};

/// Stable JSON: suite, seed, passed, totals, per-theorem tallies in key
/// order, failures. Contains nothing that depends on timing or --jobs.
std::string suite_json(const SuiteReport& report);
/// "theorem\tpassed\tfailed" per line after a header.
std::string suite_tsv(const SuiteReport& report);

const std::vector<std::string>& suite_names();
/// Throws std::invalid_argument for an unknown name.
SuiteReport run_suite(std::string_view name, const SuiteOptions& options);

SuiteReport run_table1(const SuiteOptions& options);
SuiteReport run_table2(const SuiteOptions& options);
SuiteReport run_table51(const SuiteOptions& options);
SuiteReport run_characterizations(const SuiteOptions& options);
SuiteReport run_exhaustive(const SuiteOptions& options);
SuiteReport run_disconnected(const SuiteOptions& options);
SuiteReport run_linalg(const SuiteOptions& options);
SuiteReport run_oracle(const SuiteOptions& options);

/// Default verification ranges: P, C up to 12, K up to 10, W up to 12,
/// K_{m,n} with 1 <= n <= m <= 5, Q up to 4, H up to 5, m-ary trees with
/// m in {2,3} up to 13 vertices, edgeless up to 8. Filtered to order <= max_n
/// when max_n > 0.
std::vector<FamilySpec> default_family_instances(int max_n = 0);

/// Random recursive tree (each vertex attaches to a uniform earlier one),
/// then each remaining pair with probability p.
Graph random_connected_graph(int n, double p, Rng& rng);
/// Each pair with probability p.
Graph random_graph(int n, double p, Rng& rng);

/// Runs work(i) for i in [0, count) on `jobs` threads and merges the
/// reports in index order. The first exception by index is rethrown.
SuiteReport parallel_reports(std::size_t count, int jobs, const std::function<SuiteReport(std::size_t)>& work);

}  // namespace forcekit
