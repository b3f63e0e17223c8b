#pragma once

#include <cstdint>
#include <stdexcept>
#include <string_view>
#include <vector>

#include "forcekit/forcing.hpp"

namespace forcekit {

enum class ExtremalKind { MinForcing, MaxFailed };
enum class SearchMethod { FortSearch, SubsetSearch, BruteForce };

std::string_view to_string(ExtremalKind kind);
std::string_view to_string(SearchMethod method);

struct ExtremalResult {
  int value = 0;
  VertexSet witness;
  Rule rule = Rule::Standard;
  ExtremalKind kind = ExtremalKind::MinForcing;
  SearchMethod method = SearchMethod::SubsetSearch;
  /// Candidate sets examined.
  std::uint64_t nodes = 0;
};

inline constexpr std::uint64_t kDefaultNodeCap = 200'000'000;
inline constexpr int kBruteForceMaxOrder = 20;

struct SearchOptions {
  std::uint64_t node_cap = kDefaultNodeCap;
};

/// The search examined more candidate sets than SearchOptions::node_cap allows.
class BudgetExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Exhaustive oracles refuse graphs above kBruteForceMaxOrder vertices.
class SizeGuardExceeded : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Minimum forcing set by increasing cardinality, lexicographic within a
/// cardinality. A candidate is only extended by vertices outside the derived
/// coloring of its prefix, which never discards a minimum set.
ExtremalResult zero_forcing_number(const Graph& g, Rule rule, const SearchOptions& options = {});

/// Nonempty W whose complement is stalled. Standard: every vertex outside W
/// has 0 or >= 2 neighbors in W. PSD: the same holds against each connected
/// component of G[W] separately.
bool is_fort(const Graph& g, VertexSet w, Rule rule);

/// Lexicographically first minimum fort.
VertexSet min_fort(const Graph& g, Rule rule, const SearchOptions& options = {});

/// F = n - |min fort|, witness V \ min fort.
ExtremalResult failed_number(const Graph& g, Rule rule, const SearchOptions& options = {});

/// Scans all 2^n subsets; independent of the fort reformulation.
ExtremalResult brute_failed_number(const Graph& g, Rule rule);

/// Failed sets all of whose one-vertex extensions force, ascending by mask.
std::vector<VertexSet> enumerate_maximal_failed(const Graph& g, Rule rule);

/// Calls `visit` on every k-subset of {0..n-1} in lexicographic order until it returns false.
template <typename Visit>
void for_each_subset_lex(int n, int k, Visit&& visit) {
  if (k < 0 || k > n) return;
  if (k == 0) {
    visit(VertexSet{});
    return;
  }
  std::vector<int> idx(k);
  for (int i = 0; i < k; ++i) idx[i] = i;
  while (true) {
    VertexSet s;
    for (int v : idx) s = s.with(v);
    if (!visit(s)) return;
    int i = k - 1;
    while (i >= 0 && idx[i] == n - k + i) --i;
    if (i < 0) return;
    ++idx[i];
    for (int j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
  }
}

}  // namespace forcekit
