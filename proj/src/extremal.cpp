#include "forcekit/extremal.hpp"

#include <string>

namespace forcekit {

namespace {

class NodeCounter {
 public:
  explicit NodeCounter(std::uint64_t cap) : cap_(cap) {}
  void tick() {
    if (++nodes_ > cap_) {
      throw BudgetExceeded("search budget of " + std::to_string(cap_) + " nodes exceeded");
    }
  }
  std::uint64_t nodes() const { return nodes_; }

 private:
  std::uint64_t cap_;
  std::uint64_t nodes_ = 0;
};

void guard_order(const Graph& g, std::string_view what) {
  if (g.order() > kBruteForceMaxOrder) {
    throw SizeGuardExceeded(std::string(what) + " is limited to " + std::to_string(kBruteForceMaxOrder) +
                            " vertices, graph has " + std::to_string(g.order()));
  }
}

// Depth-first extension in lexicographic order. `derived` is the derived
// coloring of `chosen`.
bool extend_to_forcing(const Graph& g, Rule rule, int slots, int next, VertexSet chosen, VertexSet derived,
                       NodeCounter& counter, VertexSet& witness) {
  if (slots == 0) {
    if (derived == g.vertices()) {
      witness = chosen;
      return true;
    }
    return false;
  }
  const int n = g.order();
  for (int v = next; v <= n - slots; ++v) {
    if (derived.contains(v)) continue;
    counter.tick();
    const VertexSet grown = derived_set(g, derived.with(v), rule);
    if (extend_to_forcing(g, rule, slots - 1, v + 1, chosen.with(v), grown, counter, witness)) return true;
  }
  return false;
}

}  // namespace

bool is_fort(const Graph& g, VertexSet w, Rule rule) {
  w &= g.vertices();
  if (w.empty()) return false;
  const VertexSet outside = g.vertices() - w;
  if (rule == Rule::Standard) {
    for (int u : outside) {
      if ((g.neighbors(u) & w).size() == 1) return false;
    }
    return true;
  }
  for (VertexSet part : components_within(g, w)) {
    for (int u : outside) {
      if ((g.neighbors(u) & part).size() == 1) return false;
    }
  }
  return true;
}

namespace {

VertexSet first_min_fort(const Graph& g, Rule rule, NodeCounter& counter) {
  const int n = g.order();
  for (int k = 1; k <= n; ++k) {
    VertexSet found;
    bool hit = false;
    for_each_subset_lex(n, k, [&](VertexSet w) {
      counter.tick();
      if (is_fort(g, w, rule)) {
        found = w;
        hit = true;
      }
      return !hit;
    });
    if (hit) return found;
  }
  // V is a fort whenever nothing smaller is: the empty set never forces.
  return g.vertices();
}

}  // namespace

std::string_view to_string(ExtremalKind kind) {
  return kind == ExtremalKind::MinForcing ? "min-forcing" : "max-failed";
}

std::string_view to_string(SearchMethod method) {
  switch (method) {
    case SearchMethod::FortSearch: return "fort-search";
    case SearchMethod::SubsetSearch: return "subset-search";
    case SearchMethod::BruteForce: return "brute-force";
  }
  return "?";
}

ExtremalResult zero_forcing_number(const Graph& g, Rule rule, const SearchOptions& options) {
  NodeCounter counter(options.node_cap);
  for (int k = 1; k <= g.order(); ++k) {
    VertexSet witness;
    if (extend_to_forcing(g, rule, k, 0, {}, {}, counter, witness)) {
      return {k, witness, rule, ExtremalKind::MinForcing, SearchMethod::SubsetSearch, counter.nodes()};
    }
  }
  // Unreachable: V is always forcing.
  return {g.order(), g.vertices(), rule, ExtremalKind::MinForcing, SearchMethod::SubsetSearch, counter.nodes()};
}

VertexSet min_fort(const Graph& g, Rule rule, const SearchOptions& options) {
  NodeCounter counter(options.node_cap);
  return first_min_fort(g, rule, counter);
}

ExtremalResult failed_number(const Graph& g, Rule rule, const SearchOptions& options) {
  NodeCounter counter(options.node_cap);
  const VertexSet fort = first_min_fort(g, rule, counter);
  return {g.order() - fort.size(), g.vertices() - fort, rule, ExtremalKind::MaxFailed, SearchMethod::FortSearch,
          counter.nodes()};
}

ExtremalResult brute_failed_number(const Graph& g, Rule rule) {
  guard_order(g, "brute_failed_number");
  const std::uint64_t total = std::uint64_t{1} << g.order();
  ExtremalResult best{-1, {}, rule, ExtremalKind::MaxFailed, SearchMethod::BruteForce, 0};
  for (std::uint64_t mask = 0; mask < total; ++mask) {
    const VertexSet s(mask);
    ++best.nodes;
    if (s.size() > best.value && is_failed_set(g, s, rule)) {
      best.value = s.size();
      best.witness = s;
    }
  }
  return best;
}

std::vector<VertexSet> enumerate_maximal_failed(const Graph& g, Rule rule) {
  guard_order(g, "enumerate_maximal_failed");
  const std::uint64_t total = std::uint64_t{1} << g.order();
  std::vector<bool> forcing(total);
  for (std::uint64_t mask = 0; mask < total; ++mask) forcing[mask] = is_forcing_set(g, VertexSet(mask), rule);

  std::vector<VertexSet> maximal;
  for (std::uint64_t mask = 0; mask < total; ++mask) {
    if (forcing[mask]) continue;
    bool is_max = true;
    for (int v : g.vertices() - VertexSet(mask)) {
      if (!forcing[mask | (std::uint64_t{1} << v)]) {
        is_max = false;
        break;
      }
    }
    if (is_max) maximal.push_back(VertexSet(mask));
  }
  return maximal;
}

}  // namespace forcekit
