#pragma once

#include <string_view>

#include "forcekit/family.hpp"
#include "forcekit/random.hpp"

namespace testing {

inline forcekit::Graph fam(std::string_view text) { return forcekit::build_family(forcekit::parse_family(text)); }

// Uniform random graph, each pair independently with probability p.
inline forcekit::Graph random_graph(int n, double p, forcekit::Rng& rng) {
  std::vector<forcekit::Edge> edges;
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) {
      if (rng.unit() < p) edges.push_back({u, v});
    }
  }
  return forcekit::Graph(n, edges);
}

// Graph on n vertices whose edges are the set bits of `mask` over pairs (u<v) in lexicographic order.
inline forcekit::Graph graph_from_mask(int n, std::uint64_t mask) {
  std::vector<forcekit::Edge> edges;
  int bit = 0;
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v, ++bit) {
      if ((mask >> bit) & 1U) edges.push_back({u, v});
    }
  }
  return forcekit::Graph(n, edges);
}

}  // namespace testing
