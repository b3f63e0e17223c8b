#include "forcekit/forcing.hpp"

#include <algorithm>
#include <array>

namespace forcekit {

namespace {

// Writes into `forcer_of[v]` the least blue vertex able to force v, or -1.
// Returns the set of forced vertices.
template <bool kRecord>
VertexSet forced_vertices(const Graph& g, VertexSet blue, Rule rule, std::array<int, 64>& forcer_of) {
  const VertexSet white = g.vertices() - blue;
  VertexSet forced;
  if (white.empty()) return forced;

  auto try_part = [&](int u, VertexSet part) {
    const VertexSet seen = g.neighbors(u) & part;
    if (seen.is_singleton()) {
      const int v = seen.lowest();
      if constexpr (kRecord) {
        if (!forced.contains(v)) forcer_of[v] = u;
      }
      forced |= seen;
    }
  };

  if (rule == Rule::Standard) {
    for (int u : blue) try_part(u, white);
    return forced;
  }

  const auto parts = components_within(g, white);
  for (int u : blue) {
    const VertexSet nb = g.neighbors(u);
    if (!nb.intersects(white)) continue;
    for (VertexSet part : parts) {
      if (nb.intersects(part)) try_part(u, part);
    }
  }
  return forced;
}

}  // namespace

std::string_view to_string(Rule rule) {
  return rule == Rule::Standard ? "standard" : "psd";
}

StepResult step(const Graph& g, VertexSet blue, Rule rule, int iteration) {
  std::array<int, 64> forcer_of{};
  const VertexSet forced = forced_vertices<true>(g, blue, rule, forcer_of);
  StepResult result{blue | forced, {}};
  for (int v : forced) result.forces.push_back({forcer_of[v], v, iteration});
  return result;
}

VertexSet step_set(const Graph& g, VertexSet blue, Rule rule) {
  std::array<int, 64> unused;
  return blue | forced_vertices<false>(g, blue, rule, unused);
}

Closure closure(const Graph& g, VertexSet blue, Rule rule) {
  Closure result{blue, {}, 0};
  while (true) {
    StepResult next = step(g, result.derived, rule, result.iterations);
    if (next.forces.empty()) break;
    result.trace.insert(result.trace.end(), next.forces.begin(), next.forces.end());
    result.derived = next.blue;
    ++result.iterations;
  }
  return result;
}

VertexSet derived_set(const Graph& g, VertexSet blue, Rule rule) {
  while (true) {
    const VertexSet next = step_set(g, blue, rule);
    if (next == blue) return blue;
    blue = next;
  }
}

bool is_forcing_set(const Graph& g, VertexSet s, Rule rule) {
  return derived_set(g, s, rule) == g.vertices();
}

bool is_failed_set(const Graph& g, VertexSet s, Rule rule) { return !is_forcing_set(g, s, rule); }

bool is_stalled(const Graph& g, VertexSet s, Rule rule) {
  return s != g.vertices() && step_set(g, s, rule) == s;
}

}  // namespace forcekit
