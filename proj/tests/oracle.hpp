#pragma once

// Naive reference implementations. They share nothing with the library
// beyond reading the edge list: adjacency lists, vectors of bools, and
// one-force-at-a-time propagation.

#include <cstdint>
#include <vector>

#include "forcekit/forcing.hpp"

namespace oracle {

using Coloring = std::vector<bool>;

struct Adjacency {
  int n = 0;
  std::vector<std::vector<int>> nb;

  explicit Adjacency(const forcekit::Graph& g) : n(g.order()), nb(g.order()) {
    for (const forcekit::Edge& e : g.edges()) {
      nb[e.u].push_back(e.v);
      nb[e.v].push_back(e.u);
    }
  }
};

inline Coloring from_mask(int n, std::uint64_t mask) {
  Coloring c(n);
  for (int i = 0; i < n; ++i) c[i] = (mask >> i) & 1U;
  return c;
}

inline std::uint64_t to_mask(const Coloring& c) {
  std::uint64_t m = 0;
  for (std::size_t i = 0; i < c.size(); ++i) {
    if (c[i]) m |= std::uint64_t{1} << i;
  }
  return m;
}

// Component label of every white vertex (-1 for blue), by depth-first search.
inline std::vector<int> white_components(const Adjacency& a, const Coloring& blue) {
  std::vector<int> label(a.n, -1);
  int next = 0;
  for (int s = 0; s < a.n; ++s) {
    if (blue[s] || label[s] != -1) continue;
    std::vector<int> stack = {s};
    label[s] = next;
    while (!stack.empty()) {
      const int u = stack.back();
      stack.pop_back();
      for (int w : a.nb[u]) {
        if (!blue[w] && label[w] == -1) {
          label[w] = next;
          stack.push_back(w);
        }
      }
    }
    ++next;
  }
  return label;
}

// Whether blue u may force white v under `rule` in coloring `blue`.
inline bool can_force(const Adjacency& a, const Coloring& blue, int u, int v, forcekit::Rule rule) {
  if (!blue[u] || blue[v]) return false;
  bool adjacent = false;
  for (int w : a.nb[u]) adjacent = adjacent || w == v;
  if (!adjacent) return false;
  std::vector<int> label;
  if (rule == forcekit::Rule::PositiveSemidefinite) label = white_components(a, blue);
  for (int w : a.nb[u]) {
    if (w == v || blue[w]) continue;
    if (rule == forcekit::Rule::Standard || label[w] == label[v]) return false;
  }
  return true;
}

// Applies single forces until none remains.
inline Coloring closure(const Adjacency& a, Coloring blue, forcekit::Rule rule) {
  bool changed = true;
  while (changed) {
    changed = false;
    for (int u = 0; u < a.n && !changed; ++u) {
      for (int v = 0; v < a.n && !changed; ++v) {
        if (can_force(a, blue, u, v, rule)) {
          blue[v] = true;
          changed = true;
        }
      }
    }
  }
  return blue;
}

inline bool forces_all(const Adjacency& a, std::uint64_t mask, forcekit::Rule rule) {
  const Coloring c = closure(a, from_mask(a.n, mask), rule);
  for (bool b : c) {
    if (!b) return false;
  }
  return true;
}

inline int zero_forcing_number(const forcekit::Graph& g, forcekit::Rule rule) {
  const Adjacency a(g);
  int best = a.n;
  for (std::uint64_t m = 0; m < (std::uint64_t{1} << a.n); ++m) {
    const int k = __builtin_popcountll(m);
    if (k < best && forces_all(a, m, rule)) best = k;
  }
  return best;
}

inline int failed_number(const forcekit::Graph& g, forcekit::Rule rule) {
  const Adjacency a(g);
  int best = -1;
  for (std::uint64_t m = 0; m < (std::uint64_t{1} << a.n); ++m) {
    const int k = __builtin_popcountll(m);
    if (k > best && !forces_all(a, m, rule)) best = k;
  }
  return best;
}

// Failed sets none of whose one-vertex extensions is failed, ascending.
inline std::vector<std::uint64_t> maximal_failed(const forcekit::Graph& g, forcekit::Rule rule) {
  const Adjacency a(g);
  std::vector<std::uint64_t> out;
  const std::uint64_t all = (std::uint64_t{1} << a.n) - 1;
  for (std::uint64_t m = 0; m <= all; ++m) {
    if (forces_all(a, m, rule)) continue;
    bool maximal = true;
    for (int v = 0; v < a.n && maximal; ++v) {
      if (!((m >> v) & 1U) && !forces_all(a, m | (std::uint64_t{1} << v), rule)) maximal = false;
    }
    if (maximal) out.push_back(m);
  }
  return out;
}

// Every force must be legal against the coloring at the start of its
// iteration; returns the final coloring or an empty vector on an illegal step.
inline Coloring replay(const forcekit::Graph& g, std::uint64_t start, const forcekit::ForcingTrace& trace,
                       forcekit::Rule rule) {
  const Adjacency a(g);
  Coloring blue = from_mask(a.n, start);
  Coloring round = blue;
  int iteration = 0;
  for (const forcekit::Force& f : trace) {
    if (f.iteration != iteration) {
      if (f.iteration != iteration + 1) return {};
      round = blue;
      iteration = f.iteration;
    }
    if (!can_force(a, round, f.forcer, f.forced, rule) || blue[f.forced]) return {};
    blue[f.forced] = true;
  }
  return blue;
}

// All pairs {u, v} with N(u) \ {v} == N(v) \ {u}.
inline bool same_outside(const Adjacency& a, int u, int v) {
  for (int w = 0; w < a.n; ++w) {
    if (w == u || w == v) continue;
    bool nu = false;
    bool nv = false;
    for (int x : a.nb[u]) nu = nu || x == w;
    for (int x : a.nb[v]) nv = nv || x == w;
    if (nu != nv) return false;
  }
  return true;
}

}  // namespace oracle
