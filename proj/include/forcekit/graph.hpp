#pragma once

#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "forcekit/vertex_set.hpp"

namespace forcekit {

struct Edge {
  int u = 0;
  int v = 0;
  friend bool operator==(const Edge&, const Edge&) = default;
};

/// Invalid graph construction: loops, duplicate edges, bad indices or sizes.
class GraphError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Malformed text input (edge lists and family strings).
class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Simple undirected graph on vertices 0..n-1 (1 <= n <= 63), stored as
/// per-vertex neighbor masks. Immutable once built.
class Graph {
 public:
  static constexpr int kMaxOrder = 63;

  /// Edgeless graph on `order` vertices.
  explicit Graph(int order);
  /// Throws GraphError on a loop, a repeated edge or an index out of range.
  Graph(int order, std::span<const Edge> edges);
  Graph(int order, std::initializer_list<Edge> edges)
      : Graph(order, std::span<const Edge>(edges.begin(), edges.size())) {}

  int order() const { return static_cast<int>(adj_.size()); }
  /// Number of edges.
  int size() const;

  VertexSet vertices() const { return VertexSet::first(order()); }
  VertexSet neighbors(int v) const { return adj_[v]; }
  int degree(int v) const { return adj_[v].size(); }
  bool adjacent(int u, int v) const { return adj_[u].contains(v); }

  /// Edges with u < v in lexicographic order.
  std::vector<Edge> edges() const;

  friend bool operator==(const Graph&, const Graph&) = default;

 private:
  std::vector<VertexSet> adj_;
};

/// Vertices of `b` are relabeled after those of `a`.
Graph disjoint_union(const Graph& a, const Graph& b);

/// Subgraph induced by `keep`, relabeled 0..|keep|-1 in ascending order.
Graph induced_subgraph(const Graph& g, VertexSet keep);

/// Blocks ordered by least vertex.
std::vector<VertexSet> connected_components(const Graph& g);

/// Connected components of G[white], ordered by least vertex.
std::vector<VertexSet> components_within(const Graph& g, VertexSet white);

bool is_connected(const Graph& g);
bool is_tree(const Graph& g);
/// Connected, 2-regular, n >= 3.
bool is_cycle(const Graph& g);
bool is_complete(const Graph& g);
bool is_edgeless(const Graph& g);
bool has_isolated_vertex(const Graph& g);

/// Every vertex of `set` has the same neighbors outside `set`.
bool is_module(const Graph& g, VertexSet set);

struct ModulePair {
  int u = 0;
  int v = 0;
  bool adjacent = false;
  friend bool operator==(const ModulePair&, const ModulePair&) = default;
};

/// All pairs u < v with N(u)\{v} = N(v)\{u}, in lexicographic order.
std::vector<ModulePair> find_modules_order2(const Graph& g);

/// Edge-list text: header "n m" followed by m lines "u v" (0-based).
Graph parse_graph(std::string_view text);
std::string serialize_graph(const Graph& g);

}  // namespace forcekit
