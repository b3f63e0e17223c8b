#include "forcekit/graph.hpp"

#include <charconv>
#include <sstream>

namespace forcekit {

namespace {

void check_order(int order) {
  if (order < 1 || order > Graph::kMaxOrder) {
    throw GraphError("graph order " + std::to_string(order) + " outside [1, 63]");
  }
}

}  // namespace

Graph::Graph(int order) {
  check_order(order);
  adj_.assign(order, VertexSet{});
}

Graph::Graph(int order, std::span<const Edge> edges) : Graph(order) {
  for (const Edge& e : edges) {
    if (e.u < 0 || e.v < 0 || e.u >= order || e.v >= order) {
      throw GraphError("edge " + std::to_string(e.u) + " " + std::to_string(e.v) +
                       " has an index out of range");
    }
    if (e.u == e.v) throw GraphError("loop at vertex " + std::to_string(e.u));
    if (adj_[e.u].contains(e.v)) {
      throw GraphError("duplicate edge " + std::to_string(e.u) + " " + std::to_string(e.v));
    }
    adj_[e.u] = adj_[e.u].with(e.v);
    adj_[e.v] = adj_[e.v].with(e.u);
  }
}

int Graph::size() const {
  int twice = 0;
  for (VertexSet nb : adj_) twice += nb.size();
  return twice / 2;
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  for (int u = 0; u < order(); ++u) {
    for (int v : adj_[u] - VertexSet::first(u + 1)) out.push_back({u, v});
  }
  return out;
}

Graph disjoint_union(const Graph& a, const Graph& b) {
  const int n = a.order() + b.order();
  if (n > Graph::kMaxOrder) {
    throw GraphError("disjoint union would have " + std::to_string(n) + " vertices");
  }
  std::vector<Edge> edges = a.edges();
  for (Edge e : b.edges()) edges.push_back({e.u + a.order(), e.v + a.order()});
  return Graph(n, edges);
}

Graph induced_subgraph(const Graph& g, VertexSet keep) {
  keep &= g.vertices();
  std::vector<int> label(g.order(), -1);
  int next = 0;
  for (int v : keep) label[v] = next++;
  std::vector<Edge> edges;
  for (Edge e : g.edges()) {
    if (keep.contains(e.u) && keep.contains(e.v)) edges.push_back({label[e.u], label[e.v]});
  }
  return Graph(next, edges);
}

std::vector<VertexSet> components_within(const Graph& g, VertexSet white) {
  std::vector<VertexSet> blocks;
  VertexSet rest = white & g.vertices();
  while (!rest.empty()) {
    VertexSet block = VertexSet::single(rest.lowest());
    VertexSet frontier = block;
    while (!frontier.empty()) {
      VertexSet reach;
      for (int v : frontier) reach |= g.neighbors(v);
      frontier = (reach & rest) - block;
      block |= frontier;
    }
    blocks.push_back(block);
    rest -= block;
  }
  return blocks;
}

std::vector<VertexSet> connected_components(const Graph& g) {
  return components_within(g, g.vertices());
}

bool is_connected(const Graph& g) { return connected_components(g).size() == 1; }

bool is_tree(const Graph& g) { return g.size() == g.order() - 1 && is_connected(g); }

bool is_cycle(const Graph& g) {
  if (g.order() < 3) return false;
  for (int v = 0; v < g.order(); ++v) {
    if (g.degree(v) != 2) return false;
  }
  return is_connected(g);
}

bool is_complete(const Graph& g) { return g.size() == g.order() * (g.order() - 1) / 2; }

bool is_edgeless(const Graph& g) { return g.size() == 0; }

bool has_isolated_vertex(const Graph& g) {
  for (int v = 0; v < g.order(); ++v) {
    if (g.degree(v) == 0) return true;
  }
  return false;
}

bool is_module(const Graph& g, VertexSet set) {
  if (set.empty()) return true;
  const VertexSet outside = g.neighbors(set.lowest()) - set;
  for (int v : set) {
    if (g.neighbors(v) - set != outside) return false;
  }
  return true;
}

std::vector<ModulePair> find_modules_order2(const Graph& g) {
  std::vector<ModulePair> pairs;
  for (int u = 0; u < g.order(); ++u) {
    for (int v = u + 1; v < g.order(); ++v) {
      if (g.neighbors(u).without(v) == g.neighbors(v).without(u)) {
        pairs.push_back({u, v, g.adjacent(u, v)});
      }
    }
  }
  return pairs;
}

namespace {

class Tokenizer {
 public:
  explicit Tokenizer(std::string_view text) : text_(text) {}

  /// Advances to the next line; false at end of input.
  bool next_line() {
    if (pos_ >= text_.size()) return false;
    const auto end = text_.find('\n', pos_);
    line_ = text_.substr(pos_, end == std::string_view::npos ? std::string_view::npos : end - pos_);
    pos_ = end == std::string_view::npos ? text_.size() : end + 1;
    ++line_no_;
    return true;
  }

  bool line_blank() const { return line_.find_first_not_of(" \t\r") == std::string_view::npos; }

  std::vector<long> integers() const {
    std::vector<long> out;
    std::size_t i = 0;
    while (i < line_.size()) {
      while (i < line_.size() && (line_[i] == ' ' || line_[i] == '\t' || line_[i] == '\r')) ++i;
      if (i >= line_.size()) break;
      long value = 0;
      auto [ptr, ec] = std::from_chars(line_.data() + i, line_.data() + line_.size(), value);
      const std::size_t used = static_cast<std::size_t>(ptr - (line_.data() + i));
      if (ec != std::errc() || used == 0) {
        throw ParseError("line " + std::to_string(line_no_) + ": expected an integer");
      }
      i += used;
      if (i < line_.size() && line_[i] != ' ' && line_[i] != '\t' && line_[i] != '\r') {
        throw ParseError("line " + std::to_string(line_no_) + ": expected an integer");
      }
      out.push_back(value);
    }
    return out;
  }

  int line_no() const { return line_no_; }

 private:
  std::string_view text_;
  std::string_view line_;
  std::size_t pos_ = 0;
  int line_no_ = 0;
};

}  // namespace

Graph parse_graph(std::string_view text) {
  Tokenizer lines(text);
  std::vector<long> header;
  while (lines.next_line()) {
    if (lines.line_blank()) continue;
    header = lines.integers();
    break;
  }
  if (header.size() != 2) throw ParseError("malformed header: expected \"n m\"");
  const long n = header[0];
  const long m = header[1];
  if (n < 1 || n > Graph::kMaxOrder) {
    throw ParseError("malformed header: vertex count " + std::to_string(n) + " outside [1, 63]");
  }
  if (m < 0 || m > n * (n - 1) / 2) {
    throw ParseError("malformed header: edge count " + std::to_string(m) + " impossible");
  }

  std::vector<Edge> edges;
  while (static_cast<long>(edges.size()) < m && lines.next_line()) {
    if (lines.line_blank()) continue;
    const auto pair = lines.integers();
    const std::string where = "line " + std::to_string(lines.line_no()) + ": ";
    if (pair.size() != 2) throw ParseError(where + "expected \"u v\"");
    if (pair[0] < 0 || pair[1] < 0 || pair[0] >= n || pair[1] >= n) {
      throw ParseError(where + "vertex index out of range");
    }
    if (pair[0] == pair[1]) throw ParseError(where + "loop at vertex " + std::to_string(pair[0]));
    for (const Edge& e : edges) {
      if ((e.u == pair[0] && e.v == pair[1]) || (e.u == pair[1] && e.v == pair[0])) {
        throw ParseError(where + "duplicate edge");
      }
    }
    edges.push_back({static_cast<int>(pair[0]), static_cast<int>(pair[1])});
  }
  if (static_cast<long>(edges.size()) < m) {
    throw ParseError("header promises " + std::to_string(m) + " edges, found " +
                     std::to_string(edges.size()));
  }
  while (lines.next_line()) {
    if (!lines.line_blank()) throw ParseError("trailing content after the last edge");
  }
  return Graph(static_cast<int>(n), edges);
}

std::string serialize_graph(const Graph& g) {
  std::ostringstream out;
  out << g.order() << ' ' << g.size() << '\n';
  for (Edge e : g.edges()) out << e.u << ' ' << e.v << '\n';
  return out.str();
}

}  // namespace forcekit
