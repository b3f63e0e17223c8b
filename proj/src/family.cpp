#include "forcekit/family.hpp"

#include <array>
#include <charconv>
#include <utility>

namespace forcekit {

namespace {

constexpr std::array<std::pair<FamilyKind, std::string_view>, 9> kNames{{
    {FamilyKind::Path, "path"},
    {FamilyKind::Cycle, "cycle"},
    {FamilyKind::Complete, "complete"},
    {FamilyKind::Wheel, "wheel"},
    {FamilyKind::Biclique, "biclique"},
    {FamilyKind::Hypercube, "hypercube"},
    {FamilyKind::HalfGraph, "halfgraph"},
    {FamilyKind::MaryTree, "marytree"},
    {FamilyKind::Empty, "empty"},
}};

std::size_t arity(FamilyKind kind) {
  return kind == FamilyKind::Biclique || kind == FamilyKind::MaryTree ? 2 : 1;
}

void require(bool ok, const FamilySpec& spec, std::string_view why) {
  if (!ok) throw FamilyError(to_string(spec) + ": " + std::string(why));
}

std::string_view trim(std::string_view s) {
  const auto b = s.find_first_not_of(" \t\r\n");
  if (b == std::string_view::npos) return {};
  const auto e = s.find_last_not_of(" \t\r\n");
  return s.substr(b, e - b + 1);
}

FamilySpec parse_single(std::string_view text) {
  text = trim(text);
  const auto colon = text.find(':');
  if (colon == std::string_view::npos) {
    throw ParseError("family \"" + std::string(text) + "\" lacks \":<params>\"");
  }
  const std::string_view name = trim(text.substr(0, colon));
  FamilySpec spec;
  bool known = false;
  for (const auto& [kind, label] : kNames) {
    if (label == name) {
      spec.kind = kind;
      known = true;
    }
  }
  if (!known) throw ParseError("unknown family \"" + std::string(name) + "\"");

  std::string_view rest = text.substr(colon + 1);
  while (true) {
    const auto comma = rest.find(',');
    const std::string_view item = trim(rest.substr(0, comma));
    int value = 0;
    auto [ptr, ec] = std::from_chars(item.data(), item.data() + item.size(), value);
    if (item.empty() || ec != std::errc() || ptr != item.data() + item.size()) {
      throw ParseError("bad parameter \"" + std::string(item) + "\" in \"" + std::string(text) + "\"");
    }
    spec.params.push_back(value);
    if (comma == std::string_view::npos) break;
    rest = rest.substr(comma + 1);
  }
  if (spec.params.size() != arity(spec.kind)) {
    throw ParseError(std::string(name) + " takes " + std::to_string(arity(spec.kind)) + " parameter(s)");
  }
  return spec;
}

void add_cycle_edges(std::vector<Edge>& edges, int first, int count) {
  for (int i = 0; i < count; ++i) edges.push_back({first + i, first + (i + 1) % count});
}

}  // namespace

std::string_view family_name(FamilyKind kind) {
  if (kind == FamilyKind::Union) return "union";
  for (const auto& [k, label] : kNames) {
    if (k == kind) return label;
  }
  return "?";
}

std::string to_string(const FamilySpec& spec) {
  std::string out;
  if (spec.is_union()) {
    for (std::size_t i = 0; i < spec.parts.size(); ++i) {
      if (i > 0) out += '+';
      out += to_string(spec.parts[i]);
    }
    return out;
  }
  out = std::string(family_name(spec.kind)) + ':';
  for (std::size_t i = 0; i < spec.params.size(); ++i) {
    if (i > 0) out += ',';
    out += std::to_string(spec.params[i]);
  }
  return out;
}

FamilySpec parse_family(std::string_view text) {
  std::vector<FamilySpec> parts;
  while (true) {
    const auto plus = text.find('+');
    parts.push_back(parse_single(text.substr(0, plus)));
    if (plus == std::string_view::npos) break;
    text = text.substr(plus + 1);
  }
  FamilySpec spec = parts.size() == 1 ? parts.front() : FamilySpec::disjoint(std::move(parts));
  family_order(spec);
  return spec;
}

int family_order(const FamilySpec& spec) {
  if (spec.is_union()) {
    require(!spec.parts.empty(), spec, "empty union");
    long total = 0;
    for (const auto& part : spec.parts) {
      require(!part.is_union(), spec, "nested unions are not supported");
      total += family_order(part);
    }
    require(total <= Graph::kMaxOrder, spec, "more than 63 vertices");
    return static_cast<int>(total);
  }
  require(spec.params.size() == arity(spec.kind), spec, "wrong number of parameters");
  const long a = spec.params[0];
  const long b = spec.params.size() > 1 ? spec.params[1] : 0;
  long order = 0;
  switch (spec.kind) {
    case FamilyKind::Path:
    case FamilyKind::Complete:
    case FamilyKind::Empty:
      require(a >= 1, spec, "needs n >= 1");
      order = a;
      break;
    case FamilyKind::Cycle:
      require(a >= 3, spec, "needs n >= 3");
      order = a;
      break;
    case FamilyKind::Wheel:
      require(a >= 4, spec, "needs n >= 4");
      order = a;
      break;
    case FamilyKind::Biclique:
      require(a >= 1 && b >= 1, spec, "needs m, n >= 1");
      order = a + b;
      break;
    case FamilyKind::Hypercube:
      require(a >= 1 && a <= 5, spec, "needs 1 <= n <= 5");
      order = 1L << a;
      break;
    case FamilyKind::HalfGraph:
      require(a >= 1, spec, "needs s >= 1");
      order = 2 * a;
      break;
    case FamilyKind::MaryTree:
      require(a >= 1 && b >= 1, spec, "needs arity m >= 1 and n >= 1");
      order = b;
      break;
    case FamilyKind::Union:
      break;
  }
  require(order <= Graph::kMaxOrder, spec, "more than 63 vertices");
  return static_cast<int>(order);
}

Graph path_graph(int n) {
  std::vector<Edge> edges;
  for (int i = 0; i + 1 < n; ++i) edges.push_back({i, i + 1});
  return Graph(n, edges);
}

Graph cycle_graph(int n) {
  if (n < 3) throw FamilyError("cycle needs n >= 3");
  std::vector<Edge> edges;
  add_cycle_edges(edges, 0, n);
  return Graph(n, edges);
}

Graph complete_graph(int n) {
  std::vector<Edge> edges;
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) edges.push_back({u, v});
  }
  return Graph(n, edges);
}

Graph wheel_graph(int n) {
  if (n < 4) throw FamilyError("wheel needs n >= 4");
  std::vector<Edge> edges;
  add_cycle_edges(edges, 0, n - 1);
  for (int i = 0; i < n - 1; ++i) edges.push_back({i, n - 1});
  return Graph(n, edges);
}

Graph biclique_graph(int m, int n) {
  if (m < 1 || n < 1) throw FamilyError("biclique needs m, n >= 1");
  std::vector<Edge> edges;
  for (int i = 0; i < m; ++i) {
    for (int j = 0; j < n; ++j) edges.push_back({i, m + j});
  }
  return Graph(m + n, edges);
}

Graph hypercube_graph(int dim) {
  if (dim < 1 || dim > 5) throw FamilyError("hypercube needs 1 <= n <= 5");
  const int n = 1 << dim;
  std::vector<Edge> edges;
  for (int v = 0; v < n; ++v) {
    for (int bit = 0; bit < dim; ++bit) {
      const int w = v ^ (1 << bit);
      if (v < w) edges.push_back({v, w});
    }
  }
  return Graph(n, edges);
}

Graph half_graph(int s) {
  if (s < 1) throw FamilyError("halfgraph needs s >= 1");
  std::vector<Edge> edges;
  for (int i = 0; i < s; ++i) {
    for (int j = i; j < s; ++j) edges.push_back({i, s + j});
  }
  return Graph(2 * s, edges);
}

Graph mary_tree(int arity, int n) {
  if (arity < 1) throw FamilyError("marytree needs arity >= 1");
  std::vector<Edge> edges;
  for (int k = 1; k < n; ++k) edges.push_back({(k - 1) / arity, k});
  return Graph(n, edges);
}

Graph empty_graph(int n) { return Graph(n); }

Graph build_family(const FamilySpec& spec) {
  family_order(spec);
  if (spec.is_union()) {
    Graph g = build_family(spec.parts.front());
    for (std::size_t i = 1; i < spec.parts.size(); ++i) g = disjoint_union(g, build_family(spec.parts[i]));
    return g;
  }
  const int a = spec.params[0];
  switch (spec.kind) {
    case FamilyKind::Path: return path_graph(a);
    case FamilyKind::Cycle: return cycle_graph(a);
    case FamilyKind::Complete: return complete_graph(a);
    case FamilyKind::Wheel: return wheel_graph(a);
    case FamilyKind::Biclique: return biclique_graph(a, spec.params[1]);
    case FamilyKind::Hypercube: return hypercube_graph(a);
    case FamilyKind::HalfGraph: return half_graph(a);
    case FamilyKind::MaryTree: return mary_tree(a, spec.params[1]);
    case FamilyKind::Empty: return empty_graph(a);
    case FamilyKind::Union: break;
  }
  throw FamilyError("unhandled family");
}

}  // namespace forcekit
