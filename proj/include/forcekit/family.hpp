#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "forcekit/graph.hpp"

namespace forcekit {

enum class FamilyKind { Path, Cycle, Complete, Wheel, Biclique, Hypercube, HalfGraph, MaryTree, Empty, Union };

/// A named family instance such as "wheel:7", or a disjoint union of them
/// ("cycle:3+path:2").
///
/// Parameter arity: biclique takes (m, n), marytree takes (arity m, vertex
/// count n), every other single family takes one integer. A union keeps its
/// operands in `parts` and has no parameters.
struct FamilySpec {
  FamilyKind kind = FamilyKind::Path;
  std::vector<int> params;
  std::vector<FamilySpec> parts;

  static FamilySpec path(int n) { return {FamilyKind::Path, {n}, {}}; }
  static FamilySpec cycle(int n) { return {FamilyKind::Cycle, {n}, {}}; }
  static FamilySpec complete(int n) { return {FamilyKind::Complete, {n}, {}}; }
  static FamilySpec wheel(int n) { return {FamilyKind::Wheel, {n}, {}}; }
  static FamilySpec biclique(int m, int n) { return {FamilyKind::Biclique, {m, n}, {}}; }
  static FamilySpec hypercube(int n) { return {FamilyKind::Hypercube, {n}, {}}; }
  static FamilySpec halfgraph(int s) { return {FamilyKind::HalfGraph, {s}, {}}; }
  static FamilySpec marytree(int m, int n) { return {FamilyKind::MaryTree, {m, n}, {}}; }
  static FamilySpec empty(int n) { return {FamilyKind::Empty, {n}, {}}; }
  static FamilySpec disjoint(std::vector<FamilySpec> parts) { return {FamilyKind::Union, {}, std::move(parts)}; }

  bool is_union() const { return kind == FamilyKind::Union; }
  int param(std::size_t i) const { return params.at(i); }

  friend bool operator==(const FamilySpec&, const FamilySpec&) = default;
};

/// Raised when parameters are outside a generator's range.
class FamilyError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

std::string_view family_name(FamilyKind kind);

/// Parses the family DSL. Throws ParseError on syntax errors and FamilyError
/// on out-of-range parameters.
FamilySpec parse_family(std::string_view text);
std::string to_string(const FamilySpec& spec);

/// Vertex count of the instance, validating parameters.
int family_order(const FamilySpec& spec);

/// Canonical labeled instance:
///  - path/cycle: consecutive labels along the path or cycle;
///  - wheel W_n: rim cycle on 0..n-2, hub n-1;
///  - biclique K_{m,n}: parts {0..m-1} and {m..m+n-1};
///  - hypercube Q_n: labels adjacent iff they differ in exactly one bit;
///  - halfgraph H_s: parts {0..s-1}, {s..2s-1}, i ~ s+j iff i <= j;
///  - marytree(m, n): complete m-ary tree filled level by level, parent of k is (k-1)/m.
Graph build_family(const FamilySpec& spec);

Graph path_graph(int n);
Graph cycle_graph(int n);
Graph complete_graph(int n);
Graph wheel_graph(int n);
Graph biclique_graph(int m, int n);
Graph hypercube_graph(int dim);
Graph half_graph(int s);
Graph mary_tree(int arity, int n);
Graph empty_graph(int n);

}  // namespace forcekit
