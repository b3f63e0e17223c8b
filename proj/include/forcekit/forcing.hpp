#pragma once

#include <string_view>
#include <vector>

#include "forcekit/graph.hpp"

namespace forcekit {

enum class Rule { Standard, PositiveSemidefinite };

std::string_view to_string(Rule rule);

/// One color change u -> v made during `iteration` (0-based).
struct Force {
  int forcer = 0;
  int forced = 0;
  int iteration = 0;
  friend bool operator==(const Force&, const Force&) = default;
};

/// Forces in iteration order; within an iteration, ordered by forced vertex.
using ForcingTrace = std::vector<Force>;

struct StepResult {
  VertexSet blue;
  std::vector<Force> forces;
};

/// One synchronous application of the color-change rule.
///
/// Standard: white v turns blue when some blue u has v as its only white
/// neighbor. Positive semidefinite: the same test is made separately inside
/// each connected component of the white subgraph. All forces are computed
/// against the coloring before the step; when several vertices can force v
/// the least-index forcer is recorded.
StepResult step(const Graph& g, VertexSet blue, Rule rule, int iteration = 0);

/// `step` without recording forces.
VertexSet step_set(const Graph& g, VertexSet blue, Rule rule);

struct Closure {
  VertexSet derived;
  ForcingTrace trace;
  int iterations = 0;
};

/// Iterates `step` to the fixpoint (the derived coloring).
Closure closure(const Graph& g, VertexSet blue, Rule rule);

/// Derived coloring only.
VertexSet derived_set(const Graph& g, VertexSet blue, Rule rule);

bool is_forcing_set(const Graph& g, VertexSet s, Rule rule);
bool is_failed_set(const Graph& g, VertexSet s, Rule rule);

/// Proper subset from which no color change is possible. V itself is never stalled.
bool is_stalled(const Graph& g, VertexSet s, Rule rule);

}  // namespace forcekit
