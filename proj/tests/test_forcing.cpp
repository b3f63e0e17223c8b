#include <doctest.h>

#include "forcekit/forcing.hpp"
#include "helpers.hpp"
#include "oracle.hpp"

using namespace forcekit;
using testing::fam;

namespace {

constexpr Rule kRules[] = {Rule::Standard, Rule::PositiveSemidefinite};

}  // namespace

TEST_SUITE("forcing") {
  TEST_CASE("single steps") {
    const Graph p3 = fam("path:3");
    const StepResult a = step(p3, VertexSet{0}, Rule::Standard);
    CHECK(a.blue == VertexSet{0, 1});
    CHECK(a.forces == std::vector<Force>{{0, 1, 0}});

    CHECK(step_set(fam("cycle:4"), VertexSet{0}, Rule::Standard) == VertexSet{0});

    const StepResult b = step(p3, VertexSet{1}, Rule::PositiveSemidefinite, 4);
    CHECK(b.blue == VertexSet{0, 1, 2});
    CHECK(b.forces == std::vector<Force>{{1, 0, 4}, {1, 2, 4}});
    CHECK(step_set(p3, VertexSet{1}, Rule::Standard) == VertexSet{1});
  }

  TEST_CASE("least-index forcer is recorded") {
    // In K_3 with {0,1} blue, both 0 and 1 can force 2.
    const StepResult r = step(fam("complete:3"), VertexSet{0, 1}, Rule::Standard);
    CHECK(r.forces == std::vector<Force>{{0, 2, 0}});
  }

  TEST_CASE("closures") {
    const Closure p5 = closure(fam("path:5"), VertexSet{0}, Rule::Standard);
    CHECK(p5.derived == VertexSet::first(5));
    CHECK(p5.trace.size() == 4);
    CHECK(p5.iterations == 4);

    const Graph c5 = fam("cycle:5");
    for (int v = 0; v < 5; ++v) CHECK(derived_set(c5, VertexSet::single(v), Rule::PositiveSemidefinite) == VertexSet::single(v));
    for (int u = 0; u < 5; ++u) {
      for (int v = u + 1; v < 5; ++v) CHECK(is_forcing_set(c5, VertexSet{u, v}, Rule::PositiveSemidefinite));
    }
  }

  TEST_CASE("forcing and failed sets") {
    const Graph k3 = fam("complete:3");
    CHECK(is_failed_set(k3, VertexSet{}, Rule::Standard));
    CHECK(is_forcing_set(k3, VertexSet{0, 1}, Rule::Standard));
    CHECK(is_failed_set(fam("empty:2"), VertexSet{0}, Rule::Standard));
    CHECK(is_failed_set(fam("empty:2"), VertexSet{0}, Rule::PositiveSemidefinite));
  }

  TEST_CASE("stalled sets") {
    const Graph c4 = fam("cycle:4");
    CHECK(is_stalled(c4, VertexSet{0, 2}, Rule::Standard));
    CHECK_FALSE(is_stalled(c4, VertexSet{0, 2}, Rule::PositiveSemidefinite));
    CHECK_FALSE(is_stalled(fam("path:2"), VertexSet{0}, Rule::Standard));
    CHECK_FALSE(is_stalled(c4, VertexSet::first(4), Rule::Standard));
    CHECK(is_stalled(c4, VertexSet{}, Rule::Standard));
  }

  TEST_CASE("closure matches the one-force-at-a-time oracle and its trace replays") {
    Rng rng(3);
    for (int trial = 0; trial < 400; ++trial) {
      const int n = 1 + rng.index(10);
      const Graph g = testing::random_graph(n, rng.range(0.1, 0.7), rng);
      const oracle::Adjacency a(g);
      const std::uint64_t start = static_cast<std::uint64_t>(rng.unit() * static_cast<double>(1ULL << n));
      for (Rule rule : kRules) {
        const Closure c = closure(g, VertexSet(start), rule);
        CHECK(c.derived.bits() == oracle::to_mask(oracle::closure(a, oracle::from_mask(n, start), rule)));
        const oracle::Coloring replayed = oracle::replay(g, start, c.trace, rule);
        REQUIRE_FALSE(replayed.empty());
        CHECK(oracle::to_mask(replayed) == c.derived.bits());
        CHECK(static_cast<int>(c.trace.size()) == c.derived.size() - VertexSet(start).size());
      }
    }
  }

  TEST_CASE("closure properties: extensive, idempotent, monotone, PSD dominates standard") {
    Rng rng(5);
    for (int trial = 0; trial < 300; ++trial) {
      const int n = 2 + rng.index(9);
      const Graph g = testing::random_graph(n, rng.range(0.1, 0.7), rng);
      const VertexSet s(static_cast<std::uint64_t>(rng.unit() * static_cast<double>(1ULL << n)));
      const VertexSet t = s.with(rng.index(n));
      for (Rule rule : kRules) {
        const VertexSet d = derived_set(g, s, rule);
        CHECK(d.includes(s));
        CHECK(derived_set(g, d, rule) == d);
        CHECK(derived_set(g, t, rule).includes(d));
        // Observation: a derived coloring is stalled unless it is all of V.
        CHECK((d == g.vertices() || is_stalled(g, d, rule)));
      }
      CHECK(derived_set(g, s, Rule::PositiveSemidefinite).includes(derived_set(g, s, Rule::Standard)));
    }
  }

  TEST_CASE("steps never change blue vertices and are deterministic") {
    Rng rng(9);
    for (int trial = 0; trial < 200; ++trial) {
      const int n = 2 + rng.index(9);
      const Graph g = testing::random_graph(n, 0.4, rng);
      const VertexSet s(static_cast<std::uint64_t>(rng.unit() * static_cast<double>(1ULL << n)));
      for (Rule rule : kRules) {
        const StepResult a = step(g, s, rule);
        const StepResult b = step(g, s, rule);
        CHECK(a.blue == b.blue);
        CHECK(a.forces == b.forces);
        CHECK(a.blue.includes(s));
        for (const Force& f : a.forces) {
          CHECK(s.contains(f.forcer));
          CHECK_FALSE(s.contains(f.forced));
        }
      }
    }
  }
}
