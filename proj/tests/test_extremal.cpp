#include <doctest.h>

#include <algorithm>

#include "forcekit/extremal.hpp"
#include "helpers.hpp"
#include "oracle.hpp"

using namespace forcekit;
using testing::fam;

namespace {

constexpr Rule kRules[] = {Rule::Standard, Rule::PositiveSemidefinite};
constexpr Rule kStd = Rule::Standard;
constexpr Rule kPsd = Rule::PositiveSemidefinite;

std::vector<std::uint64_t> masks(const std::vector<VertexSet>& sets) {
  std::vector<std::uint64_t> out;
  for (VertexSet s : sets) out.push_back(s.bits());
  return out;
}

}  // namespace

TEST_SUITE("extremal") {
  TEST_CASE("zero forcing numbers") {
    CHECK(zero_forcing_number(fam("path:7"), kStd).value == 1);
    CHECK(zero_forcing_number(fam("wheel:6"), kStd).value == 3);
    CHECK(zero_forcing_number(fam("biclique:3,2"), kPsd).value == 2);
    CHECK(zero_forcing_number(Graph(1), kStd).value == 1);
    CHECK(zero_forcing_number(fam("empty:4"), kPsd).value == 4);
    const ExtremalResult r = zero_forcing_number(fam("complete:5"), kStd);
    CHECK(r.value == 4);
    CHECK(r.witness == VertexSet{0, 1, 2, 3});
    CHECK(r.kind == ExtremalKind::MinForcing);
    CHECK(r.method == SearchMethod::SubsetSearch);
  }

  TEST_CASE("forts") {
    CHECK(min_fort(fam("cycle:5"), kStd).size() == 3);
    CHECK(min_fort(fam("complete:4"), kStd).size() == 2);
    CHECK(min_fort(fam("path:2"), kPsd).size() == 2);
    CHECK(is_fort(fam("cycle:4"), VertexSet{1, 3}, kStd));
    CHECK_FALSE(is_fort(fam("cycle:4"), VertexSet{1, 3}, kPsd));
    CHECK_FALSE(is_fort(fam("cycle:4"), VertexSet{}, kStd));
    CHECK(is_fort(fam("cycle:4"), VertexSet::first(4), kPsd));
  }

  TEST_CASE("forts are exactly complements of stalled sets") {
    Rng rng(17);
    for (int trial = 0; trial < 60; ++trial) {
      const int n = 1 + rng.index(7);
      const Graph g = testing::random_graph(n, rng.range(0.1, 0.8), rng);
      for (Rule rule : kRules) {
        for (std::uint64_t w = 1; w < (1ULL << n); ++w) {
          CHECK(is_fort(g, VertexSet(w), rule) == is_stalled(g, g.vertices() - VertexSet(w), rule));
        }
      }
    }
  }

  TEST_CASE("failed zero forcing numbers") {
    CHECK(failed_number(fam("wheel:5"), kStd).value == 3);
    CHECK(failed_number(fam("biclique:3,3"), kPsd).value == 2);
    CHECK(failed_number(fam("hypercube:2"), kPsd).value == 1);
    CHECK(failed_number(fam("path:1"), kStd).value == 0);
    const ExtremalResult r = failed_number(fam("cycle:6"), kStd);
    CHECK(r.kind == ExtremalKind::MaxFailed);
    CHECK(r.method == SearchMethod::FortSearch);
    CHECK(is_failed_set(fam("cycle:6"), r.witness, kStd));
    CHECK(r.witness.size() == r.value);
  }

  TEST_CASE("brute-force failed numbers") {
    CHECK(brute_failed_number(fam("path:4"), kStd).value == 1);
    CHECK(brute_failed_number(fam("cycle:6"), kPsd).value == 1);
    CHECK(brute_failed_number(fam("hypercube:3"), kStd).value == 5);
    CHECK(brute_failed_number(fam("hypercube:3"), kPsd).value == 4);
    CHECK(brute_failed_number(fam("path:4"), kStd).method == SearchMethod::BruteForce);
    CHECK_THROWS_AS(brute_failed_number(fam("path:21"), kStd), SizeGuardExceeded);
  }

  TEST_CASE("hypercube regression constants") {
    CHECK(failed_number(fam("hypercube:3"), kStd).value == 5);
    CHECK(failed_number(fam("hypercube:4"), kStd).value == 12);
    CHECK(failed_number(fam("hypercube:3"), kPsd).value == 4);
    CHECK(failed_number(fam("hypercube:4"), kPsd).value == 11);
  }

  TEST_CASE("node budget") {
    CHECK_THROWS_AS(zero_forcing_number(fam("hypercube:4"), kStd, {1}), BudgetExceeded);
    CHECK_THROWS_AS(failed_number(fam("hypercube:4"), kStd, {1}), BudgetExceeded);
    const ExtremalResult r = zero_forcing_number(fam("path:6"), kStd);
    CHECK(r.nodes >= 1);
    CHECK(zero_forcing_number(fam("path:6"), kStd, {r.nodes}).value == 1);
  }

  TEST_CASE("maximal failed sets") {
    CHECK(enumerate_maximal_failed(fam("empty:2"), kStd) == std::vector<VertexSet>{{0}, {1}});
    CHECK(enumerate_maximal_failed(fam("complete:3"), kStd) == std::vector<VertexSet>{{0}, {1}, {2}});
    const auto c4 = enumerate_maximal_failed(fam("cycle:4"), kStd);
    CHECK(std::find(c4.begin(), c4.end(), VertexSet{0, 2}) != c4.end());
    CHECK(std::find(c4.begin(), c4.end(), VertexSet{1, 3}) != c4.end());
    CHECK(enumerate_maximal_failed(fam("path:1"), kStd) == std::vector<VertexSet>{VertexSet{}});
  }

  TEST_CASE("searches agree with the naive oracle on random graphs") {
    Rng rng(23);
    for (int trial = 0; trial < 120; ++trial) {
      const int n = 1 + rng.index(9);
      const Graph g = testing::random_graph(n, rng.range(0.1, 0.8), rng);
      for (Rule rule : kRules) {
        const ExtremalResult z = zero_forcing_number(g, rule);
        const ExtremalResult f = failed_number(g, rule);
        CHECK(z.value == oracle::zero_forcing_number(g, rule));
        CHECK(f.value == oracle::failed_number(g, rule));
        CHECK(brute_failed_number(g, rule).value == f.value);
        CHECK(z.witness.size() == z.value);
        CHECK(is_forcing_set(g, z.witness, rule));
        CHECK(f.witness.size() == f.value);
        CHECK(is_failed_set(g, f.witness, rule));
        CHECK(n - min_fort(g, rule).size() == f.value);
        CHECK(masks(enumerate_maximal_failed(g, rule)) == oracle::maximal_failed(g, rule));
      }
    }
  }

  TEST_CASE("zero forcing witness is lexicographically first among minimum sets") {
    Rng rng(29);
    for (int trial = 0; trial < 40; ++trial) {
      const int n = 2 + rng.index(7);
      const Graph g = testing::random_graph(n, 0.4, rng);
      const ExtremalResult z = zero_forcing_number(g, kStd);
      VertexSet first;
      bool found = false;
      for_each_subset_lex(n, z.value, [&](VertexSet s) {
        if (is_forcing_set(g, s, kStd)) {
          first = s;
          found = true;
          return false;
        }
        return true;
      });
      REQUIRE(found);
      CHECK(z.witness == first);
    }
  }

  TEST_CASE("lexicographic subset enumeration") {
    std::vector<VertexSet> seen;
    for_each_subset_lex(4, 2, [&](VertexSet s) {
      seen.push_back(s);
      return true;
    });
    CHECK(seen == std::vector<VertexSet>{{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}});
    int count = 0;
    for_each_subset_lex(5, 0, [&](VertexSet s) {
      CHECK(s.empty());
      ++count;
      return true;
    });
    CHECK(count == 1);
    count = 0;
    for_each_subset_lex(3, 4, [&](VertexSet) { return ++count, true; });
    CHECK(count == 0);
  }
}
