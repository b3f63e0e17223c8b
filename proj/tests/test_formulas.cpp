#include <doctest.h>

#include "forcekit/formulas.hpp"
#include "forcekit/suites.hpp"
#include "helpers.hpp"
#include "oracle.hpp"

using namespace forcekit;

namespace {

FamilySpec spec(std::string_view text) { return parse_family(text); }

long table(std::string_view text, Parameter p) { return table51_value(spec(text), p).value; }

}  // namespace

TEST_SUITE("formulas") {
  TEST_CASE("standard closed forms") {
    CHECK(predicted_F(spec("wheel:7")).value == 4);
    CHECK(predicted_F(spec("biclique:3,1")).value == 2);
    const Prediction q3 = predicted_F(spec("hypercube:3"));
    CHECK(q3.value == 5);
    CHECK(q3.exactness == Exactness::LowerBound);
    CHECK(q3.agrees_with(5));
    CHECK(q3.agrees_with(7));
    CHECK_FALSE(q3.agrees_with(4));
    CHECK(predicted_F(spec("path:1")).value == 0);
    CHECK(predicted_F(spec("path:6")).value == 2);
    CHECK(predicted_F(spec("cycle:7")).value == 3);
    CHECK(predicted_F(spec("complete:5")).value == 3);
    CHECK(predicted_F(spec("wheel:5")).value == 3);
    CHECK(predicted_F(spec("wheel:4")).value == 2);
    CHECK(predicted_F(spec("halfgraph:1")).value == 0);
    CHECK(predicted_F(spec("halfgraph:4")).value == 5);
    CHECK(predicted_F(spec("hypercube:2")).value == 2);
    CHECK(predicted_F(spec("empty:5")).value == 4);
    CHECK(predicted_F(spec("marytree:2,7")).value == 5);
    CHECK(predicted_F(spec("marytree:2,4")).value == 1);
    CHECK(predicted_F(spec("complete:1")).value == 0);
    CHECK_THROWS_AS(predicted_F(spec("path:2+path:2")), OutsideHypotheses);
  }

  TEST_CASE("positive semidefinite closed forms") {
    CHECK(predicted_Fplus(spec("wheel:5")).value == 2);
    CHECK(predicted_Fplus(spec("biclique:4,2")).value == 3);
    CHECK(predicted_Fplus(spec("halfgraph:4")).value == 4);
    CHECK(predicted_Fplus(spec("marytree:3,13")).value == 0);
    CHECK(predicted_Fplus(spec("biclique:5,1")).value == 0);
    CHECK(predicted_Fplus(spec("biclique:4,4")).value == 4);
    CHECK(predicted_Fplus(spec("cycle:9")).value == 1);
    CHECK(predicted_Fplus(spec("hypercube:2")).value == 1);
    const Prediction q4 = predicted_Fplus(spec("hypercube:4"));
    CHECK(q4.value == 11);
    CHECK(q4.exactness == Exactness::LowerBound);
    CHECK(predicted_Fplus(spec("empty:3")).value == 2);
  }

  TEST_CASE("closed forms agree with the naive oracle on small instances") {
    for (const FamilySpec& s : default_family_instances(9)) {
      const Graph g = build_family(s);
      CAPTURE(to_string(s));
      CHECK(predicted_F(s).agrees_with(oracle::failed_number(g, Rule::Standard)));
      CHECK(predicted_Fplus(s).agrees_with(oracle::failed_number(g, Rule::PositiveSemidefinite)));
    }
  }

  TEST_CASE("maximum nullity table rows") {
    CHECK(table("cycle:6", Parameter::M) == 2);
    CHECK(table("cycle:6", Parameter::Z) == 2);
    CHECK(table("cycle:6", Parameter::Mplus) == 2);
    CHECK(table("cycle:6", Parameter::Zplus) == 2);
    CHECK(table("cycle:6", Parameter::mr) == 4);
    CHECK(table("cycle:6", Parameter::mrplus) == 4);

    CHECK(table("biclique:4,3", Parameter::M) == 5);
    CHECK(table("biclique:4,3", Parameter::Z) == 5);
    CHECK(table("biclique:4,3", Parameter::Mplus) == 3);
    CHECK(table("biclique:4,3", Parameter::Zplus) == 3);
    CHECK(table("biclique:4,3", Parameter::mr) == 2);
    CHECK(table("biclique:4,3", Parameter::mrplus) == 4);

    for (Parameter p : {Parameter::M, Parameter::Z, Parameter::Mplus, Parameter::Zplus, Parameter::mr, Parameter::mrplus}) {
      CHECK(table("hypercube:3", p) == 4);
    }

    CHECK(table("path:5", Parameter::mr) == 4);
    CHECK(table("complete:4", Parameter::mr) == 1);
    CHECK(table("wheel:6", Parameter::mr) == 3);
    CHECK(table("wheel:5", Parameter::mrplus) == 2);
    CHECK(table("halfgraph:4", Parameter::mrplus) == 4);
    CHECK(table("complete:1", Parameter::M) == 1);
    CHECK(table("biclique:1,1", Parameter::mr) == 1);
    CHECK(predicted_table51(spec("path:3")).size() == 6);
    CHECK_FALSE(in_table51(spec("marytree:2,7")));
    CHECK_FALSE(in_table51(spec("empty:3")));
    CHECK_THROWS_AS(table51_value(spec("marytree:2,7"), Parameter::M), OutsideHypotheses);
  }

  TEST_CASE("disconnected composition") {
    const ComponentValue c3p2[] = {{3, 1}, {2, 0}};
    CHECK(compose_disconnected(c3p2) == 3);
    const ComponentValue k1k1[] = {{1, 0}, {1, 0}};
    CHECK(compose_disconnected(k1k1) == 1);
    const ComponentValue single[] = {{7, 4}};
    CHECK(compose_disconnected(single) == 4);
    CHECK_THROWS_AS(compose_disconnected(std::span<const ComponentValue>{}), std::invalid_argument);
  }

  TEST_CASE("composition agrees with the naive oracle") {
    Rng rng(41);
    for (int trial = 0; trial < 40; ++trial) {
      const Graph a = testing::random_graph(1 + rng.index(5), 0.5, rng);
      const Graph b = testing::random_graph(1 + rng.index(5), 0.5, rng);
      for (Rule rule : {Rule::Standard, Rule::PositiveSemidefinite}) {
        const ComponentValue parts[] = {{a.order(), oracle::failed_number(a, rule)},
                                        {b.order(), oracle::failed_number(b, rule)}};
        CHECK(compose_disconnected(parts) == oracle::failed_number(disjoint_union(a, b), rule));
      }
    }
  }
}
