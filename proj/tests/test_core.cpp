#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>

#include "fixtures.hpp"
#include "generators.hpp"
#include "oracles.hpp"
#include "pgp/errors.hpp"
#include "pgp/graph_ops.hpp"
#include "pgp/pgraph.hpp"

using namespace pgp;

TEST_CASE("labels order by kind then name") {
  CHECK(act("u1") < act("u2"));
  CHECK(act("zz") < obs("aa"));  // actions sort before observations
  CHECK(act("u1") == act("u1"));
  CHECK(act("u1") != obs("u1"));
  CHECK(to_string(act("u1")) == "u1");
  CHECK(to_string(Execution{act("u1"), obs("y1")}) == "u1.y1");
}

TEST_CASE("parallel edges merge into one label set") {
  PGraph g;
  g.add_vertex("a", Kind::Action);
  g.add_vertex("b", Kind::Observation);
  g.initial = {"a"};
  g.add_edge("a", "b", act("u1"));
  g.add_edge("a", "b", act("u2"));
  REQUIRE(g.edges.size() == 1);
  CHECK(g.edges.begin()->second == std::set<Label>{act("u1"), act("u2")});
  CHECK(g.out_labels("a") == std::set<Label>{act("u1"), act("u2")});
  CHECK(g.successors("a", act("u1")) == std::set<std::string>{"b"});
  CHECK(g.successors("a", act("u3")).empty());
}

TEST_CASE("add_edge rejects unknown endpoints and empty label sets") {
  PGraph g;
  g.add_vertex("a", Kind::Action);
  CHECK_THROWS_AS(g.add_edge("a", "nope", act("u1")), Error);
  CHECK_THROWS_AS(g.add_edge("nope", "a", act("u1")), Error);
  CHECK_THROWS_AS(g.add_edge("a", "a", std::set<Label>{}), Error);
  CHECK_THROWS_AS(g.kind_of("nope"), Error);
}

TEST_CASE("validate reports structural findings by code") {
  auto codes = [](const PGraph& g) {
    std::set<std::string> out;
    for (const auto& f : validate(g).findings) out.insert(f.code);
    return out;
  };

  SUBCASE("well-formed world is clean") {
    CHECK(validate(fixtures::wheelchair_fixture().problem.world).ok());
  }
  SUBCASE("empty initial set") {
    PGraph g;
    g.add_vertex("a", Kind::Action);
    CHECK(codes(g).contains("empty-initial"));
  }
  SUBCASE("initial id that is no vertex") {
    PGraph g;
    g.add_vertex("a", Kind::Action);
    g.initial = {"ghost"};
    CHECK(codes(g).contains("dangling-initial"));
  }
  SUBCASE("edge labels must match the source kind") {
    PGraph g;
    g.add_vertex("a", Kind::Action);
    g.add_vertex("b", Kind::Observation);
    g.initial = {"a"};
    g.add_edge("a", "b", obs("y1"));
    CHECK(codes(g) == std::set<std::string>{"kind-mismatch"});
  }
  SUBCASE("one name as both action and observation") {
    PGraph g;
    g.add_vertex("a", Kind::Action);
    g.add_vertex("b", Kind::Observation);
    g.initial = {"a"};
    g.add_edge("a", "b", act("x"));
    g.add_edge("b", "a", obs("x"));
    CHECK(codes(g).contains("label-kind-clash"));
  }
}

TEST_CASE("state determinism needs one initial vertex and one successor per label") {
  PGraph g;
  g.add_vertex("a", Kind::Action);
  g.add_vertex("b", Kind::Observation);
  g.add_vertex("c", Kind::Observation);
  g.initial = {"a"};
  g.add_edge("a", "b", act("u1"));
  CHECK(is_state_determined(g));

  SUBCASE("second initial vertex breaks it") {
    g.initial.insert("b");
    CHECK_FALSE(is_state_determined(g));
  }
  SUBCASE("same label to two targets breaks it") {
    g.add_edge("a", "c", act("u1"));
    CHECK_FALSE(is_state_determined(g));
  }
  SUBCASE("distinct labels to two targets is fine") {
    g.add_edge("a", "c", act("u2"));
    CHECK(is_state_determined(g));
  }
}

TEST_CASE("reached vertices and language membership") {
  auto problem = fixtures::solvable_problem();
  const PGraph& w = problem.world;
  CHECK(reached_vertices(w, {}) == std::set<std::string>{"a0"});
  CHECK(reached_vertices(w, {act("u1")}) == std::set<std::string>{"o0"});
  CHECK(reached_vertices(w, {act("u1"), obs("y2"), act("u2"), obs("y3")}) ==
        std::set<std::string>{"g"});
  CHECK(reached_vertices(w, {act("u2")}).empty());
  CHECK(language_contains(w, {act("u1"), obs("y1")}));
  CHECK_FALSE(language_contains(w, {act("u1"), obs("y3")}));
}

TEST_CASE("language enumeration agrees with the path-walking oracle") {
  SUBCASE("fixtures") {
    for (const PGraph& g :
         {fixtures::solvable_problem().world, fixtures::loop_problem().world,
          fixtures::backloop_problem().world, fixtures::wheelchair_fixture().problem.world,
          fixtures::wheelchair_fixture().filter}) {
      for (int depth : {0, 1, 3, 6})
        CHECK(language_upto(g, depth) == oracles::language(g, depth));
    }
  }
  SUBCASE("graph with no initial vertex has an empty language") {
    PGraph g;
    g.add_vertex("a", Kind::Action);
    CHECK(language_upto(g, 4).empty());
    CHECK_FALSE(language_contains(g, {}));
  }
  SUBCASE("random graphs") {
    for (std::uint64_t seed = 1; seed <= 60; ++seed) {
      PGraph g = generators::random_graph(seed);
      CHECK(language_upto(g, 5) == oracles::language(g, 5));
    }
  }
}

TEST_CASE("subset expansion is state-determined and keeps the language") {
  SUBCASE("nondeterministic two-way split") {
    PGraph g;
    g.add_vertex("a", Kind::Action);
    g.add_vertex("b", Kind::Observation);
    g.add_vertex("c", Kind::Observation);
    g.initial = {"a"};
    g.add_edge("a", "b", act("u1"));
    g.add_edge("a", "c", act("u1"));
    g.add_edge("b", "a", obs("y1"));

    SdeResult sde = to_state_determined(g);
    CHECK(is_state_determined(sde.graph));
    CHECK(sde.graph.initial == std::set<std::string>{"a"});
    REQUIRE(sde.members.contains("{b,c}"));
    CHECK(sde.members.at("{b,c}") == std::set<std::string>{"b", "c"});
    CHECK(sde.mixed_kind_subsets.empty());
    for (int depth : {0, 2, 5})
      CHECK(language_upto(sde.graph, depth) == language_upto(g, depth));
  }
  SUBCASE("multiple initial vertices fold into one subset") {
    PGraph g;
    g.add_vertex("a", Kind::Action);
    g.add_vertex("b", Kind::Action);
    g.initial = {"a", "b"};
    SdeResult sde = to_state_determined(g);
    CHECK(sde.graph.initial == std::set<std::string>{"{a,b}"});
    CHECK(is_state_determined(sde.graph));
  }
  SUBCASE("mixed-kind subsets are recorded") {
    PGraph g;
    g.add_vertex("a", Kind::Action);
    g.add_vertex("b", Kind::Observation);
    g.initial = {"a", "b"};
    SdeResult sde = to_state_determined(g);
    CHECK(sde.mixed_kind_subsets == std::set<std::string>{"{a,b}"});
  }
  SUBCASE("empty initial set expands to an empty graph") {
    PGraph g;
    g.add_vertex("a", Kind::Action);
    SdeResult sde = to_state_determined(g);
    CHECK(sde.graph.vertices.empty());
    CHECK(sde.graph.initial.empty());
  }
  SUBCASE("random graphs keep their language to depth 8") {
    for (std::uint64_t seed = 1; seed <= 60; ++seed) {
      PGraph g = generators::random_graph(seed);
      SdeResult sde = to_state_determined(g);
      CHECK(is_state_determined(sde.graph));
      CHECK(language_upto(sde.graph, 8) == language_upto(g, 8));
    }
  }
}

TEST_CASE("disjoint union takes the union of the languages") {
  PGraph a = fixtures::solvable_problem().world;
  PGraph b = fixtures::dead_leaf_problem().world;
  PGraph u = disjoint_union(a, b);
  for (const auto& [id, kind] : u.vertices)
    CHECK((id.starts_with("u0:") || id.starts_with("u1:")));
  for (int depth : {0, 2, 5}) {
    std::set<Execution> expected = language_upto(a, depth);
    auto lb = language_upto(b, depth);
    expected.insert(lb.begin(), lb.end());
    CHECK(language_upto(u, depth) == expected);
  }

  SUBCASE("n-ary and random") {
    for (std::uint64_t seed = 1; seed <= 40; ++seed) {
      PGraph x = generators::random_graph(seed);
      PGraph y = generators::random_graph(seed + 1000);
      std::set<Execution> expected = language_upto(x, 5);
      auto ly = language_upto(y, 5);
      expected.insert(ly.begin(), ly.end());
      CHECK(language_upto(disjoint_union(x, y), 5) == expected);
    }
  }
}

TEST_CASE("product takes the intersection of the languages") {
  SUBCASE("world against its own plan") {
    auto problem = fixtures::solvable_problem();
    auto plan = fixtures::solvable_plan();
    ProductResult prod = product(problem.world, plan.graph);
    for (int depth : {0, 2, 5}) {
      std::set<Execution> expected;
      auto lw = language_upto(problem.world, depth);
      for (const auto& s : language_upto(plan.graph, depth))
        if (lw.contains(s)) expected.insert(s);
      CHECK(language_upto(prod.graph, depth) == expected);
    }
    REQUIRE(prod.pairs.contains("(a0,n0)"));
    CHECK(prod.pairs.at("(a0,n0)") == std::pair<std::string, std::string>{"a0", "n0"});
    CHECK(prod.kind_clashes.empty());
  }
  SUBCASE("mixed-kind pairs are reported but still synchronize by label") {
    PGraph a;
    a.add_vertex("x", Kind::Action);
    a.add_vertex("x2", Kind::Observation);
    a.initial = {"x"};
    a.add_edge("x", "x2", act("u1"));
    // b's root is declared an observation yet emits an action label, the way
    // a subset expansion of a lifted filter can
    PGraph b;
    b.add_vertex("y", Kind::Observation);
    b.add_vertex("y2", Kind::Observation);
    b.initial = {"y"};
    b.add_edge("y", "y2", act("u1"));
    ProductResult prod = product(a, b);
    CHECK(prod.kind_clashes == std::set<std::string>{"(x,y)"});
    CHECK(language_upto(prod.graph, 3) == std::set<Execution>{{}, {act("u1")}});
  }
  SUBCASE("random graphs intersect to depth 8") {
    for (std::uint64_t seed = 1; seed <= 40; ++seed) {
      PGraph x = generators::random_graph(seed);
      PGraph y = generators::random_graph(seed + 500);
      ProductResult prod = product(x, y);
      std::set<Execution> expected;
      auto ly = language_upto(y, 8);
      for (const auto& s : language_upto(x, 8))
        if (ly.contains(s)) expected.insert(s);
      CHECK(language_upto(prod.graph, 8) == expected);
    }
  }
}

TEST_CASE("subset and pair ids are canonical") {
  CHECK(subset_id({"only"}) == "only");
  CHECK(subset_id({"b", "a"}) == "{a,b}");
  CHECK(pair_id("l", "r") == "(l,r)");
}
