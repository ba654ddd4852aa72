#include <algorithm>

#include "doctest.h"
#include "exact3/blocks.hpp"
#include "exact3/canonical.hpp"
#include "exact3/connectivity.hpp"
#include "exact3/decompose.hpp"
#include "exact3/generators.hpp"
#include "exact3/ops.hpp"
#include "oracles.hpp"

using namespace exact3;

namespace {

bool exact3_check(const Multigraph& g) { return is_exactly_k(g, 3).exact; }

// Block-glued K4s whose shared vertex was expanded into a 4-cycle by hand:
// the cycle separates the two K4 remnants, so it is an articulation cycle.
Multigraph articulation_cycle_instance() {
  return from_edges(10, {{0, 1, 1},
                         {1, 2, 1},
                         {2, 3, 1},
                         {3, 0, 1},
                         {0, 4, 1},
                         {2, 5, 1},
                         {3, 6, 1},
                         {4, 5, 1},
                         {4, 6, 1},
                         {5, 6, 1},
                         {1, 7, 1},
                         {3, 8, 1},
                         {3, 9, 1},
                         {7, 8, 1},
                         {7, 9, 1},
                         {8, 9, 1}});
}

}  // namespace

TEST_CASE("c_partition examples") {
  CPartition one = c_partition(complete_graph(4), Cycle({1, 2, 3}));
  REQUIRE(one.size() == 1);
  CHECK(one.components[0] == std::set<Vertex>{0});

  CPartition zero = c_partition(dumbbell(), Cycle({0, 1}));
  CHECK(zero.size() == 0);

  Multigraph g = articulation_cycle_instance();
  REQUIRE(exact3_check(g));
  CPartition two = c_partition(g, Cycle({0, 1, 2, 3}));
  REQUIRE(two.size() == 2);
  CHECK(two.components[0] == std::set<Vertex>{4, 5, 6});
  CHECK(two.components[1] == std::set<Vertex>{7, 8, 9});
}

TEST_CASE("colored cycles count bicolored edges") {
  Multigraph g = articulation_cycle_instance();
  CPartition part = c_partition(g, Cycle({0, 1, 2, 3}));
  ColoredCycle colored = color_cycle(g, part.cycle, part.components[0]);
  // vertices 0,2,3 attach to {4,5,6}; vertex 1 attaches to the other side
  int reds = 0;
  for (bool r : colored.red) reds += r;
  CHECK(reds == 3);
  CHECK(colored.bicolored_edges() == 2);
}

TEST_CASE("is_collapsible examples") {
  CHECK(is_collapsible(complete_graph(4), Cycle({1, 2, 3})));

  Multigraph g = articulation_cycle_instance();
  CHECK_FALSE(is_collapsible(g, Cycle({0, 1, 2, 3})));  // partition size 2

  // two d'=2 expansions leave two degree-4 vertices joined by a double
  // edge; that 2-cycle violates the quasi-3-regular cycle condition
  CycleExpansionSpec first;
  first.target = 1;
  first.cycle_size = 2;
  first.assignment = {Dart(1, 0, 0), Dart(1, 0, 1), Dart(1, 0, 2)};
  CycleExpandResult step1 = cycle_expand_detail(dumbbell(), first);
  Vertex a = 0;
  CycleExpansionSpec second;
  second.target = a;
  second.cycle_size = 2;
  second.assignment = step1.graph.darts(a);
  // put the single u1-dart first so the double-edged far endpoint rides on
  // the heavy cycle vertex
  std::stable_sort(second.assignment.begin(), second.assignment.end(),
                   [&](const Dart& l, const Dart& r) {
                     return step1.graph.multiplicity(a, l.to) <
                            step1.graph.multiplicity(a, r.to);
                   });
  Multigraph doubled = cycle_expand(step1.graph, second);
  REQUIRE(exact3_check(doubled));
  std::vector<Vertex> heavy;
  for (Vertex v : doubled.vertices())
    if (doubled.degree(v) == 4) heavy.push_back(v);
  REQUIRE(heavy.size() == 2);
  REQUIRE(doubled.multiplicity(heavy[0], heavy[1]) == 2);
  CHECK_FALSE(is_collapsible(doubled, Cycle({heavy[0], heavy[1]})));

  CHECK_THROWS_AS(is_collapsible(cycle_graph(4), Cycle({0, 1, 2, 3})),
                  DomainError);
}

TEST_CASE("find_collapsible_cycle examples") {
  Cycle c = find_collapsible_cycle(complete_graph(4), 0);
  CHECK(c.vertices() == std::vector<Vertex>{1, 2, 3});

  VertexGluingSpec spec;
  spec.u1 = 0;
  spec.u2 = 0;
  for (int i = 0; i < 3; ++i)
    spec.pairing.push_back({Dart(0, i + 1, 0), Dart(0, i + 1, 0)});
  Multigraph glued = vertex_glue(complete_graph(4), complete_graph(4), spec);
  Vertex avoid = *glued.vertices().begin();
  Cycle found = find_collapsible_cycle(glued, avoid);
  CHECK_FALSE(found.contains(avoid));
  CHECK(is_collapsible(glued, found));

  Multigraph h38 = harary3(8);
  Cycle hc = find_collapsible_cycle(h38, 0);
  CHECK_FALSE(hc.contains(0));
  CHECK(is_collapsible(h38, hc));
  CHECK(exact3_check(cycle_contract(h38, hc)));

  CHECK_THROWS_AS(find_collapsible_cycle(complete_graph(4), 9), ArgumentError);
}

TEST_CASE("script text round-trips") {
  SynthesisScript script;
  ScriptOp db;
  db.kind = ScriptOp::Kind::Dumbbell;
  db.a = "g0";
  script.ops.push_back(db);
  ScriptOp ex;
  ex.kind = ScriptOp::Kind::Expand;
  ex.a = "g0";
  ex.ua = 1;
  ex.cycle_size = 3;
  ex.darts = {Dart(1, 0, 0), Dart(1, 0, 1), Dart(1, 0, 2)};
  script.ops.push_back(ex);
  script.provenance = "abcd";

  std::string text = script.to_text();
  SynthesisScript parsed = SynthesisScript::parse(text);
  REQUIRE(parsed.ops.size() == 2);
  CHECK(parsed.provenance == std::optional<std::string>("abcd"));
  CHECK(parsed.ops[1].darts == ex.darts);
  CHECK(parsed.to_text() == text);

  CHECK_THROWS_AS(SynthesisScript::parse("NONSENSE x"), FormatError);
  CHECK_THROWS_AS(SynthesisScript::parse("EXPAND g0 1 3"), FormatError);
}

TEST_CASE("replay examples") {
  SynthesisScript one = SynthesisScript::parse("DUMBBELL g0\n");
  CHECK(is_isomorphic(replay(one), dumbbell()));

  SynthesisScript path = SynthesisScript::parse(
      "DUMBBELL g0\nDUMBBELL g1\nGLUE g0 1 g1 0 g2\n");
  Multigraph thick = replay(path);
  CHECK(thick.order() == 3);
  CHECK(thick.size() == 6);  // m = n + 2B - 1 with E = 0

  SynthesisScript k4 = SynthesisScript::parse(
      "DUMBBELL g0\nEXPAND g0 1 3 1~0#0,1~0#1,1~0#2\n");
  CHECK(is_isomorphic(replay(k4), complete_graph(4)));

  CHECK_THROWS_AS(replay(SynthesisScript::parse("GLUE g0 0 g1 0 g2\n")),
                  FormatError);
  CHECK_THROWS_AS(replay(SynthesisScript::parse(
                      "DUMBBELL g0\nEXPAND g0 1 9 1~0#0,1~0#1,1~0#2\n")),
                  FormatError);
  CHECK_THROWS_AS(replay(SynthesisScript{}), FormatError);
}

TEST_CASE("decompose examples") {
  SynthesisScript db = decompose(dumbbell());
  REQUIRE(db.ops.size() == 1);
  CHECK(db.ops[0].kind == ScriptOp::Kind::Dumbbell);

  SynthesisScript k4 = decompose(complete_graph(4));
  REQUIRE(k4.ops.size() == 2);
  CHECK(k4.ops[0].kind == ScriptOp::Kind::Dumbbell);
  CHECK(k4.ops[1].kind == ScriptOp::Kind::Expand);
  CHECK(k4.ops[1].cycle_size == 3);
  CHECK(is_isomorphic(replay(k4), complete_graph(4)));

  // K_{3,3}: m - n - 2B + 1 = 9 - 6 - 2 + 1 = 2 expansions
  SynthesisScript k33 = decompose(complete_bipartite(3, 3));
  CHECK(k33.expansions() == 2);
  CHECK(is_isomorphic(replay(k33), complete_bipartite(3, 3)));

  CHECK_THROWS_AS(decompose(cycle_graph(4)), DomainError);
}

TEST_CASE("decompose handles articulation structure") {
  Multigraph three = k_bridge_add(k_bridge_add(dumbbell(), 1, 3), 2, 3);
  SynthesisScript script = decompose(three);
  CHECK(script.dumbbells() == 3);
  CHECK(script.gluings() == 2);
  CHECK(script.expansions() == 0);
  CHECK(is_isomorphic(replay(script), three));

  Multigraph mixed = block_glue(complete_graph(4), 0, complete_graph(4), 0);
  SynthesisScript ms = decompose(mixed);
  CHECK(ms.dumbbells() == 2);
  CHECK(ms.gluings() == 1);
  CHECK(ms.expansions() == 2);
  CHECK(is_isomorphic(replay(ms), mixed));
}

TEST_CASE("counting identity on decomposed graphs") {
  Multigraph graphs[] = {dumbbell(), complete_graph(4), complete_bipartite(3, 3),
                         harary3(8), block_glue(complete_graph(4), 1,
                                                complete_graph(4), 2)};
  for (const Multigraph& g : graphs) {
    SynthesisScript s = decompose(g);
    int n = static_cast<int>(g.order());
    int m = g.size();
    int b = static_cast<int>(blocks(g).blocks.size());
    CHECK(m == n + 2 * b + s.expansions() - 1);
    CHECK(s.gluings() + s.expansions() == m - n - b);
    CHECK(s.dumbbells() == b);
  }
}

TEST_CASE("thick_tree_factor examples") {
  SynthesisScript k4 = decompose(complete_graph(4));
  SynthesisScript same = thick_tree_factor(k4);
  CHECK(same.to_text() == k4.to_text());  // no gluings: unchanged

  Multigraph mixed = block_glue(complete_graph(4), 0, complete_graph(4), 0);
  SynthesisScript factored = thick_tree_factor(decompose(mixed));
  REQUIRE(factored.ops.size() == 5);
  CHECK(factored.ops[0].kind == ScriptOp::Kind::Dumbbell);
  CHECK(factored.ops[1].kind == ScriptOp::Kind::Dumbbell);
  CHECK(factored.ops[2].kind == ScriptOp::Kind::Glue);
  CHECK(factored.ops[3].kind == ScriptOp::Kind::Expand);
  CHECK(factored.ops[4].kind == ScriptOp::Kind::Expand);
  CHECK(is_isomorphic(replay(factored), mixed));
}

TEST_CASE("thick_tree_factor with three blocks on one K4") {
  // K4 carrying three pendant dumbbells: factoring must route two external
  // bundles through one expansion
  Multigraph g = complete_graph(4);
  g = k_bridge_add(g, 0, 3);
  g = k_bridge_add(g, 1, 3);
  g = k_bridge_add(g, 2, 3);
  REQUIRE(exact3_check(g));
  SynthesisScript script = decompose(g);
  CHECK(is_isomorphic(replay(script), g));
  SynthesisScript factored = thick_tree_factor(script);
  // all gluings first
  bool seen_expand = false;
  for (const auto& op : factored.ops) {
    if (op.kind == ScriptOp::Kind::Expand) seen_expand = true;
    if (op.kind == ScriptOp::Kind::Glue) CHECK_FALSE(seen_expand);
  }
  CHECK(is_isomorphic(replay(factored), g));
}

TEST_CASE("decompose-replay roundtrip on random synthesized graphs") {
  std::mt19937 rng(67);
  for (int trial = 0; trial < 25; ++trial) {
    // random synthesis: a few expansions, sometimes a gluing
    Multigraph g = dumbbell();
    int steps = 1 + static_cast<int>(rng() % 5);
    for (int i = 0; i < steps; ++i) {
      std::vector<Vertex> verts(g.vertices().begin(), g.vertices().end());
      Vertex u = verts[rng() % verts.size()];
      if (blocks(g).articulation_points.count(u)) continue;
      auto darts = g.darts(u);
      if (rng() % 4 == 0) {
        g = k_bridge_add(g, u, 3);
        continue;
      }
      std::shuffle(darts.begin(), darts.end(), rng);
      CycleExpansionSpec spec;
      spec.target = u;
      spec.cycle_size = 2 + static_cast<int>(rng() % (darts.size() - 1));
      spec.assignment = darts;
      g = block_respecting_cycle_expand(g, spec);
    }
    REQUIRE(exact3_check(g));
    SynthesisScript script = decompose(g);
    CHECK(is_isomorphic(replay(script), g));
    SynthesisScript factored = thick_tree_factor(script);
    CHECK(is_isomorphic(replay(factored), g));
  }
}
