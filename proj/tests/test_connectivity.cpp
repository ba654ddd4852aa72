#include "doctest.h"
#include "exact3/canonical.hpp"
#include "exact3/connectivity.hpp"
#include "exact3/generators.hpp"
#include "exact3/ops.hpp"
#include "oracles.hpp"

using namespace exact3;

namespace {

Multigraph k4_plus_parallel() {
  Multigraph g = complete_graph(4);
  g.add_edge(0, 1);
  return g;
}

}  // namespace

TEST_CASE("local connectivity examples") {
  CHECK(local_connectivity(dumbbell(), 0, 1) == 3);
  CHECK(local_connectivity(cycle_graph(4), 0, 2) == 2);
  CHECK(local_connectivity(k4_plus_parallel(), 0, 1) == 4);

  CHECK_THROWS_AS(local_connectivity(dumbbell(), 0, 0), ArgumentError);
  CHECK_THROWS_AS(local_connectivity(dumbbell(), 0, 9), ArgumentError);
}

TEST_CASE("lambda bounded by the endpoint degrees") {
  std::mt19937 rng(37);
  for (int trial = 0; trial < 40; ++trial) {
    Multigraph g = oracles::random_connected_multigraph(rng, 6, 3);
    for (Vertex u : g.vertices())
      for (Vertex v : g.vertices()) {
        if (v <= u) continue;
        int lam = local_connectivity(g, u, v);
        CHECK(lam <= std::min(g.degree(u), g.degree(v)));
      }
  }
}

TEST_CASE("lambda agrees with the cut-enumeration oracle") {
  std::mt19937 rng(41);
  for (int trial = 0; trial < 60; ++trial) {
    Multigraph g = oracles::random_connected_multigraph(rng, 6, 3);
    std::uniform_int_distribution<int> pick(0, static_cast<int>(g.order()) - 1);
    int u = pick(rng), v = pick(rng);
    if (u == v) continue;
    CHECK(local_connectivity(g, u, v) ==
          oracles::lambda_by_cut_enumeration(g, u, v));
  }
}

TEST_CASE("cut tree reproduces all pairwise values") {
  std::mt19937 rng(43);
  for (int trial = 0; trial < 30; ++trial) {
    Multigraph g = oracles::random_connected_multigraph(rng, 7, 3);
    CutTree tree = cut_tree(g);
    for (Vertex u : g.vertices())
      for (Vertex v : g.vertices()) {
        if (v <= u) continue;
        CHECK(tree.lambda(u, v) == local_connectivity(g, u, v));
      }
  }
}

TEST_CASE("is_exactly_k examples") {
  CHECK(is_exactly_k(dumbbell(), 3).exact);

  ConnectivityReport bad = is_exactly_k(k4_plus_parallel(), 3);
  CHECK_FALSE(bad.exact);
  REQUIRE(bad.witness.has_value());
  CHECK(bad.witness->u == 0);
  CHECK(bad.witness->v == 1);
  CHECK(bad.witness->lambda == 4);

  CHECK(is_exactly_k(complete_bipartite(3, 3), 3).exact);

  Multigraph single;
  single.add_vertex(0);
  CHECK_THROWS_AS(is_exactly_k(single, 3), DomainError);
}

TEST_CASE("witness is the lexicographically first offender") {
  // C4: every adjacent pair has lambda 2; (0,1) is first
  ConnectivityReport r = is_exactly_k(cycle_graph(4), 3);
  REQUIRE(r.witness.has_value());
  CHECK(r.witness->u == 0);
  CHECK(r.witness->v == 1);
  CHECK(r.witness->lambda == 2);
}

TEST_CASE("minimum cuts examples") {
  CHECK(minimum_cuts(dumbbell(), true).empty());

  // two K4s vertex-glued: the gluing cut is the only non-trivial minimum cut
  VertexGluingSpec spec;
  spec.u1 = 0;
  spec.u2 = 0;
  Multigraph k4 = complete_graph(4);
  for (int i = 0; i < 3; ++i)
    spec.pairing.push_back({Dart(0, i + 1, 0), Dart(0, i + 1, 0)});
  Multigraph glued = vertex_glue(k4, k4, spec);
  REQUIRE(glued.order() == 6);
  auto cuts = minimum_cuts(glued, true);
  REQUIRE(cuts.size() == 1);
  CHECK(cuts[0].weight() == 3);
  CHECK(cuts[0].side_a.size() == 3);
  CHECK_FALSE(cuts[0].trivial);

  auto k4cuts = minimum_cuts(complete_graph(4), false);
  REQUIRE(k4cuts.size() == 4);
  for (const auto& cut : k4cuts) {
    CHECK(cut.trivial);
    CHECK(cut.weight() == 3);
  }
}

TEST_CASE("minimum cut weights match pairwise lambda across the cut") {
  std::mt19937 rng(47);
  for (int trial = 0; trial < 25; ++trial) {
    Multigraph g = oracles::random_connected_multigraph(rng, 6, 3);
    for (const EdgeCut& cut : minimum_cuts(g, false)) {
      int best = INT32_MAX;
      for (Vertex u : cut.side_a)
        for (Vertex v : cut.side_b)
          best = std::min(best, local_connectivity(g, u, v));
      CHECK(cut.weight() == best);
    }
  }
}

TEST_CASE("collapse_supernodes examples") {
  Multigraph k4 = complete_graph(4);
  CHECK(is_isomorphic(collapse_supernodes(k4, 3), k4));

  Multigraph merged = collapse_supernodes(k4_plus_parallel(), 3);
  CHECK(merged.order() == 3);
  CHECK(merged.size() == 5);
  CHECK(is_exactly_k(merged, 3).exact);
  // shape: (s,c)^2, (s,d)^2, (c,d)
  Multigraph expected = from_edges(3, {{0, 1, 2}, {0, 2, 2}, {1, 2, 1}});
  CHECK(is_isomorphic(merged, expected));

  Multigraph point = collapse_supernodes(cycle_graph(4), 1);
  CHECK(point.order() == 1);

  CHECK_THROWS_AS(collapse_supernodes(cycle_graph(4), 3), DomainError);
}
