#include "doctest.h"
#include "exact3/generators.hpp"
#include "exact3/multigraph.hpp"
#include "oracles.hpp"

using namespace exact3;

TEST_CASE("multigraph basics") {
  Multigraph g = from_edges(3, {{0, 1, 2}, {1, 2, 1}});
  CHECK(g.order() == 3);
  CHECK(g.size() == 3);
  CHECK(g.distinct_edge_count() == 2);
  CHECK(g.degree(1) == 3);
  CHECK(g.multiplicity(0, 1) == 2);
  CHECK(g.multiplicity(1, 0) == 2);
  CHECK(g.multiplicity(0, 2) == 0);
  CHECK(g.neighbors(1) == std::vector<Vertex>{0, 2});
  CHECK(g.darts(0).size() == 2);

  CHECK_THROWS_AS(g.add_edge(1, 1), ArgumentError);
  CHECK_THROWS_AS(g.add_edge(0, 7), ArgumentError);
  CHECK_THROWS_AS(g.add_edge(0, 1, 0), ArgumentError);
}

TEST_CASE("fresh ids are monotone and survive copies") {
  Multigraph g = from_edges(2, {{0, 1, 3}});
  CHECK(g.peek_fresh_id() == 2);
  Multigraph h = g;
  h.remove_vertex(1);
  CHECK(h.peek_fresh_id() == 2);  // ids are never reused
  CHECK(h.add_vertex() == 2);
}

TEST_CASE("degree sum equals twice the edge count") {
  std::mt19937 rng(7);
  for (int trial = 0; trial < 50; ++trial) {
    Multigraph g = oracles::random_connected_multigraph(rng, 6, 3);
    int sum = 0;
    for (Vertex v : g.vertices()) sum += g.degree(v);
    CHECK(sum == 2 * g.size());
  }
}

TEST_CASE("dart text form round-trips") {
  Dart d(12, 5, 2);
  CHECK(d.to_string() == "12~5#2");
  CHECK(Dart::parse("12~5#2") == d);
  CHECK_THROWS_AS(Dart::parse("12-5#2"), FormatError);
  CHECK_THROWS_AS(Dart::parse("12~5"), FormatError);
}

TEST_CASE("cycle normalization") {
  Cycle c({3, 1, 2});
  CHECK(c.vertices() == std::vector<Vertex>{1, 2, 3});
  Cycle reversed({1, 3, 2});
  CHECK(c == reversed);
  Cycle pair({5, 2});
  CHECK(pair.vertices() == std::vector<Vertex>{2, 5});
  CHECK_THROWS_AS(Cycle({1}), ArgumentError);
  CHECK_THROWS_AS(Cycle({1, 2, 1}), ArgumentError);
}

TEST_CASE("cycle validation and chords") {
  Multigraph k4 = complete_graph(4);
  Cycle tri({0, 1, 2});
  tri.validate_in(k4);
  CHECK(tri.is_chordless_in(k4));
  Cycle quad({0, 1, 2, 3});
  quad.validate_in(k4);
  CHECK_FALSE(quad.is_chordless_in(k4));  // diagonals are chords

  Multigraph g = from_edges(3, {{0, 1, 2}, {1, 2, 1}, {0, 2, 1}});
  Cycle tri2({0, 1, 2});
  CHECK_FALSE(tri2.is_chordless_in(g));  // double edge on the cycle

  CHECK_THROWS_AS(Cycle({0, 1}).validate_in(k4), ArgumentError);
  CHECK(Cycle({0, 1}).is_chordless_in(dumbbell()));
}

TEST_CASE("smooth_degree2 examples") {
  // path a-x-b plus (a,b)^2 collapses to the dumbbell
  Multigraph g = from_edges(3, {{0, 2, 1}, {2, 1, 1}, {0, 1, 2}});
  Multigraph s = smooth_degree2(g);
  CHECK(s.order() == 2);
  CHECK(s.multiplicity(0, 1) == 3);

  Multigraph k4 = complete_graph(4);
  CHECK(smooth_degree2(k4) == k4);

  // 4-cycle ends as a bare double edge
  Multigraph c4 = cycle_graph(4);
  Multigraph sc4 = smooth_degree2(c4);
  CHECK(sc4.order() == 2);
  CHECK(sc4.size() == 2);

  CHECK(smooth_degree2(sc4) == sc4);  // idempotent on the fixed point
}

TEST_CASE("components") {
  Multigraph g;
  for (int v = 0; v < 5; ++v) g.add_vertex(v);
  g.add_edge(0, 1);
  g.add_edge(3, 4);
  auto comps = components(g);
  REQUIRE(comps.size() == 3);
  CHECK(comps[0] == std::set<Vertex>{0, 1});
  CHECK(comps[1] == std::set<Vertex>{2});
  CHECK(comps[2] == std::set<Vertex>{3, 4});
}

TEST_CASE("induced subgraph keeps ids") {
  Multigraph g = complete_graph(4);
  Multigraph sub = g.induced({1, 2, 3});
  CHECK(sub.order() == 3);
  CHECK(sub.size() == 3);
  CHECK(sub.has_vertex(3));
  CHECK_FALSE(sub.has_vertex(0));
}
