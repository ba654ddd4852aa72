#include "doctest.h"
#include "exact3/blocks.hpp"
#include "exact3/generators.hpp"
#include "exact3/ops.hpp"
#include "oracles.hpp"

using namespace exact3;

TEST_CASE("dumbbell is one block") {
  auto bd = blocks(dumbbell());
  CHECK(bd.blocks.size() == 1);
  CHECK(bd.articulation_points.empty());
  CHECK(is_biconnected(dumbbell()));
}

TEST_CASE("two glued dumbbells") {
  Multigraph g = block_glue(dumbbell(), 1, dumbbell(), 0);
  auto bd = blocks(g);
  CHECK(bd.blocks.size() == 2);
  CHECK(bd.articulation_points.size() == 1);
  CHECK(bd.block_cut_tree.size() == 2);
  CHECK_FALSE(is_biconnected(g));
}

TEST_CASE("K4 is one block") {
  auto bd = blocks(complete_graph(4));
  CHECK(bd.blocks.size() == 1);
  CHECK(bd.articulation_points.empty());
}

TEST_CASE("disconnected input names two unreachable vertices") {
  Multigraph g;
  for (int v = 0; v < 4; ++v) g.add_vertex(v);
  g.add_edge(0, 1);
  g.add_edge(2, 3);
  try {
    blocks(g);
    FAIL("expected DomainError");
  } catch (const DomainError& e) {
    std::string msg = e.what();
    CHECK(msg.find("0") != std::string::npos);
    CHECK(msg.find("2") != std::string::npos);
  }
}

TEST_CASE("every edge lies in exactly one block") {
  std::mt19937 rng(11);
  for (int trial = 0; trial < 60; ++trial) {
    Multigraph g = oracles::random_connected_multigraph(rng, 7, 3);
    auto bd = blocks(g);
    for (const auto& [pair, mult] : g.edges()) {
      int owner = -1, owners = 0;
      for (int b = 0; b < static_cast<int>(bd.blocks.size()); ++b)
        if (bd.blocks[b].count(pair.first) && bd.blocks[b].count(pair.second)) {
          owner = b;
          ++owners;
        }
      CHECK(owners == 1);
      CHECK(bd.block_of_edge(pair.first, pair.second) == owner);
    }
  }
}

TEST_CASE("articulation points are exactly the disconnecting vertices") {
  std::mt19937 rng(13);
  for (int trial = 0; trial < 40; ++trial) {
    Multigraph g = oracles::random_connected_multigraph(rng, 7, 2);
    if (g.order() < 3) continue;
    auto bd = blocks(g);
    for (Vertex v : g.vertices()) {
      std::set<Vertex> rest;
      for (Vertex w : g.vertices())
        if (w != v) rest.insert(w);
      bool disconnects = components(g.induced(rest)).size() > 1;
      CHECK(disconnects == (bd.articulation_points.count(v) != 0));
    }
  }
}

TEST_CASE("parallel edges keep a pair biconnected") {
  // a triangle with one doubled edge has no articulation points
  Multigraph g = from_edges(3, {{0, 1, 2}, {1, 2, 1}, {0, 2, 1}});
  CHECK(blocks(g).blocks.size() == 1);
  // a path of double edges splits at its middle vertex
  Multigraph path = from_edges(3, {{0, 1, 2}, {1, 2, 2}});
  auto bd = blocks(path);
  CHECK(bd.blocks.size() == 2);
  CHECK(bd.articulation_points == std::set<Vertex>{1});
}
