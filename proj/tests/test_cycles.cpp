#include <algorithm>

#include "doctest.h"
#include "exact3/cycles.hpp"
#include "exact3/generators.hpp"
#include "oracles.hpp"

using namespace exact3;

TEST_CASE("dumbbell has one chordless cycle class") {
  auto cycles = chordless_cycles(dumbbell());
  REQUIRE(cycles.size() == 1);
  CHECK(cycles[0].vertices() == std::vector<Vertex>{0, 1});
}

TEST_CASE("K4 has exactly its four triangles") {
  auto cycles = chordless_cycles(complete_graph(4));
  REQUIRE(cycles.size() == 4);
  for (const auto& c : cycles) CHECK(c.length() == 3);
}

TEST_CASE("avoiding a K4 vertex leaves one triangle") {
  CycleQuery q;
  q.avoiding = 0;
  auto cycles = chordless_cycles(complete_graph(4), q);
  REQUIRE(cycles.size() == 1);
  CHECK(cycles[0].vertices() == std::vector<Vertex>{1, 2, 3});
}

TEST_CASE("through filter and argument checks") {
  CycleQuery q;
  q.through = 0;
  auto cycles = chordless_cycles(complete_graph(4), q);
  CHECK(cycles.size() == 3);

  q.avoiding = 0;
  CHECK_THROWS_AS(chordless_cycles(complete_graph(4), q), ArgumentError);
}

TEST_CASE("shortest first ordering") {
  // triangle with a pendant double edge: the 2-cycle comes first
  Multigraph g = from_edges(4, {{0, 1, 1}, {1, 2, 1}, {0, 2, 1}, {2, 3, 2}});
  auto cycles = chordless_cycles(g);
  REQUIRE(cycles.size() == 2);
  CHECK(cycles[0].length() == 2);
  CHECK(cycles[1].length() == 3);
}

TEST_CASE("agrees with subset-and-rotation enumeration") {
  std::mt19937 rng(17);
  for (int trial = 0; trial < 80; ++trial) {
    Multigraph g = oracles::random_connected_multigraph(rng, 6, 3);
    auto got = chordless_cycles(g);
    auto expect = oracles::chordless_cycles_by_enumeration(g);
    std::sort(got.begin(), got.end());
    std::sort(expect.begin(), expect.end());
    REQUIRE(got == expect);
  }
}

TEST_CASE("C7 has one chordless cycle") {
  auto cycles = chordless_cycles(cycle_graph(7));
  REQUIRE(cycles.size() == 1);
  CHECK(cycles[0].length() == 7);
}
