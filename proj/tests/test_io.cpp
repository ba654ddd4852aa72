#include "doctest.h"
#include "exact3/canonical.hpp"
#include "exact3/generators.hpp"
#include "exact3/io.hpp"
#include "oracles.hpp"

using namespace exact3;

TEST_CASE("edge list round-trip") {
  Multigraph g = from_edges(4, {{0, 1, 2}, {1, 2, 1}, {2, 3, 3}, {0, 3, 1}});
  Multigraph back = parse_edge_list(write_edge_list(g));
  CHECK(back == g);
}

TEST_CASE("edge list write compacts sparse ids") {
  Multigraph g;
  g.add_vertex(3);
  g.add_vertex(9);
  g.add_edge(3, 9, 3);
  std::string text = write_edge_list(g);
  CHECK(text == "2 1\n0 1 3\n");
}

TEST_CASE("edge list parse errors carry line numbers") {
  auto expect_line = [](const std::string& text, int line) {
    try {
      parse_edge_list(text);
      FAIL("expected FormatError for: " << text);
    } catch (const FormatError& e) {
      CHECK(e.line == line);
    }
  };
  expect_line("2 1\na b\n", 2);          // missing multiplicity
  expect_line("2 1\n0 1\n", 2);          // missing multiplicity
  expect_line("2\n0 1 1\n", 1);          // bad header
  expect_line("2 1\n0 1 0\n", 2);        // multiplicity < 1
  expect_line("2 1\n0 0 1\n", 2);        // self-loop
  expect_line("2 1\n0 5 1\n", 2);        // out of range
  expect_line("2 2\n0 1 1\n0 1 2\n", 3); // duplicate pair
  expect_line("2 2\n0 1 1\n", 3);        // fewer lines than promised
}

TEST_CASE("graph6 known encodings") {
  CHECK(write_graph6(complete_graph(4)) == "C~");
  CHECK(is_isomorphic(parse_graph6("C~"), complete_graph(4)));
  Multigraph c4 = parse_graph6(write_graph6(cycle_graph(4)));
  CHECK(is_isomorphic(c4, cycle_graph(4)));
  CHECK(is_isomorphic(parse_graph6(">>graph6<<C~"), complete_graph(4)));
  CHECK_THROWS_AS(write_graph6(dumbbell()), DomainError);
  CHECK_THROWS_AS(parse_graph6(std::string(1, char(20))), FormatError);
}

TEST_CASE("graph6 round-trips random simple graphs") {
  std::mt19937 rng(71);
  for (int trial = 0; trial < 40; ++trial) {
    Multigraph g = oracles::random_connected_multigraph(rng, 9, 1);
    Multigraph back = parse_graph6(write_graph6(g));
    CHECK(is_isomorphic(back, g));
  }
}

TEST_CASE("dot export renders parallel edges") {
  std::string dot = write_dot(dumbbell());
  std::size_t count = 0, at = 0;
  while ((at = dot.find("0 -- 1", at)) != std::string::npos) {
    ++count;
    at += 1;
  }
  CHECK(count == 3);
}

TEST_CASE("format auto-detection") {
  CHECK(detect_format("2 1\n0 1 3\n") == GraphFormat::EdgeList);
  CHECK(detect_format("C~\n") == GraphFormat::Graph6);
  CHECK(is_isomorphic(parse_graph("C~\n"), complete_graph(4)));
  CHECK(parse_graph("2 1\n0 1 3\n") == dumbbell());
}
