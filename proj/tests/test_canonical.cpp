#include "doctest.h"
#include "exact3/canonical.hpp"
#include "exact3/generators.hpp"
#include "oracles.hpp"

using namespace exact3;

TEST_CASE("relabeling leaves the code unchanged") {
  std::mt19937 rng(23);
  for (int trial = 0; trial < 60; ++trial) {
    Multigraph g = oracles::random_connected_multigraph(rng, 7, 3);
    Multigraph h = oracles::random_relabel(rng, g);
    CHECK(canonical_code(g) == canonical_code(h));
    CHECK(is_isomorphic(g, h));
  }
}

TEST_CASE("different graphs get different codes") {
  CHECK(canonical_code(dumbbell()) != canonical_code(cycle_graph(3)));
  Multigraph k4_minus = complete_graph(4);
  k4_minus.remove_edge(0, 1);
  CHECK(canonical_code(complete_graph(4)) != canonical_code(k4_minus));
  CHECK_FALSE(is_isomorphic(dumbbell(), from_edges(2, {{0, 1, 2}})));
}

TEST_CASE("code partition matches permutation-based isomorphism") {
  std::mt19937 rng(29);
  std::vector<Multigraph> sample;
  for (int trial = 0; trial < 40; ++trial)
    sample.push_back(oracles::random_connected_multigraph(rng, 5, 3));
  for (std::size_t i = 0; i < sample.size(); ++i)
    for (std::size_t j = i + 1; j < sample.size(); ++j) {
      bool by_code = canonical_code(sample[i]) == canonical_code(sample[j]);
      bool by_perm = oracles::isomorphic_by_permutation(sample[i], sample[j]);
      CHECK(by_code == by_perm);
    }
}

TEST_CASE("all simple graphs on 5 vertices vs the permutation oracle") {
  // exhaustive cross-validation of is_isomorphic on a small universe
  std::vector<Multigraph> graphs;
  for (int mask = 0; mask < (1 << 10); mask += 7) {  // stride keeps it quick
    Multigraph g;
    for (int v = 0; v < 5; ++v) g.add_vertex(v);
    int bit = 0;
    for (int u = 0; u < 5; ++u)
      for (int v = u + 1; v < 5; ++v, ++bit)
        if (mask & (1 << bit)) g.add_edge(u, v);
    graphs.push_back(std::move(g));
  }
  for (std::size_t i = 0; i < graphs.size(); ++i)
    for (std::size_t j = i + 1; j < graphs.size(); ++j)
      CHECK(is_isomorphic(graphs[i], graphs[j]) ==
            oracles::isomorphic_by_permutation(graphs[i], graphs[j]));
}

TEST_CASE("canonical labeling is a bijection onto 0..n-1") {
  std::mt19937 rng(31);
  Multigraph g = oracles::random_connected_multigraph(rng, 6, 2);
  CanonicalForm form = canonical_form(g);
  std::set<int> positions;
  for (const auto& [v, pos] : form.labeling) positions.insert(pos);
  CHECK(positions.size() == g.order());
  CHECK(*positions.begin() == 0);
  CHECK(*positions.rbegin() == static_cast<int>(g.order()) - 1);
}

TEST_CASE("canonical labelings form the automorphism coset") {
  // K4 has 24 automorphisms, the path P3 has 2
  CHECK(canonical_labelings(complete_graph(4)).size() == 24);
  Multigraph p3 = from_edges(3, {{0, 1, 1}, {1, 2, 1}});
  CHECK(canonical_labelings(p3).size() == 2);
  CHECK(canonical_labelings(complete_bipartite(3, 3)).size() == 72);
}

TEST_CASE("hex encoding") {
  std::string code;
  code.push_back(2);
  code.push_back(static_cast<char>(0xab));
  CHECK(to_hex(code) == "02ab");
}
