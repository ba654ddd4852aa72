#ifndef EXACT3_CONNECTIVITY_HPP
#define EXACT3_CONNECTIVITY_HPP

#include <map>
#include <optional>
#include <set>
#include <vector>

#include "exact3/multigraph.hpp"

namespace exact3 {

// A bipartition of the vertex set together with the edges that straddle it.
// side_a is the side containing the smallest vertex id.
struct EdgeCut {
  std::set<Vertex> side_a;
  std::set<Vertex> side_b;
  std::map<VertexPair, int> crossing;  // with multiplicities
  bool trivial = false;                // one side is a single vertex

  int weight() const {
    int w = 0;
    for (const auto& [pair, mult] : crossing) w += mult;
    return w;
  }
};

struct ConnectivityWitness {
  Vertex u, v;
  int lambda;
};

struct ConnectivityReport {
  int k = 0;
  bool exact = false;
  std::optional<ConnectivityWitness> witness;  // absent iff exact
};

// lambda(u,v): the maximum number of pairwise edge-disjoint u-v paths,
// counting parallel copies as distinct edges (max-flow with capacities
// equal to multiplicities).
int local_connectivity(const Multigraph& g, Vertex u, Vertex v);

// Equivalent-flow tree (Gusfield): n-1 max-flow calls; lambda(u,v) equals
// the minimum weight on the tree path between u and v.
struct CutTree {
  std::vector<Vertex> ids;
  std::vector<int> parent;  // dense index of parent, -1 for root
  std::vector<int> weight;  // lambda(ids[i], ids[parent[i]])
  int lambda(Vertex u, Vertex v) const;
  int min_weight() const;  // global edge connectivity
};
CutTree cut_tree(const Multigraph& g);

// exact == true iff lambda(u,v) == k for every pair of distinct vertices.
// On failure the witness is the lexicographically first offending pair.
// Order < 2 is a DomainError: exactness quantifies over distinct pairs.
ConnectivityReport is_exactly_k(const Multigraph& g, int k);

// All cuts of minimum cardinality, ordered by side_a's sorted vertex list.
std::vector<EdgeCut> minimum_cuts(const Multigraph& g, bool nontrivial_only);

// Builds the EdgeCut for a given side_a candidate (side containing the
// smallest vertex becomes side_a).
EdgeCut make_cut(const Multigraph& g, const std::set<Vertex>& side);

// Merges every class of vertices mutually joined by more than k
// edge-disjoint paths into one vertex (keeping the smallest id), dropping
// self-loops and summing parallel multiplicities. Requires g connected and
// k-edge-connected; the result is a single vertex or exactly
// k-edge-connected, which is asserted.
Multigraph collapse_supernodes(const Multigraph& g, int k);

}  // namespace exact3

#endif
