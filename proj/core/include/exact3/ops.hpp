#ifndef EXACT3_OPS_HPP
#define EXACT3_OPS_HPP

#include <utility>
#include <vector>

#include "exact3/connectivity.hpp"
#include "exact3/multigraph.hpp"

namespace exact3 {

// Replacing a degree-d vertex u by a cycle of cycle_size vertices.
// assignment orders u's darts; cycle vertex i (1-based, i < cycle_size)
// receives the i-th listed dart and the last cycle vertex receives the rest.
//
// For the block-respecting variant the assignment may interleave complete
// per-block dart bundles of an articulation target: a bundle listed right
// after position i's dart re-glues its block at cycle vertex i; bundles in
// the tail, or omitted altogether, re-glue at the last cycle vertex.
struct CycleExpansionSpec {
  Vertex target = -1;
  int cycle_size = 0;
  std::vector<Dart> assignment;
};

// Deleting degree-k vertices u1 of one graph and u2 of another and joining
// the 2k loose ends according to the pairing.
struct VertexGluingSpec {
  Vertex u1 = -1;
  Vertex u2 = -1;
  std::vector<std::pair<Dart, Dart>> pairing;  // u1 dart <-> u2 dart
};

struct BlockGlueResult {
  Multigraph graph;
  Vertex glue_vertex;  // the new articulation point
  Vertex offset;       // g2 ids were shifted by this much
};

struct CycleExpandResult {
  Multigraph graph;
  std::vector<Vertex> cycle;  // created vertices, position order
};

struct VertexSplitResult {
  Multigraph g1, g2;
  Vertex x1, x2;           // the two capping vertices
  VertexGluingSpec reglue; // vertex_glue(g1, g2, reglue) recovers the input
};

// Identify u1 of g1 and u2 of g2 into one fresh vertex; g2 is relabeled by
// a deterministic offset first. Exactly-k inputs give an exactly-k result.
BlockGlueResult block_glue_detail(const Multigraph& g1, Vertex u1,
                                  const Multigraph& g2, Vertex u2);
Multigraph block_glue(const Multigraph& g1, Vertex u1, const Multigraph& g2,
                      Vertex u2);

// Fresh vertex joined to v by k parallel edges (block gluing a k-dumbbell).
Multigraph k_bridge_add(const Multigraph& g, Vertex v, int k);

Multigraph vertex_glue(const Multigraph& g1, const Multigraph& g2,
                       const VertexGluingSpec& spec);

// Cut must be a non-trivial minimum cut; each side is capped by a fresh
// vertex carrying the cut edges.
VertexSplitResult vertex_split(const Multigraph& g, const EdgeCut& cut);

// Requires g biconnected; cycle vertices get consecutive fresh ids starting
// at g.peek_fresh_id(), in position order.
CycleExpandResult cycle_expand_detail(const Multigraph& g,
                                      const CycleExpansionSpec& spec);
Multigraph cycle_expand(const Multigraph& g, const CycleExpansionSpec& spec);

// Like cycle_expand but the target may be an articulation point, in which
// case the expansion happens inside the block owning the assignment's darts
// and the remaining blocks re-glue on the new cycle as described on
// CycleExpansionSpec.
CycleExpandResult block_respecting_cycle_expand_detail(
    const Multigraph& g, const CycleExpansionSpec& spec);
Multigraph block_respecting_cycle_expand(const Multigraph& g,
                                         const CycleExpansionSpec& spec);

// The position -> darts layout both expansion variants use; position i gets
// group i's far endpoints. Exposed for the embedding bookkeeping.
std::vector<std::vector<Dart>> expansion_dart_groups(
    const Multigraph& g, const CycleExpansionSpec& spec, bool allow_bundles);

// Collapse a chordless cycle into one fresh vertex (id g.peek_fresh_id()),
// re-attaching every non-cycle dart of the cycle's vertices to it.
Multigraph cycle_contract(const Multigraph& g, const Cycle& c);

// Induce the subgraph on block + cycle, then smooth out degree-2 vertices.
// block must be one connected component of g minus the cycle's vertices.
Multigraph contraction_expansion(const Multigraph& g, const Cycle& c,
                                 const std::set<Vertex>& block);

}  // namespace exact3

#endif
