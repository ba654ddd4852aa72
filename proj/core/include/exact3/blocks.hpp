#ifndef EXACT3_BLOCKS_HPP
#define EXACT3_BLOCKS_HPP

#include <map>
#include <set>
#include <vector>

#include "exact3/multigraph.hpp"

namespace exact3 {

// Blocks (maximal biconnected subgraphs), articulation points, and the
// block-cut tree. Every stored edge pair belongs to exactly one block;
// parallel copies never split across blocks.
struct BlockDecomposition {
  std::vector<std::set<Vertex>> blocks;     // sorted by smallest member
  std::set<Vertex> articulation_points;
  // Bipartite tree edges (block index, articulation vertex).
  std::vector<std::pair<int, Vertex>> block_cut_tree;
  std::map<VertexPair, int> edge_block;     // pair -> index into blocks

  int block_of_edge(Vertex u, Vertex v) const {
    return edge_block.at(ordered_pair(u, v));
  }
};

// Requires g connected with order >= 1; throws DomainError naming two
// mutually unreachable vertices otherwise.
BlockDecomposition blocks(const Multigraph& g);

// Connected and free of articulation points. A single vertex, and the
// dumbbell, count as biconnected.
bool is_biconnected(const Multigraph& g);

}  // namespace exact3

#endif
