#include "exact3/blocks.hpp"

#include <algorithm>
#include <functional>
#include <queue>

namespace exact3 {

namespace {

// Hopcroft-Tarjan on the underlying simple graph. A pair with multiplicity
// >= 2 is a 2-edge-connected bond on its own, so the "don't climb back to
// the parent" rule is waived for it.
struct BlockFinder {
  const Multigraph& g;
  std::map<Vertex, int> disc, low;
  int timer = 0;
  std::vector<VertexPair> stack;
  std::vector<std::set<Vertex>> blocks;
  std::set<Vertex> artic;

  explicit BlockFinder(const Multigraph& graph) : g(graph) {}

  void pop_block(const VertexPair& until) {
    std::set<Vertex> blk;
    while (true) {
      VertexPair e = stack.back();
      stack.pop_back();
      blk.insert(e.first);
      blk.insert(e.second);
      if (e == until) break;
    }
    blocks.push_back(std::move(blk));
  }

  void dfs(Vertex v, Vertex parent) {
    disc[v] = low[v] = timer++;
    int children = 0;
    for (Vertex w : g.neighbors(v)) {
      if (w == parent) {
        // A parallel copy back to the parent acts as a back edge; the pair
        // itself is already on the stack from the descent.
        if (g.multiplicity(v, w) >= 2) low[v] = std::min(low[v], disc[w]);
        continue;
      }
      if (!disc.count(w)) {
        ++children;
        VertexPair e = ordered_pair(v, w);
        stack.push_back(e);
        dfs(w, v);
        low[v] = std::min(low[v], low[w]);
        if ((parent != -1 && low[w] >= disc[v]) || (parent == -1 && children > 1))
          artic.insert(v);
        if (low[w] >= disc[v]) pop_block(e);
      } else if (disc[w] < disc[v]) {
        stack.push_back(ordered_pair(v, w));
        low[v] = std::min(low[v], disc[w]);
      }
    }
  }
};

}  // namespace

BlockDecomposition blocks(const Multigraph& g) {
  if (g.order() == 0) throw DomainError("blocks: empty graph");
  Vertex root = g.min_vertex();

  BlockFinder finder(g);
  finder.dfs(root, -1);
  if (finder.disc.size() != g.order()) {
    Vertex missing = -1;
    for (Vertex v : g.vertices())
      if (!finder.disc.count(v)) {
        missing = v;
        break;
      }
    throw DomainError("blocks: graph disconnected, no path between " +
                      std::to_string(root) + " and " + std::to_string(missing));
  }
  if (!finder.stack.empty()) finder.pop_block(finder.stack.front());

  BlockDecomposition out;
  out.blocks = std::move(finder.blocks);
  if (out.blocks.empty()) out.blocks.push_back({root});  // isolated vertex
  out.articulation_points = std::move(finder.artic);
  std::sort(out.blocks.begin(), out.blocks.end(),
            [](const auto& a, const auto& b) { return *a.begin() < *b.begin(); });

  for (int i = 0; i < static_cast<int>(out.blocks.size()); ++i) {
    for (const auto& [pair, mult] : g.edges())
      if (out.blocks[i].count(pair.first) && out.blocks[i].count(pair.second))
        out.edge_block.emplace(pair, i);
    for (Vertex a : out.blocks[i])
      if (out.articulation_points.count(a)) out.block_cut_tree.push_back({i, a});
  }
  return out;
}

bool is_biconnected(const Multigraph& g) {
  if (g.order() == 0) return false;
  if (!g.is_connected()) return false;
  return blocks(g).blocks.size() == 1;
}

}  // namespace exact3
