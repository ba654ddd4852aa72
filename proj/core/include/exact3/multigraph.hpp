#ifndef EXACT3_MULTIGRAPH_HPP
#define EXACT3_MULTIGRAPH_HPP

#include <compare>
#include <cstdint>
#include <map>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "exact3/errors.hpp"

namespace exact3 {

using Vertex = int;
using VertexPair = std::pair<Vertex, Vertex>;  // always stored (min,max)

inline VertexPair ordered_pair(Vertex u, Vertex v) {
  return u < v ? VertexPair{u, v} : VertexPair{v, u};
}

// One endpoint instance of one parallel copy of an edge: the copy-index'th
// copy of edge {at,to}, seen from `at`. Parallel copies of the same pair get
// copy indices 0..multiplicity-1. Darts are how operations that must tell
// parallel edges apart (vertex gluing, rotation systems) address them.
struct Dart {
  Vertex at = -1;
  Vertex to = -1;
  int copy = 0;

  Dart() = default;
  Dart(Vertex a, Vertex t, int c) : at(a), to(t), copy(c) {}
  Dart reversed() const { return Dart(to, at, copy); }
  auto operator<=>(const Dart&) const = default;

  std::string to_string() const;          // "at~to#copy"
  static Dart parse(const std::string&);  // inverse of to_string
};

// Loopless undirected multigraph. Vertices are opaque dense-ish integer ids
// (holes appear after contractions); edges are a pair -> multiplicity map.
// Operations in this library never mutate their inputs; they copy and return.
class Multigraph {
 public:
  Multigraph() = default;

  // Fresh ids are handed out by a monotone counter so that replaying a
  // recorded operation sequence allocates identically every time.
  Vertex add_vertex();
  void add_vertex(Vertex v);
  void add_edge(Vertex u, Vertex v, int multiplicity = 1);
  void set_multiplicity(Vertex u, Vertex v, int multiplicity);  // 0 erases
  void remove_edge(Vertex u, Vertex v, int multiplicity = 1);
  void remove_vertex(Vertex v);  // drops incident edges

  bool has_vertex(Vertex v) const { return vertices_.count(v) != 0; }
  int multiplicity(Vertex u, Vertex v) const;
  int degree(Vertex v) const;

  std::size_t order() const { return vertices_.size(); }
  // Edge count with multiplicity (m in the paper's counting identities).
  int size() const;
  std::size_t distinct_edge_count() const { return edges_.size(); }

  const std::set<Vertex>& vertices() const { return vertices_; }
  const std::map<VertexPair, int>& edges() const { return edges_; }

  // Distinct neighbors, ascending.
  std::vector<Vertex> neighbors(Vertex v) const;
  // All darts at v: (v,w,0..mult-1) grouped by ascending w.
  std::vector<Dart> darts(Vertex v) const;
  bool has_dart(const Dart& d) const;

  Vertex min_vertex() const;
  bool is_connected() const;
  // Sum of multiplicities of all edges with exactly one endpoint in side,
  // i.e. the cardinality of the cut <side, V - side>.
  int cut_weight(const std::set<Vertex>& side) const;

  // Subgraph induced on `keep`, ids preserved (counter carried over).
  Multigraph induced(const std::set<Vertex>& keep) const;
  // Copy with every vertex v renamed to v + offset.
  Multigraph offset_ids(Vertex offset) const;

  bool is_simple() const;
  Vertex peek_fresh_id() const { return next_id_; }

  friend bool operator==(const Multigraph&, const Multigraph&) = default;

 private:
  void check_vertex(Vertex v, const char* who) const;

  std::set<Vertex> vertices_;
  std::map<VertexPair, int> edges_;
  Vertex next_id_ = 0;
};

// Convenience builder: vertices 0..n-1 plus the given (u,v,multiplicity)
// triples; multiplicities of repeated pairs accumulate.
Multigraph from_edges(int n, const std::vector<std::tuple<int, int, int>>& edges);

// Connected components as vertex sets, ordered by smallest member.
std::vector<std::set<Vertex>> components(const Multigraph& g);

// A cycle as a vertex sequence; length 2 denotes a double edge. Stored in
// normalized rotation: lexicographically least vertex first, then toward its
// smaller cycle-neighbor, so equal cycles compare equal.
class Cycle {
 public:
  explicit Cycle(std::vector<Vertex> verts);

  const std::vector<Vertex>& vertices() const { return verts_; }
  std::size_t length() const { return verts_.size(); }
  bool contains(Vertex v) const;

  // Throws unless consecutive vertices are adjacent in g and, for length 2,
  // the pair has multiplicity >= 2.
  void validate_in(const Multigraph& g) const;
  // No edge between non-consecutive cycle vertices, and no consecutive pair
  // of a cycle of length >= 3 with multiplicity >= 2 (a double edge on the
  // cycle counts as a chord).
  bool is_chordless_in(const Multigraph& g) const;

  auto operator<=>(const Cycle&) const = default;

 private:
  std::vector<Vertex> verts_;
};

// Repeatedly splices out degree-2 vertices: the two edges around such a
// vertex merge into one (raising a multiplicity when the merged pair already
// exists). A degree-2 vertex whose both endpoints lead to the same neighbor
// u is deleted together with its double edge when u has other edges left;
// a bare double-edge component (u,v)^2 stays as it is.
Multigraph smooth_degree2(const Multigraph& g);

}  // namespace exact3

#endif
