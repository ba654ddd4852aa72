#ifndef EXACT3_DECOMPOSE_HPP
#define EXACT3_DECOMPOSE_HPP

#include <optional>
#include <set>
#include <string>
#include <vector>

#include "exact3/multigraph.hpp"
#include "exact3/ops.hpp"

namespace exact3 {

// A chordless cycle plus the connected components of the graph minus the
// cycle's vertices. Size > 1 makes the cycle an articulation cycle.
struct CPartition {
  Cycle cycle;
  std::vector<std::set<Vertex>> components;  // ordered by smallest member
  std::size_t size() const { return components.size(); }
};

CPartition c_partition(const Multigraph& g, const Cycle& c);

// Cycle vertices colored red when adjacent to the chosen component, blue
// otherwise. In a quasi 3-regular exactly-3 graph, an articulation cycle
// through the high-degree vertex has at least 4 red-blue edges.
struct ColoredCycle {
  Cycle cycle;
  std::set<Vertex> block;
  std::vector<bool> red;  // parallel to cycle.vertices()
  int bicolored_edges() const;
};

ColoredCycle color_cycle(const Multigraph& g, const Cycle& c,
                         const std::set<Vertex>& block);

// True iff c is chordless, at most one of its vertices has degree != 3,
// its C-partition has size <= 1, and contracting it actually keeps the
// graph exactly 3-edge-connected (the contraction is executed, not
// inferred). g must be biconnected and exactly 3-edge-connected.
bool is_collapsible(const Multigraph& g, const Cycle& c);

// Shortest-first scan of the chordless cycles avoiding `avoid`; the
// existence theorem guarantees a hit, so running out is an InvariantError.
// avoid must have degree 3.
Cycle find_collapsible_cycle(const Multigraph& g, Vertex avoid);

// One replayable synthesis record. Text forms:
//   DUMBBELL <id>
//   GLUE <ga> <ua> <gb> <ub> <result-id>
//   EXPAND <g> <u> <d'> <dart,dart,...>
struct ScriptOp {
  enum class Kind { Dumbbell, Glue, Expand };
  Kind kind = Kind::Dumbbell;
  std::string a;            // Dumbbell: id; Glue: ga; Expand: g
  Vertex ua = -1;           // Glue: ua; Expand: u
  std::string b;            // Glue: gb
  Vertex ub = -1;           // Glue: ub
  std::string result;       // Glue: result id
  int cycle_size = 0;       // Expand
  std::vector<Dart> darts;  // Expand

  std::string to_text() const;
};

struct SynthesisScript {
  std::vector<ScriptOp> ops;
  std::optional<std::string> provenance;  // canonical code hex of the source

  int dumbbells() const;
  int expansions() const;
  int gluings() const;

  std::string to_text() const;
  static SynthesisScript parse(const std::string& text);
};

// Reduce an exactly 3-edge-connected graph (order >= 2) to a script of
// dumbbells, block gluings and cycle expansions; replay(decompose(g)) is
// isomorphic to g.
SynthesisScript decompose(const Multigraph& g);

// Deterministic interpreter for the script format. Reference problems and
// operations invalid for the current state surface as FormatError.
Multigraph replay(const SynthesisScript& script);

// Equivalent script with every gluing in front (building a 3-thick tree of
// dumbbells) and every expansion after, block-respecting. Scripts without
// gluings pass through unchanged.
SynthesisScript thick_tree_factor(const SynthesisScript& script);

}  // namespace exact3

#endif
