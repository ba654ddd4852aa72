#ifndef EXACT3_PLANAR_HPP
#define EXACT3_PLANAR_HPP

#include <map>
#include <string>
#include <vector>

#include "exact3/decompose.hpp"
#include "exact3/multigraph.hpp"
#include "exact3/ops.hpp"

namespace exact3 {

// Combinatorial embedding: per vertex, the cyclic order of its darts. Each
// parallel copy contributes its own dart. Planarity is certified, never
// discovered: a rotation is planar iff face tracing satisfies V - E + F = 2.
struct RotationSystem {
  std::map<Vertex, std::vector<Dart>> order;

  void validate(const Multigraph& g) const;  // FormatError on mismatch
};

// Face tracing: follow a dart, then continue with the cyclic successor of
// its reverse. Returns the dart cycles, deterministically ordered.
std::vector<std::vector<Dart>> faces(const Multigraph& g,
                                     const RotationSystem& rot);

// Euler check V - E + F == 2 for a connected g under rot (E counted with
// multiplicity).
bool euler_planar(const Multigraph& g, const RotationSystem& rot);
// The same check per biconnected block, which is the certificate the
// synthesis maintains across gluings.
bool euler_planar_per_block(const Multigraph& g, const RotationSystem& rot);

// The theta embedding of the dumbbell: three faces.
RotationSystem dumbbell_embedding();

struct EmbeddedGraph {
  Multigraph graph;
  RotationSystem rot;
};

struct OrderPreservingExpansion {
  Multigraph graph;
  RotationSystem rot;
  std::vector<Vertex> cycle;
};

// Cycle expansion whose assignment follows the cyclic order of the target's
// darts (up to rotation); the embedding extends along the new cycle and the
// result passes the Euler check. DomainError when the assignment is not a
// rotation of rot.order[target].
OrderPreservingExpansion order_preserving_expand(const Multigraph& g,
                                                 const RotationSystem& rot,
                                                 const CycleExpansionSpec& spec);

// Splice for block gluing: u2's dart sequence is inserted into u1's at the
// given corner of u1's rotation (position 0 by default).
EmbeddedGraph embedded_block_glue(const EmbeddedGraph& g1, Vertex u1,
                                  const EmbeddedGraph& g2, Vertex u2,
                                  int corner = 0);

// Replay a script while maintaining an embedding; every EXPAND must be
// order-preserving for the evolving rotation (DomainError naming the record
// index otherwise). The per-block Euler certificate is asserted throughout.
EmbeddedGraph planar_synthesize(const SynthesisScript& script);

// Embedding text format: one line per vertex, "v: d1 d2 ...".
std::string write_embedding(const RotationSystem& rot);
RotationSystem parse_embedding(const std::string& text);

// Exact embedding-class key: minimum over the canonical-labeling coset and
// both orientations of the relabeled rotation system. Two embedded graphs
// get equal keys iff some isomorphism maps one rotation onto the other or
// its mirror.
std::string embedding_code(const Multigraph& g, const RotationSystem& rot);

}  // namespace exact3

#endif
