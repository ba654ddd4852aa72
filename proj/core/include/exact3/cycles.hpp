#ifndef EXACT3_CYCLES_HPP
#define EXACT3_CYCLES_HPP

#include <functional>
#include <optional>
#include <vector>

#include "exact3/multigraph.hpp"

namespace exact3 {

struct CycleQuery {
  std::optional<Vertex> through;   // cycle must contain this vertex
  std::optional<Vertex> avoiding;  // cycle must not contain this vertex
};

// Every chordless cycle of g, each exactly once up to rotation/reflection,
// shortest first (ties broken by the normalized vertex sequence). A pair
// with multiplicity >= 2 contributes exactly one length-2 cycle. Throws
// ArgumentError when through == avoiding.
std::vector<Cycle> chordless_cycles(const Multigraph& g, CycleQuery query = {});

// Streaming form: visit returns false to stop early. Same order.
void for_each_chordless_cycle(const Multigraph& g, CycleQuery query,
                              const std::function<bool(const Cycle&)>& visit);

}  // namespace exact3

#endif
