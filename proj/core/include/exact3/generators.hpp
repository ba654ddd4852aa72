#ifndef EXACT3_GENERATORS_HPP
#define EXACT3_GENERATORS_HPP

#include "exact3/multigraph.hpp"

namespace exact3 {

// Two vertices, three parallel edges: the synthesis seed.
Multigraph dumbbell();

Multigraph complete_graph(int n);
Multigraph cycle_graph(int n);
Multigraph complete_bipartite(int a, int b);

// Harary graph H_{3,n}, n >= 4: the n-cycle plus diameters (even n) or the
// near-diameters i -- i+(n+1)/2 for i <= (n-1)/2 (odd n, vertex 0 ends up
// with degree 4). Minimum and exactly 3-edge-connected.
Multigraph harary3(int n);

}  // namespace exact3

#endif
