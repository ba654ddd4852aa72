#include "exact3/generators.hpp"

namespace exact3 {

Multigraph dumbbell() { return from_edges(2, {{0, 1, 3}}); }

Multigraph complete_graph(int n) {
  if (n < 1) throw ArgumentError("complete_graph: n < 1");
  Multigraph g;
  for (int v = 0; v < n; ++v) g.add_vertex(v);
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) g.add_edge(u, v);
  return g;
}

Multigraph cycle_graph(int n) {
  if (n < 3) throw ArgumentError("cycle_graph: n < 3");
  Multigraph g;
  for (int v = 0; v < n; ++v) g.add_vertex(v);
  for (int v = 0; v < n; ++v) g.add_edge(v, (v + 1) % n);
  return g;
}

Multigraph complete_bipartite(int a, int b) {
  if (a < 1 || b < 1) throw ArgumentError("complete_bipartite: parts empty");
  Multigraph g;
  for (int v = 0; v < a + b; ++v) g.add_vertex(v);
  for (int u = 0; u < a; ++u)
    for (int v = a; v < a + b; ++v) g.add_edge(u, v);
  return g;
}

Multigraph harary3(int n) {
  if (n < 4) throw ArgumentError("harary3: n < 4");
  Multigraph g = cycle_graph(n);
  if (n % 2 == 0) {
    for (int v = 0; v < n / 2; ++v) g.add_edge(v, v + n / 2);
  } else {
    for (int v = 0; v <= (n - 1) / 2; ++v) g.add_edge(v, (v + (n + 1) / 2) % n);
  }
  return g;
}

}  // namespace exact3
