#include "exact3/cycles.hpp"

#include <algorithm>

namespace exact3 {

namespace {

// Grows chordless paths from a start vertex s using only vertices > s, so
// each cycle is found exactly once with its least vertex first. Closing back
// to s is only allowed (and forced) when the tip is adjacent to s; interior
// adjacency to s or to a non-tip path vertex would be a chord.
struct Search {
  const Multigraph& g;
  std::optional<Vertex> avoiding;
  std::vector<Vertex> path;
  std::vector<Cycle> found;

  bool usable(Vertex v) const { return !(avoiding && *avoiding == v); }

  void extend() {
    Vertex s = path.front();
    Vertex tip = path.back();
    for (Vertex w : g.neighbors(tip)) {
      if (w <= s || !usable(w)) continue;
      if (g.multiplicity(tip, w) != 1) continue;  // double edge = chord
      if (std::find(path.begin(), path.end(), w) != path.end()) continue;
      bool chord = false;
      for (std::size_t i = 1; i + 1 < path.size(); ++i)
        if (g.multiplicity(path[i], w) > 0) {
          chord = true;
          break;
        }
      if (chord) continue;
      if (path.size() == 1) {  // the edge to s is the path edge, keep going
        path.push_back(w);
        extend();
        path.pop_back();
        continue;
      }
      // Adjacency to s means the cycle must close here: extending past w
      // would leave (w,s) as a chord. Multiplicity >= 2 on the closing
      // edge is itself a chord, so that branch is dead.
      int to_s = g.multiplicity(w, s);
      path.push_back(w);
      if (to_s == 1) {
        if (path.size() >= 3 && path[1] < path.back())
          found.emplace_back(path);  // emit one of the two directions
      } else if (to_s == 0) {
        extend();
      }
      path.pop_back();
    }
  }
};

}  // namespace

std::vector<Cycle> chordless_cycles(const Multigraph& g, CycleQuery query) {
  if (query.through && query.avoiding && *query.through == *query.avoiding)
    throw ArgumentError("chordless_cycles: through == avoiding");
  if (query.through && !g.has_vertex(*query.through))
    throw ArgumentError("chordless_cycles: through vertex not in graph");
  if (query.avoiding && !g.has_vertex(*query.avoiding))
    throw ArgumentError("chordless_cycles: avoiding vertex not in graph");

  std::vector<Cycle> out;
  for (const auto& [pair, mult] : g.edges())
    if (mult >= 2) out.emplace_back(std::vector<Vertex>{pair.first, pair.second});

  Search search{g, query.avoiding, {}, {}};
  for (Vertex s : g.vertices()) {
    if (!search.usable(s)) continue;
    search.path = {s};
    search.extend();
  }
  out.insert(out.end(), search.found.begin(), search.found.end());

  if (query.through) {
    std::erase_if(out, [&](const Cycle& c) { return !c.contains(*query.through); });
  }
  if (query.avoiding) {
    std::erase_if(out, [&](const Cycle& c) { return c.contains(*query.avoiding); });
  }
  std::sort(out.begin(), out.end(), [](const Cycle& a, const Cycle& b) {
    if (a.length() != b.length()) return a.length() < b.length();
    return a.vertices() < b.vertices();
  });
  return out;
}

void for_each_chordless_cycle(const Multigraph& g, CycleQuery query,
                              const std::function<bool(const Cycle&)>& visit) {
  for (const Cycle& c : chordless_cycles(g, query))
    if (!visit(c)) return;
}

}  // namespace exact3
