#include "exact3/multigraph.hpp"

#include <algorithm>
#include <charconv>
#include <queue>

namespace exact3 {

namespace {
bool g_debug_asserts = [] {
  const char* env = std::getenv("EXACT3_DEBUG_ASSERT");
  return env != nullptr && std::string(env) == "1";
}();
}  // namespace

bool debug_asserts_enabled() { return g_debug_asserts; }
void set_debug_asserts(bool on) { g_debug_asserts = on; }

std::string Dart::to_string() const {
  return std::to_string(at) + "~" + std::to_string(to) + "#" + std::to_string(copy);
}

Dart Dart::parse(const std::string& s) {
  auto tilde = s.find('~');
  auto hash = s.find('#', tilde == std::string::npos ? 0 : tilde);
  if (tilde == std::string::npos || hash == std::string::npos)
    throw FormatError("bad dart '" + s + "', expected at~to#copy");
  Dart d;
  auto num = [&s](std::size_t b, std::size_t e, int& out) {
    auto r = std::from_chars(s.data() + b, s.data() + e, out);
    if (r.ec != std::errc() || r.ptr != s.data() + e)
      throw FormatError("bad dart '" + s + "', expected at~to#copy");
  };
  num(0, tilde, d.at);
  num(tilde + 1, hash, d.to);
  num(hash + 1, s.size(), d.copy);
  return d;
}

void Multigraph::check_vertex(Vertex v, const char* who) const {
  if (!has_vertex(v))
    throw ArgumentError(std::string(who) + ": vertex " + std::to_string(v) +
                        " not in graph");
}

Vertex Multigraph::add_vertex() {
  Vertex v = next_id_++;
  vertices_.insert(v);
  return v;
}

void Multigraph::add_vertex(Vertex v) {
  if (v < 0) throw ArgumentError("add_vertex: negative id");
  vertices_.insert(v);
  next_id_ = std::max(next_id_, v + 1);
}

void Multigraph::add_edge(Vertex u, Vertex v, int multiplicity) {
  if (u == v) throw ArgumentError("add_edge: self-loop at " + std::to_string(u));
  if (multiplicity < 1) throw ArgumentError("add_edge: multiplicity < 1");
  check_vertex(u, "add_edge");
  check_vertex(v, "add_edge");
  edges_[ordered_pair(u, v)] += multiplicity;
}

void Multigraph::set_multiplicity(Vertex u, Vertex v, int multiplicity) {
  if (u == v) throw ArgumentError("set_multiplicity: self-loop");
  if (multiplicity < 0) throw ArgumentError("set_multiplicity: negative");
  check_vertex(u, "set_multiplicity");
  check_vertex(v, "set_multiplicity");
  if (multiplicity == 0)
    edges_.erase(ordered_pair(u, v));
  else
    edges_[ordered_pair(u, v)] = multiplicity;
}

void Multigraph::remove_edge(Vertex u, Vertex v, int multiplicity) {
  auto it = edges_.find(ordered_pair(u, v));
  if (it == edges_.end() || it->second < multiplicity)
    throw ArgumentError("remove_edge: multiplicity underflow on (" +
                        std::to_string(u) + "," + std::to_string(v) + ")");
  it->second -= multiplicity;
  if (it->second == 0) edges_.erase(it);
}

void Multigraph::remove_vertex(Vertex v) {
  check_vertex(v, "remove_vertex");
  for (auto it = edges_.begin(); it != edges_.end();) {
    if (it->first.first == v || it->first.second == v)
      it = edges_.erase(it);
    else
      ++it;
  }
  vertices_.erase(v);
}

int Multigraph::multiplicity(Vertex u, Vertex v) const {
  if (u == v) return 0;
  auto it = edges_.find(ordered_pair(u, v));
  return it == edges_.end() ? 0 : it->second;
}

int Multigraph::degree(Vertex v) const {
  int d = 0;
  for (const auto& [pair, mult] : edges_)
    if (pair.first == v || pair.second == v) d += mult;
  return d;
}

int Multigraph::size() const {
  int m = 0;
  for (const auto& [pair, mult] : edges_) m += mult;
  return m;
}

std::vector<Vertex> Multigraph::neighbors(Vertex v) const {
  std::vector<Vertex> out;
  for (const auto& [pair, mult] : edges_) {
    if (pair.first == v) out.push_back(pair.second);
    else if (pair.second == v) out.push_back(pair.first);
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Dart> Multigraph::darts(Vertex v) const {
  std::vector<Dart> out;
  for (Vertex w : neighbors(v))
    for (int c = 0; c < multiplicity(v, w); ++c) out.emplace_back(v, w, c);
  return out;
}

bool Multigraph::has_dart(const Dart& d) const {
  return d.copy >= 0 && d.copy < multiplicity(d.at, d.to);
}

Vertex Multigraph::min_vertex() const {
  if (vertices_.empty()) throw DomainError("min_vertex: empty graph");
  return *vertices_.begin();
}

bool Multigraph::is_connected() const {
  if (vertices_.empty()) return true;
  std::set<Vertex> seen{min_vertex()};
  std::queue<Vertex> bfs;
  bfs.push(min_vertex());
  while (!bfs.empty()) {
    Vertex v = bfs.front();
    bfs.pop();
    for (Vertex w : neighbors(v))
      if (seen.insert(w).second) bfs.push(w);
  }
  return seen.size() == vertices_.size();
}

int Multigraph::cut_weight(const std::set<Vertex>& side) const {
  int w = 0;
  for (const auto& [pair, mult] : edges_)
    if (side.count(pair.first) != side.count(pair.second)) w += mult;
  return w;
}

Multigraph Multigraph::induced(const std::set<Vertex>& keep) const {
  Multigraph out;
  for (Vertex v : keep) {
    check_vertex(v, "induced");
    out.add_vertex(v);
  }
  for (const auto& [pair, mult] : edges_)
    if (keep.count(pair.first) && keep.count(pair.second))
      out.edges_[pair] = mult;
  out.next_id_ = next_id_;
  return out;
}

Multigraph Multigraph::offset_ids(Vertex offset) const {
  Multigraph out;
  for (Vertex v : vertices_) out.add_vertex(v + offset);
  for (const auto& [pair, mult] : edges_)
    out.edges_[{pair.first + offset, pair.second + offset}] = mult;
  out.next_id_ = next_id_ + offset;
  return out;
}

bool Multigraph::is_simple() const {
  for (const auto& [pair, mult] : edges_)
    if (mult > 1) return false;
  return true;
}

Multigraph from_edges(int n, const std::vector<std::tuple<int, int, int>>& edges) {
  Multigraph g;
  for (int v = 0; v < n; ++v) g.add_vertex(v);
  for (const auto& [u, v, r] : edges) g.add_edge(u, v, r);
  return g;
}

std::vector<std::set<Vertex>> components(const Multigraph& g) {
  std::vector<std::set<Vertex>> out;
  std::set<Vertex> seen;
  for (Vertex start : g.vertices()) {
    if (seen.count(start)) continue;
    std::set<Vertex> comp{start};
    std::queue<Vertex> bfs;
    bfs.push(start);
    while (!bfs.empty()) {
      Vertex v = bfs.front();
      bfs.pop();
      for (Vertex w : g.neighbors(v))
        if (comp.insert(w).second) bfs.push(w);
    }
    seen.insert(comp.begin(), comp.end());
    out.push_back(std::move(comp));
  }
  return out;
}

Cycle::Cycle(std::vector<Vertex> verts) : verts_(std::move(verts)) {
  if (verts_.size() < 2) throw ArgumentError("cycle needs >= 2 vertices");
  std::set<Vertex> distinct(verts_.begin(), verts_.end());
  if (distinct.size() != verts_.size())
    throw ArgumentError("cycle vertices must be distinct");
  // Normalize: least vertex first, then toward the smaller of its neighbors.
  auto least = std::min_element(verts_.begin(), verts_.end());
  std::rotate(verts_.begin(), least, verts_.end());
  if (verts_.size() > 2 && verts_.back() < verts_[1])
    std::reverse(verts_.begin() + 1, verts_.end());
}

bool Cycle::contains(Vertex v) const {
  return std::find(verts_.begin(), verts_.end(), v) != verts_.end();
}

void Cycle::validate_in(const Multigraph& g) const {
  for (Vertex v : verts_)
    if (!g.has_vertex(v))
      throw ArgumentError("cycle vertex " + std::to_string(v) + " not in graph");
  if (verts_.size() == 2) {
    if (g.multiplicity(verts_[0], verts_[1]) < 2)
      throw ArgumentError("length-2 cycle needs multiplicity >= 2");
    return;
  }
  for (std::size_t i = 0; i < verts_.size(); ++i) {
    Vertex a = verts_[i], b = verts_[(i + 1) % verts_.size()];
    if (g.multiplicity(a, b) == 0)
      throw ArgumentError("cycle edge (" + std::to_string(a) + "," +
                          std::to_string(b) + ") missing");
  }
}

bool Cycle::is_chordless_in(const Multigraph& g) const {
  if (verts_.size() == 2) return true;
  for (std::size_t i = 0; i < verts_.size(); ++i)
    for (std::size_t j = i + 1; j < verts_.size(); ++j) {
      bool consecutive = (j == i + 1) || (i == 0 && j == verts_.size() - 1);
      int mult = g.multiplicity(verts_[i], verts_[j]);
      if (consecutive ? mult >= 2 : mult >= 1) return false;
    }
  return true;
}

Multigraph smooth_degree2(const Multigraph& g) {
  Multigraph out = g;
  bool changed = true;
  while (changed) {
    changed = false;
    for (Vertex x : std::vector<Vertex>(out.vertices().begin(), out.vertices().end())) {
      if (out.degree(x) != 2) continue;
      auto nbrs = out.neighbors(x);
      if (nbrs.size() == 2) {
        out.remove_vertex(x);
        out.add_edge(nbrs[0], nbrs[1]);
        changed = true;
      } else if (out.degree(nbrs[0]) > 2) {
        // Merging would form a self-loop; drop the vertex with its double
        // edge. A terminal (u,v)^2 component is left alone.
        out.remove_vertex(x);
        changed = true;
      }
    }
  }
  return out;
}

}  // namespace exact3
