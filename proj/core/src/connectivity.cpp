#include "exact3/connectivity.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <queue>

namespace exact3 {

namespace {

// Dense residual-network max flow, BFS augmenting paths. Undirected edges
// start with their multiplicity as capacity in both directions; pushing
// along one direction frees the other, which is exactly the undirected
// residual rule.
struct FlowNet {
  int n;
  std::vector<int> cap;  // n*n residual
  std::vector<Vertex> ids;
  std::map<Vertex, int> dense;

  explicit FlowNet(const Multigraph& g)
      : n(static_cast<int>(g.order())),
        cap(static_cast<std::size_t>(n) * n, 0),
        ids(g.vertices().begin(), g.vertices().end()) {
    for (int i = 0; i < n; ++i) dense[ids[i]] = i;
    for (const auto& [pair, mult] : g.edges()) {
      int a = dense[pair.first], b = dense[pair.second];
      cap[a * n + b] = cap[b * n + a] = mult;
    }
  }

  int max_flow(int s, int t) {
    std::vector<int> base = cap;  // restore afterwards so the net is reusable
    int total = 0;
    std::vector<int> prev(n);
    while (true) {
      std::fill(prev.begin(), prev.end(), -1);
      prev[s] = s;
      std::queue<int> bfs;
      bfs.push(s);
      while (!bfs.empty() && prev[t] < 0) {
        int v = bfs.front();
        bfs.pop();
        for (int w = 0; w < n; ++w)
          if (prev[w] < 0 && cap[v * n + w] > 0) {
            prev[w] = v;
            bfs.push(w);
          }
      }
      if (prev[t] < 0) break;
      int delta = INT32_MAX;
      for (int v = t; v != s; v = prev[v])
        delta = std::min(delta, cap[prev[v] * n + v]);
      for (int v = t; v != s; v = prev[v]) {
        cap[prev[v] * n + v] -= delta;
        cap[v * n + prev[v]] += delta;
      }
      total += delta;
    }
    last_cut_side.assign(n, false);
    std::queue<int> bfs;
    bfs.push(s);
    last_cut_side[s] = true;
    while (!bfs.empty()) {
      int v = bfs.front();
      bfs.pop();
      for (int w = 0; w < n; ++w)
        if (!last_cut_side[w] && cap[v * n + w] > 0) {
          last_cut_side[w] = true;
          bfs.push(w);
        }
    }
    cap = std::move(base);
    return total;
  }

  std::vector<char> last_cut_side;  // source side of the last min cut
};

void require_order2(const Multigraph& g, const char* who) {
  if (g.order() < 2) throw DomainError(std::string(who) + ": order < 2");
}

}  // namespace

int local_connectivity(const Multigraph& g, Vertex u, Vertex v) {
  if (u == v) throw ArgumentError("local_connectivity: u == v");
  if (!g.has_vertex(u) || !g.has_vertex(v))
    throw ArgumentError("local_connectivity: vertex not in graph");
  FlowNet net(g);
  return net.max_flow(net.dense.at(u), net.dense.at(v));
}

int CutTree::lambda(Vertex u, Vertex v) const {
  auto index = [&](Vertex x) {
    auto it = std::lower_bound(ids.begin(), ids.end(), x);
    if (it == ids.end() || *it != x)
      throw ArgumentError("cut_tree: vertex not in graph");
    return static_cast<int>(it - ids.begin());
  };
  int a = index(u), b = index(v);
  if (a == b) throw ArgumentError("cut_tree: u == v");
  // Walk both nodes toward the root; the path minimum is realized on the
  // two legs up to the meeting point.
  std::map<int, int> min_to_root_a;
  int best = INT32_MAX;
  int x = a, m = INT32_MAX;
  while (x >= 0) {
    min_to_root_a[x] = m;
    if (parent[x] >= 0) m = std::min(m, weight[x]);
    x = parent[x];
  }
  x = b;
  m = INT32_MAX;
  while (true) {
    auto hit = min_to_root_a.find(x);
    if (hit != min_to_root_a.end()) {
      best = std::min(hit->second, m);
      break;
    }
    m = std::min(m, weight[x]);
    x = parent[x];
  }
  return best;
}

int CutTree::min_weight() const {
  int best = INT32_MAX;
  for (std::size_t i = 0; i < parent.size(); ++i)
    if (parent[i] >= 0) best = std::min(best, weight[i]);
  return best;
}

CutTree cut_tree(const Multigraph& g) {
  require_order2(g, "cut_tree");
  if (!g.is_connected()) throw DomainError("cut_tree: graph disconnected");
  FlowNet net(g);
  int n = net.n;
  CutTree tree;
  tree.ids = net.ids;
  tree.parent.assign(n, 0);
  tree.parent[0] = -1;
  tree.weight.assign(n, 0);
  for (int i = 1; i < n; ++i) {
    int f = net.max_flow(i, tree.parent[i]);
    tree.weight[i] = f;
    for (int j = i + 1; j < n; ++j)
      if (net.last_cut_side[j] && tree.parent[j] == tree.parent[i])
        tree.parent[j] = i;
  }
  return tree;
}

ConnectivityReport is_exactly_k(const Multigraph& g, int k) {
  if (k < 1) throw ArgumentError("is_exactly_k: k < 1");
  require_order2(g, "is_exactly_k");
  ConnectivityReport report;
  report.k = k;
  if (!g.is_connected()) {
    // Some pair is unreachable, so a witness with lambda != k must exist;
    // report the lexicographically first one.
    for (Vertex u : g.vertices())
      for (Vertex v : g.vertices()) {
        if (v <= u) continue;
        int lam = local_connectivity(g, u, v);
        if (lam != k) {
          report.exact = false;
          report.witness = {u, v, lam};
          return report;
        }
      }
    throw InvariantError("is_exactly_k: disconnected graph with no witness");
  }
  CutTree tree = cut_tree(g);
  bool all_k = true;
  for (std::size_t i = 0; i < tree.parent.size() && all_k; ++i)
    if (tree.parent[i] >= 0 && tree.weight[i] != k) all_k = false;
  if (all_k) {
    report.exact = true;
    return report;
  }
  for (Vertex u : g.vertices())
    for (Vertex v : g.vertices()) {
      if (v <= u) continue;
      int lam = tree.lambda(u, v);
      if (lam != k) {
        report.exact = false;
        report.witness = {u, v, lam};
        return report;
      }
    }
  throw InvariantError("is_exactly_k: tree said non-exact but no witness found");
}

EdgeCut make_cut(const Multigraph& g, const std::set<Vertex>& side) {
  if (side.empty() || side.size() >= g.order())
    throw ArgumentError("make_cut: side must be a proper nonempty subset");
  EdgeCut cut;
  for (Vertex v : g.vertices())
    (side.count(v) ? cut.side_a : cut.side_b).insert(v);
  if (!cut.side_a.count(g.min_vertex())) std::swap(cut.side_a, cut.side_b);
  for (const auto& [pair, mult] : g.edges())
    if (cut.side_a.count(pair.first) != cut.side_a.count(pair.second))
      cut.crossing.emplace(pair, mult);
  cut.trivial = cut.side_a.size() == 1 || cut.side_b.size() == 1;
  return cut;
}

std::vector<EdgeCut> minimum_cuts(const Multigraph& g, bool nontrivial_only) {
  require_order2(g, "minimum_cuts");
  if (!g.is_connected()) throw DomainError("minimum_cuts: graph disconnected");
  std::vector<Vertex> ids(g.vertices().begin(), g.vertices().end());
  int n = static_cast<int>(ids.size());
  if (n > 30) throw DomainError("minimum_cuts: order too large for enumeration");

  int best = INT32_MAX;
  std::vector<std::set<Vertex>> sides;
  // ids[0] stays on side_a, so each bipartition is visited once.
  for (uint32_t mask = 0; mask + 1 < (1u << (n - 1)); ++mask) {
    std::set<Vertex> side{ids[0]};
    for (int i = 1; i < n; ++i)
      if (mask & (1u << (i - 1))) side.insert(ids[i]);
    int w = g.cut_weight(side);
    if (w < best) {
      best = w;
      sides.clear();
    }
    if (w == best) sides.push_back(std::move(side));
  }

  std::vector<EdgeCut> out;
  for (const auto& side : sides) {
    EdgeCut cut = make_cut(g, side);
    if (nontrivial_only && cut.trivial) continue;
    out.push_back(std::move(cut));
  }
  std::sort(out.begin(), out.end(), [](const EdgeCut& a, const EdgeCut& b) {
    return std::vector<Vertex>(a.side_a.begin(), a.side_a.end()) <
           std::vector<Vertex>(b.side_a.begin(), b.side_a.end());
  });
  return out;
}

Multigraph collapse_supernodes(const Multigraph& g, int k) {
  if (k < 1) throw ArgumentError("collapse_supernodes: k < 1");
  require_order2(g, "collapse_supernodes");
  if (!g.is_connected())
    throw DomainError("collapse_supernodes: graph disconnected");
  CutTree tree = cut_tree(g);
  if (tree.min_weight() < k)
    throw DomainError("collapse_supernodes: graph is not " + std::to_string(k) +
                      "-edge-connected");

  // Classes are the components of the cut tree after removing edges of
  // weight <= k; Menger makes "joined by > k disjoint paths" transitive.
  int n = static_cast<int>(tree.ids.size());
  std::vector<int> cls(n);
  std::iota(cls.begin(), cls.end(), 0);
  std::function<int(int)> find = [&](int x) {
    return cls[x] == x ? x : cls[x] = find(cls[x]);
  };
  for (int i = 0; i < n; ++i)
    if (tree.parent[i] >= 0 && tree.weight[i] > k)
      cls[find(i)] = find(tree.parent[i]);

  std::map<int, Vertex> class_rep;  // union-find root -> smallest member id
  for (int i = 0; i < n; ++i) {
    int root = find(i);
    auto it = class_rep.find(root);
    if (it == class_rep.end() || tree.ids[i] < it->second)
      class_rep[root] = tree.ids[i];
  }
  std::map<Vertex, Vertex> to_rep;
  for (int i = 0; i < n; ++i) to_rep[tree.ids[i]] = class_rep[find(i)];

  // Sanity check the equivalence: members of one class really are joined by
  // more than k disjoint paths pairwise.
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (find(i) == find(j) && tree.lambda(tree.ids[i], tree.ids[j]) <= k)
        throw InvariantError("collapse_supernodes: class not an equivalence class");

  Multigraph out;
  for (const auto& [root, r] : class_rep) out.add_vertex(r);
  for (const auto& [pair, mult] : g.edges()) {
    Vertex a = to_rep[pair.first], b = to_rep[pair.second];
    if (a != b) out.add_edge(a, b, mult);
  }
  if (out.order() > 1) {
    ConnectivityReport check = is_exactly_k(out, k);
    if (!check.exact)
      throw InvariantError("collapse_supernodes: result not exactly k");
  }
  return out;
}

}  // namespace exact3
