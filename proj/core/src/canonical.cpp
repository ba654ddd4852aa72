#include "exact3/canonical.hpp"

#include <algorithm>
#include <cstdint>
#include <numeric>

namespace exact3 {

namespace {

// Individualization-refinement with exhaustive backtracking: refine colors
// by (neighbor color, multiplicity) multisets to a fixpoint, then branch on
// every vertex of the first non-singleton cell. The minimum encoding over
// all discrete leaves is canonical; no heuristic shortcuts, so equality of
// codes is exactly isomorphism.
struct Canonicalizer {
  int n;
  std::vector<uint16_t> mult;  // n*n, symmetric
  std::string best;
  std::vector<std::vector<int>>* all_best = nullptr;  // optional leaf colorings

  uint16_t at(int i, int j) const { return mult[i * n + j]; }

  // colors[v] = cell index; cells are numbered by increasing signature so
  // the partition order is isomorphism-invariant.
  void refine(std::vector<int>& colors) const {
    using Sig = std::pair<int, std::vector<std::pair<int, int>>>;
    while (true) {
      std::vector<Sig> sigs(n);
      for (int v = 0; v < n; ++v) {
        sigs[v].first = colors[v];
        for (int w = 0; w < n; ++w)
          if (at(v, w)) sigs[v].second.push_back({colors[w], at(v, w)});
        std::sort(sigs[v].second.begin(), sigs[v].second.end());
      }
      std::vector<Sig> order = sigs;
      std::sort(order.begin(), order.end());
      order.erase(std::unique(order.begin(), order.end()), order.end());
      std::vector<int> next(n);
      for (int v = 0; v < n; ++v)
        next[v] = static_cast<int>(
            std::lower_bound(order.begin(), order.end(), sigs[v]) - order.begin());
      if (next == colors) return;
      colors = next;
    }
  }

  std::string encode(const std::vector<int>& colors) const {
    std::vector<int> pos(n);  // canonical position -> vertex
    std::iota(pos.begin(), pos.end(), 0);
    std::sort(pos.begin(), pos.end(),
              [&](int a, int b) { return colors[a] < colors[b]; });
    std::string code;
    code.push_back(static_cast<char>(n));
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j)
        code.push_back(static_cast<char>(at(pos[i], pos[j])));
    return code;
  }

  void search(std::vector<int> colors, std::vector<int>* best_colors) {
    refine(colors);
    int cell = -1;
    for (int c = 0; c < n && cell < 0; ++c) {
      int count = 0;
      for (int v = 0; v < n; ++v) count += colors[v] == c;
      if (count > 1) cell = c;
    }
    if (cell < 0) {  // discrete
      std::string code = encode(colors);
      if (best.empty() || code < best) {
        best = code;
        if (best_colors) *best_colors = colors;
        if (all_best) {
          all_best->clear();
          all_best->push_back(colors);
        }
      } else if (all_best && code == best) {
        all_best->push_back(colors);
      }
      return;
    }
    for (int v = 0; v < n; ++v) {
      if (colors[v] != cell) continue;
      std::vector<int> branch = colors;
      for (int w = 0; w < n; ++w)
        if (branch[w] >= cell && w != v) ++branch[w];
      search(std::move(branch), best_colors);
    }
  }
};

}  // namespace

CanonicalForm canonical_form(const Multigraph& g) {
  int n = static_cast<int>(g.order());
  if (n > 255) throw DomainError("canonical_form: order > 255 unsupported");

  std::vector<Vertex> ids(g.vertices().begin(), g.vertices().end());
  std::map<Vertex, int> dense;
  for (int i = 0; i < n; ++i) dense[ids[i]] = i;

  Canonicalizer cz{n, std::vector<uint16_t>(static_cast<std::size_t>(n) * n, 0), {}};
  for (const auto& [pair, m] : g.edges()) {
    if (m > 255) throw DomainError("canonical_form: multiplicity > 255");
    int a = dense[pair.first], b = dense[pair.second];
    cz.mult[a * n + b] = cz.mult[b * n + a] = static_cast<uint16_t>(m);
  }

  CanonicalForm out;
  if (n == 0) {
    out.code.push_back(0);
    return out;
  }
  std::vector<int> best_colors;
  cz.search(std::vector<int>(n, 0), &best_colors);
  out.code = std::move(cz.best);

  // best_colors is discrete; canonical position = rank of the color.
  std::vector<int> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(),
            [&](int a, int b) { return best_colors[a] < best_colors[b]; });
  std::vector<int> position(n);
  for (int p = 0; p < n; ++p) position[order[p]] = p;
  for (int i = 0; i < n; ++i) out.labeling[ids[i]] = position[i];
  return out;
}

std::string canonical_code(const Multigraph& g) { return canonical_form(g).code; }

std::vector<std::map<Vertex, int>> canonical_labelings(const Multigraph& g) {
  int n = static_cast<int>(g.order());
  if (n == 0) return {{}};
  std::vector<Vertex> ids(g.vertices().begin(), g.vertices().end());
  std::map<Vertex, int> dense;
  for (int i = 0; i < n; ++i) dense[ids[i]] = i;
  Canonicalizer cz{n, std::vector<uint16_t>(static_cast<std::size_t>(n) * n, 0),
                   {}};
  for (const auto& [pair, m] : g.edges()) {
    int a = dense[pair.first], b = dense[pair.second];
    cz.mult[a * n + b] = cz.mult[b * n + a] = static_cast<uint16_t>(m);
  }
  std::vector<std::vector<int>> leaves;
  cz.all_best = &leaves;
  cz.search(std::vector<int>(n, 0), nullptr);

  std::vector<std::map<Vertex, int>> out;
  std::set<std::vector<int>> seen;
  for (const auto& colors : leaves) {
    std::vector<int> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(),
              [&](int a, int b) { return colors[a] < colors[b]; });
    std::vector<int> position(n);
    for (int p = 0; p < n; ++p) position[order[p]] = p;
    if (!seen.insert(position).second) continue;
    std::map<Vertex, int> lab;
    for (int i = 0; i < n; ++i) lab[ids[i]] = position[i];
    out.push_back(std::move(lab));
  }
  return out;
}

bool is_isomorphic(const Multigraph& g, const Multigraph& h) {
  if (g.order() != h.order() || g.size() != h.size()) return false;
  return canonical_code(g) == canonical_code(h);
}

std::string to_hex(const std::string& code) {
  static const char* digits = "0123456789abcdef";
  std::string out;
  out.reserve(code.size() * 2);
  for (unsigned char c : code) {
    out.push_back(digits[c >> 4]);
    out.push_back(digits[c & 0xf]);
  }
  return out;
}

}  // namespace exact3
