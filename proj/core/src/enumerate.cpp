#include "exact3/enumerate.hpp"

#include <algorithm>
#include <atomic>
#include <mutex>
#include <thread>

#include "exact3/blocks.hpp"
#include "exact3/canonical.hpp"
#include "exact3/connectivity.hpp"
#include "exact3/generators.hpp"
#include "exact3/planar.hpp"

namespace exact3 {

namespace {

// Distinct far-endpoint sequences for the single-dart cycle positions; two
// sequences that are reverses of each other give isomorphic expansions, so
// only the lexicographically smaller one is produced. Remaining duplicates
// die in the canonical dedup set.
void far_sequences(const std::vector<std::pair<Vertex, int>>& pool, int length,
                   std::vector<Vertex>& prefix,
                   std::vector<std::pair<Vertex, int>>& remaining,
                   const std::function<void(const std::vector<Vertex>&)>& sink) {
  if (static_cast<int>(prefix.size()) == length) {
    std::vector<Vertex> reversed(prefix.rbegin(), prefix.rend());
    if (reversed < prefix) return;
    sink(prefix);
    return;
  }
  for (auto& [far, count] : remaining) {
    if (count == 0) continue;
    --count;
    prefix.push_back(far);
    far_sequences(pool, length, prefix, remaining, sink);
    prefix.pop_back();
    ++count;
  }
}

// All expansion specs of g whose cycle size stays within cap, up to the
// rotation/reflection symmetry of the created cycle.
std::vector<CycleExpansionSpec> expansion_specs(const Multigraph& g, int cap) {
  std::vector<CycleExpansionSpec> specs;
  for (Vertex u : g.vertices()) {
    int d = g.degree(u);
    std::vector<std::pair<Vertex, int>> pool;
    for (Vertex w : g.neighbors(u)) pool.push_back({w, g.multiplicity(u, w)});
    for (int d_prime = 2; d_prime <= std::min(d, cap); ++d_prime) {
      std::vector<Vertex> prefix;
      auto remaining = pool;
      far_sequences(pool, d_prime - 1, prefix, remaining,
                    [&](const std::vector<Vertex>& seq) {
                      CycleExpansionSpec spec;
                      spec.target = u;
                      spec.cycle_size = d_prime;
                      std::map<Vertex, int> used;
                      for (Vertex far : seq)
                        spec.assignment.emplace_back(u, far, used[far]++);
                      for (const auto& [far, count] : pool)
                        for (int c = used[far]; c < count; ++c)
                          spec.assignment.emplace_back(u, far, c);
                      specs.push_back(std::move(spec));
                    });
    }
  }
  return specs;
}

struct ClassStore {
  // order -> canonical code -> representative (embedding carried when the
  // planar pipeline runs)
  std::map<int, std::map<std::string, EmbeddedGraph>> by_order;
  std::mutex mutex;
  long long total = 0;

  bool insert(int order, std::string code, EmbeddedGraph g) {
    std::lock_guard<std::mutex> lock(mutex);
    auto [it, fresh] = by_order[order].emplace(std::move(code), std::move(g));
    if (fresh) ++total;
    return fresh;
  }
};

void run_parallel(int jobs, std::size_t count,
                  const std::function<void(std::size_t)>& work) {
  if (jobs <= 1 || count <= 1) {
    for (std::size_t i = 0; i < count; ++i) work(i);
    return;
  }
  std::vector<std::thread> pool;
  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;
  for (int t = 0; t < jobs; ++t)
    pool.emplace_back([&] {
      while (true) {
        std::size_t i = next.fetch_add(1);
        if (i >= count) return;
        try {
          work(i);
        } catch (...) {
          std::lock_guard<std::mutex> lock(failure_mutex);
          if (!failure) failure = std::current_exception();
          return;
        }
      }
    });
  for (auto& th : pool) th.join();
  if (failure) std::rethrow_exception(failure);
}

void check_budget(const EnumerationQuery& query, const ClassStore& store,
                  int completed_up_to) {
  if (query.budget < 0 || store.total <= query.budget) return;
  EnumerationResult partial;
  std::vector<int> completed;
  for (const auto& [order, classes] : store.by_order) {
    if (order > completed_up_to) continue;
    completed.push_back(order);
    partial.counts_by_order[order] = static_cast<long long>(classes.size());
  }
  throw BudgetError("enumeration budget of " + std::to_string(query.budget) +
                        " classes exceeded",
                    std::move(partial), std::move(completed));
}

// Closure of the dumbbell under cycle expansion: every biconnected
// exactly-3 class of order <= max shows up exactly once. With planar set,
// expansions are order-preserving on carried embeddings and the frontier is
// keyed by embedding class.
void biconnected_closure(const EnumerationQuery& query, ClassStore& store) {
  int max_n = query.max_vertices;
  Multigraph seed = dumbbell();
  if (query.require_planar) {
    RotationSystem rot = dumbbell_embedding();
    store.insert(2, embedding_code(seed, rot), {seed, rot});
  } else {
    store.insert(2, canonical_code(seed), {seed, {}});
  }

  for (int order = 2; order < max_n; ++order) {
    check_budget(query, store, order - 1);
    auto it = store.by_order.find(order);
    if (it == store.by_order.end()) continue;
    std::vector<const EmbeddedGraph*> frontier;
    for (const auto& [code, g] : it->second) frontier.push_back(&g);
    int cap = max_n - order + 1;

    run_parallel(query.jobs, frontier.size(), [&](std::size_t i) {
      const EmbeddedGraph& host = *frontier[i];
      if (query.require_planar) {
        for (Vertex u : host.graph.vertices()) {
          const auto& around = host.rot.order.at(u);
          int d = static_cast<int>(around.size());
          for (int start = 0; start < d; ++start)
            for (int d_prime = 2; d_prime <= std::min(d, cap); ++d_prime) {
              CycleExpansionSpec spec;
              spec.target = u;
              spec.cycle_size = d_prime;
              for (int j = 0; j < d; ++j)
                spec.assignment.push_back(around[(start + j) % d]);
              OrderPreservingExpansion res =
                  order_preserving_expand(host.graph, host.rot, spec);
              int new_order = static_cast<int>(res.graph.order());
              std::string key = embedding_code(res.graph, res.rot);
              store.insert(new_order, std::move(key),
                           {std::move(res.graph), std::move(res.rot)});
            }
        }
      } else {
        for (const CycleExpansionSpec& spec : expansion_specs(host.graph, cap)) {
          Multigraph next = cycle_expand(host.graph, spec);
          int new_order = static_cast<int>(next.order());
          std::string key = canonical_code(next);
          store.insert(new_order, std::move(key), {std::move(next), {}});
        }
      }
    });
  }
  check_budget(query, store, max_n);
}

// Gluing closure: every class with b >= 2 blocks is a leaf block glued onto
// a smaller class, so ascending target order is complete.
void gluing_closure(const EnumerationQuery& query, ClassStore& store) {
  int max_n = query.max_vertices;
  // snapshot of the biconnected classes per order
  std::map<int, std::vector<EmbeddedGraph>> pieces;
  for (const auto& [order, classes] : store.by_order)
    for (const auto& [code, g] : classes) pieces[order].push_back(g);

  for (int target = 3; target <= max_n; ++target) {
    check_budget(query, store, target - 1);
    for (int r = 2; r <= target - 1; ++r) {
      int s = target - r + 1;
      if (s < 2 || !pieces.count(s)) continue;
      auto host_it = store.by_order.find(r);
      if (host_it == store.by_order.end()) continue;
      std::vector<const EmbeddedGraph*> hosts;
      for (const auto& [code, g] : host_it->second) hosts.push_back(&g);

      run_parallel(query.jobs, hosts.size(), [&](std::size_t i) {
        const EmbeddedGraph& host = *hosts[i];
        for (const EmbeddedGraph& piece : pieces[s])
          for (Vertex v : host.graph.vertices())
            for (Vertex w : piece.graph.vertices()) {
              if (query.require_planar) {
                EmbeddedGraph glued = embedded_block_glue(host, v, piece, w);
                std::string key = embedding_code(glued.graph, glued.rot);
                store.insert(target, std::move(key), std::move(glued));
              } else {
                Multigraph glued = block_glue(host.graph, v, piece.graph, w);
                std::string key = canonical_code(glued);
                store.insert(target, std::move(key), {std::move(glued), {}});
              }
            }
      });
    }
  }
  check_budget(query, store, max_n);
}

bool is_minimum_order(const Multigraph& g) {
  long n = static_cast<long>(g.order());
  return g.size() == (3 * n + 1) / 2;
}

}  // namespace

EnumerationResult enumerate(const EnumerationQuery& query) {
  if (query.max_vertices < 2)
    throw ArgumentError("enumerate: max_vertices must be >= 2");

  ClassStore store;
  biconnected_closure(query, store);
  // Gluings never produce minimum graphs (the glue vertex has degree >= 6),
  // so the minimum filter keeps the search in the biconnected stratum.
  if (!query.require_biconnected && !query.require_minimum)
    gluing_closure(query, store);

  EnumerationResult out;
  std::set<std::string> emitted;  // planar frontier is keyed per embedding
  for (const auto& [order, classes] : store.by_order) {
    if (order > query.max_vertices) continue;
    long long kept = 0;
    for (const auto& [key, g] : classes) {
      if (query.require_simple && !g.graph.is_simple()) continue;
      if (query.require_minimum && !is_minimum_order(g.graph)) continue;
      CanonicalForm form = canonical_form(g.graph);
      if (query.require_planar && !emitted.insert(form.code).second) continue;
      ++kept;
      if (!query.count_only) {
        Multigraph relabeled;
        for (const auto& [v, pos] : form.labeling) relabeled.add_vertex(pos);
        for (const auto& [pair, mult] : g.graph.edges())
          relabeled.add_edge(form.labeling.at(pair.first),
                             form.labeling.at(pair.second), mult);
        out.graphs.push_back({order, form.code, std::move(relabeled)});
      }
    }
    if (kept > 0) out.counts_by_order[order] = kept;
  }
  std::sort(out.graphs.begin(), out.graphs.end(),
            [](const EmittedGraph& a, const EmittedGraph& b) {
              if (a.order != b.order) return a.order < b.order;
              return a.code < b.code;
            });
  return out;
}

EnumerationResult brute_force_census(int max_vertices) {
  if (max_vertices > 7)
    throw ArgumentError("brute_force_census: bound is 7 vertices");
  if (max_vertices < 2)
    throw ArgumentError("brute_force_census: max_vertices must be >= 2");

  EnumerationResult out;
  for (int n = 2; n <= max_vertices; ++n) {
    int pairs = n * (n - 1) / 2;
    std::set<std::string> classes;
    for (long mask = 0; mask < (1L << pairs); ++mask) {
      Multigraph g;
      for (int v = 0; v < n; ++v) g.add_vertex(v);
      int bit = 0;
      for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v, ++bit)
          if (mask & (1L << bit)) g.add_edge(u, v);
      bool degrees_ok = true;
      for (int v = 0; v < n && degrees_ok; ++v)
        if (g.degree(v) < 3) degrees_ok = false;
      if (!degrees_ok || !g.is_connected()) continue;
      if (!is_exactly_k(g, 3).exact) continue;
      if (!is_biconnected(g)) continue;
      classes.insert(canonical_code(g));
    }
    if (!classes.empty())
      out.counts_by_order[n] = static_cast<long long>(classes.size());
  }
  return out;
}

bool check_minimum_equivalence(const Multigraph& g, int k) {
  if (k < 1) throw ArgumentError("check_minimum_equivalence: k < 1");
  if (g.order() < 2 || cut_tree(g).min_weight() < k)
    throw DomainError("check_minimum_equivalence: graph is not " +
                      std::to_string(k) + "-edge-connected");

  long n = static_cast<long>(g.order());
  bool minimum = g.size() == (k * n + 1) / 2;

  int off_degree = 0, max_degree = 0;
  for (Vertex v : g.vertices()) {
    int d = g.degree(v);
    max_degree = std::max(max_degree, d);
    if (d != k) ++off_degree;
  }
  bool almost_regular = off_degree <= 1 && max_degree <= k + 1;

  bool exact_and_almost = almost_regular && is_exactly_k(g, k).exact;

  return minimum == almost_regular && almost_regular == exact_and_almost;
}

bool minimum_filter_admits(const Multigraph& g, const CycleExpansionSpec& spec) {
  // validates the spec as a side effect
  expansion_dart_groups(g, spec, /*allow_bundles=*/true);
  long degree_sum = 2L * g.size() + 2 * spec.cycle_size;
  long new_order = static_cast<long>(g.order()) + spec.cycle_size - 1;
  return degree_sum <= 3 * new_order + 1;
}

}  // namespace exact3
