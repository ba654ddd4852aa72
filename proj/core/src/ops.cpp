#include "exact3/ops.hpp"

#include <algorithm>
#include <map>

#include "exact3/blocks.hpp"

namespace exact3 {

namespace {

bool exact3_holds(const Multigraph& g) {
  return g.order() >= 2 && is_exactly_k(g, 3).exact;
}

// Executable form of the preservation propositions: inputs exact => result
// exact. Only runs when debug asserts are on.
void debug_check_preserved(bool inputs_exact, const Multigraph& result, int k,
                           const char* op) {
  if (!debug_asserts_enabled() || !inputs_exact) return;
  if (result.order() < 2) return;
  if (!is_exactly_k(result, k).exact)
    throw InvariantError(std::string(op) + ": exact " + std::to_string(k) +
                         "-edge-connectivity not preserved");
}

bool debug_inputs_exact(const Multigraph& g, int k) {
  return debug_asserts_enabled() && g.order() >= 2 && is_exactly_k(g, k).exact;
}

}  // namespace

BlockGlueResult block_glue_detail(const Multigraph& g1, Vertex u1,
                                  const Multigraph& g2, Vertex u2) {
  if (!g1.has_vertex(u1) || !g2.has_vertex(u2))
    throw ArgumentError("block_glue: glue vertex not in its graph");
  bool exact_in = debug_inputs_exact(g1, 3) && exact3_holds(g2);

  Vertex offset = g1.peek_fresh_id();
  Multigraph shifted = g2.offset_ids(offset);
  Vertex u2s = u2 + offset;

  Multigraph out;
  for (Vertex v : g1.vertices()) out.add_vertex(v);
  for (Vertex v : shifted.vertices()) out.add_vertex(v);
  Vertex u = out.add_vertex();
  auto carry = [&](const Multigraph& src, Vertex old_u) {
    for (const auto& [pair, mult] : src.edges()) {
      Vertex a = pair.first == old_u ? u : pair.first;
      Vertex b = pair.second == old_u ? u : pair.second;
      out.add_edge(a, b, mult);
    }
  };
  carry(g1, u1);
  carry(shifted, u2s);
  out.remove_vertex(u1);
  out.remove_vertex(u2s);

  debug_check_preserved(exact_in, out, 3, "block_glue");
  return {std::move(out), u, offset};
}

Multigraph block_glue(const Multigraph& g1, Vertex u1, const Multigraph& g2,
                      Vertex u2) {
  return block_glue_detail(g1, u1, g2, u2).graph;
}

Multigraph k_bridge_add(const Multigraph& g, Vertex v, int k) {
  if (!g.has_vertex(v)) throw ArgumentError("k_bridge_add: vertex not in graph");
  if (k < 1) throw ArgumentError("k_bridge_add: k < 1");
  bool exact_in = debug_inputs_exact(g, k);
  Multigraph out = g;
  Vertex u = out.add_vertex();
  out.add_edge(v, u, k);
  debug_check_preserved(exact_in, out, k, "k_bridge_add");
  return out;
}

Multigraph vertex_glue(const Multigraph& g1, const Multigraph& g2,
                       const VertexGluingSpec& spec) {
  if (!g1.has_vertex(spec.u1) || !g2.has_vertex(spec.u2))
    throw ArgumentError("vertex_glue: vertex not in its graph");
  int k = g1.degree(spec.u1);
  if (g2.degree(spec.u2) != k)
    throw DomainError("vertex_glue: degree mismatch, " + std::to_string(k) +
                      " vs " + std::to_string(g2.degree(spec.u2)));

  auto full1 = g1.darts(spec.u1);
  auto full2 = g2.darts(spec.u2);
  std::vector<Dart> seen1, seen2;
  for (const auto& [d1, d2] : spec.pairing) {
    seen1.push_back(d1);
    seen2.push_back(d2);
  }
  std::sort(seen1.begin(), seen1.end());
  std::sort(seen2.begin(), seen2.end());
  if (seen1 != full1 || seen2 != full2)
    throw ArgumentError("vertex_glue: pairing is not a bijection of the darts");

  bool exact_in = debug_inputs_exact(g1, k) && g2.order() >= 2 &&
                  is_exactly_k(g2, k).exact;

  Vertex offset = g1.peek_fresh_id();
  Multigraph out;
  for (Vertex v : g1.vertices())
    if (v != spec.u1) out.add_vertex(v);
  for (Vertex v : g2.vertices())
    if (v != spec.u2) out.add_vertex(v + offset);
  for (const auto& [pair, mult] : g1.edges())
    if (pair.first != spec.u1 && pair.second != spec.u1)
      out.add_edge(pair.first, pair.second, mult);
  for (const auto& [pair, mult] : g2.edges())
    if (pair.first != spec.u2 && pair.second != spec.u2)
      out.add_edge(pair.first + offset, pair.second + offset, mult);
  for (const auto& [d1, d2] : spec.pairing) out.add_edge(d1.to, d2.to + offset);

  debug_check_preserved(exact_in, out, k, "vertex_glue");
  return out;
}

VertexSplitResult vertex_split(const Multigraph& g, const EdgeCut& cut) {
  if (cut.side_a.empty() || cut.side_b.empty())
    throw ArgumentError("vertex_split: empty cut side");
  std::set<Vertex> all = cut.side_a;
  all.insert(cut.side_b.begin(), cut.side_b.end());
  if (all != g.vertices() || cut.side_a.size() + cut.side_b.size() != g.order())
    throw ArgumentError("vertex_split: cut sides do not partition the graph");
  if (cut.trivial || cut.side_a.size() == 1 || cut.side_b.size() == 1)
    throw DomainError("vertex_split: cut is trivial");
  EdgeCut actual = make_cut(g, cut.side_a);
  if (actual.crossing != cut.crossing)
    throw ArgumentError("vertex_split: crossing edges do not match the sides");
  int k = actual.weight();
  if (k != cut_tree(g).min_weight())
    throw DomainError("vertex_split: cut is not minimum");

  bool exact_in = debug_inputs_exact(g, k);

  VertexSplitResult res;
  res.g1 = g.induced(cut.side_a);
  res.g2 = g.induced(cut.side_b);
  res.x1 = res.g1.add_vertex();
  res.x2 = res.g2.add_vertex();
  res.reglue.u1 = res.x1;
  res.reglue.u2 = res.x2;
  std::map<Vertex, int> copies1, copies2;
  for (const auto& [pair, mult] : actual.crossing) {
    Vertex a = cut.side_a.count(pair.first) ? pair.first : pair.second;
    Vertex b = cut.side_a.count(pair.first) ? pair.second : pair.first;
    res.g1.add_edge(res.x1, a, mult);
    res.g2.add_edge(res.x2, b, mult);
    for (int c = 0; c < mult; ++c)
      res.reglue.pairing.push_back(
          {Dart(res.x1, a, copies1[a]++), Dart(res.x2, b, copies2[b]++)});
  }

  debug_check_preserved(exact_in, res.g1, k, "vertex_split");
  debug_check_preserved(exact_in, res.g2, k, "vertex_split");
  return res;
}

namespace {

// Per-position dart groups for a cycle expansion. Position p (0-based) of
// the new cycle receives group[p]'s far endpoints.
struct ParsedExpansion {
  std::vector<std::vector<Dart>> groups;
};

// Shared validation and parsing for both expansion variants. In the
// biconnected case every dart belongs to the single block and the layout is
// strict: one dart per position, remainder in the tail. With an
// articulation target, the block of the first listed dart is the expansion
// block; other blocks' darts must appear as complete contiguous bundles and
// re-glue at the position they follow. Omitted bundles land on the tail.
ParsedExpansion parse_expansion(const Multigraph& g,
                                const CycleExpansionSpec& spec,
                                bool allow_bundles) {
  if (!g.has_vertex(spec.target))
    throw ArgumentError("cycle_expand: target not in graph");
  for (const Dart& d : spec.assignment) {
    if (d.at != spec.target)
      throw ArgumentError("cycle_expand: dart " + d.to_string() +
                          " is not anchored at the target");
    if (!g.has_dart(d))
      throw ArgumentError("cycle_expand: dart " + d.to_string() + " not in graph");
  }
  {
    auto sorted = spec.assignment;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
      throw ArgumentError("cycle_expand: duplicate dart in assignment");
  }
  if (spec.assignment.empty())
    throw ArgumentError("cycle_expand: empty assignment");

  // Which block does each dart live in? Non-articulation targets have all
  // darts in one block.
  BlockDecomposition decomp = blocks(g);
  auto block_of = [&](const Dart& d) { return decomp.block_of_edge(d.at, d.to); };
  int expansion_block = block_of(spec.assignment.front());

  std::map<int, std::vector<Dart>> external;  // block -> full dart set
  std::vector<Dart> beta;                     // expansion-block darts of target
  for (const Dart& d : g.darts(spec.target)) {
    int b = block_of(d);
    if (b == expansion_block)
      beta.push_back(d);
    else
      external[b].push_back(d);
  }
  if (!external.empty() && !allow_bundles)
    throw DomainError("cycle_expand: target is an articulation point, use the "
                      "block-respecting variant");

  int d_beta = static_cast<int>(beta.size());
  if (spec.cycle_size < 2 || spec.cycle_size > d_beta)
    throw ArgumentError("cycle_expand: cycle_size must be in [2, " +
                        std::to_string(d_beta) + "]");

  std::map<int, bool> bundle_listed;
  {
    std::vector<Dart> listed_beta;
    std::map<int, std::vector<Dart>> listed_ext;
    for (const Dart& d : spec.assignment) {
      int b = block_of(d);
      if (b == expansion_block)
        listed_beta.push_back(d);
      else
        listed_ext[b].push_back(d);
    }
    std::sort(listed_beta.begin(), listed_beta.end());
    if (listed_beta != beta)
      throw ArgumentError(
          "cycle_expand: assignment must list every dart of the expansion "
          "block exactly once");
    for (auto& [b, darts] : listed_ext) {
      std::sort(darts.begin(), darts.end());
      if (darts != external[b])
        throw DomainError(
            "cycle_expand: external block listed with an incomplete bundle");
      bundle_listed[b] = true;
    }
  }

  ParsedExpansion parsed;
  parsed.groups.assign(spec.cycle_size, {});
  std::size_t i = 0;
  int consumed_beta = 0;
  for (int pos = 0; pos < spec.cycle_size - 1; ++pos) {
    if (i >= spec.assignment.size())
      throw ArgumentError("cycle_expand: assignment too short");
    if (block_of(spec.assignment[i]) != expansion_block)
      throw DomainError("cycle_expand: assignment darts span multiple blocks");
    parsed.groups[pos].push_back(spec.assignment[i++]);
    ++consumed_beta;
    // complete bundles following this dart re-glue here
    while (i < spec.assignment.size() &&
           block_of(spec.assignment[i]) != expansion_block) {
      int b = block_of(spec.assignment[i]);
      std::size_t need = external[b].size();
      for (std::size_t j = 0; j < need; ++j, ++i) {
        if (i >= spec.assignment.size() ||
            block_of(spec.assignment[i]) != b)
          throw DomainError("cycle_expand: bundle darts are not contiguous");
        parsed.groups[pos].push_back(spec.assignment[i]);
      }
    }
  }
  for (; i < spec.assignment.size(); ++i) {
    parsed.groups.back().push_back(spec.assignment[i]);
    if (block_of(spec.assignment[i]) == expansion_block) ++consumed_beta;
  }
  if (consumed_beta != d_beta)
    throw ArgumentError("cycle_expand: assignment does not cover the block");
  for (const auto& [b, darts] : external)
    if (!bundle_listed.count(b))
      parsed.groups.back().insert(parsed.groups.back().end(), darts.begin(),
                                  darts.end());
  return parsed;
}

CycleExpandResult expand_parsed(const Multigraph& g, Vertex target,
                                const ParsedExpansion& parsed) {
  Multigraph out = g;
  out.remove_vertex(target);
  int d_prime = static_cast<int>(parsed.groups.size());
  std::vector<Vertex> cycle;
  for (int p = 0; p < d_prime; ++p) cycle.push_back(out.add_vertex());
  if (d_prime == 2) {
    out.add_edge(cycle[0], cycle[1], 2);
  } else {
    for (int p = 0; p < d_prime; ++p)
      out.add_edge(cycle[p], cycle[(p + 1) % d_prime]);
  }
  for (int p = 0; p < d_prime; ++p)
    for (const Dart& d : parsed.groups[p]) out.add_edge(cycle[p], d.to);
  return {std::move(out), std::move(cycle)};
}

}  // namespace

std::vector<std::vector<Dart>> expansion_dart_groups(
    const Multigraph& g, const CycleExpansionSpec& spec, bool allow_bundles) {
  return parse_expansion(g, spec, allow_bundles).groups;
}

CycleExpandResult cycle_expand_detail(const Multigraph& g,
                                      const CycleExpansionSpec& spec) {
  if (!is_biconnected(g))
    throw DomainError("cycle_expand: graph not biconnected, use the "
                      "block-respecting variant");
  bool exact_in = debug_inputs_exact(g, 3);
  ParsedExpansion parsed = parse_expansion(g, spec, /*allow_bundles=*/false);
  CycleExpandResult res = expand_parsed(g, spec.target, parsed);
  debug_check_preserved(exact_in, res.graph, 3, "cycle_expand");
  if (debug_asserts_enabled() && !is_biconnected(res.graph))
    throw InvariantError("cycle_expand: result not biconnected");
  return res;
}

Multigraph cycle_expand(const Multigraph& g, const CycleExpansionSpec& spec) {
  return cycle_expand_detail(g, spec).graph;
}

CycleExpandResult block_respecting_cycle_expand_detail(
    const Multigraph& g, const CycleExpansionSpec& spec) {
  bool exact_in = debug_inputs_exact(g, 3);
  ParsedExpansion parsed = parse_expansion(g, spec, /*allow_bundles=*/true);
  CycleExpandResult res = expand_parsed(g, spec.target, parsed);
  debug_check_preserved(exact_in, res.graph, 3, "block_respecting_cycle_expand");
  return res;
}

Multigraph block_respecting_cycle_expand(const Multigraph& g,
                                         const CycleExpansionSpec& spec) {
  return block_respecting_cycle_expand_detail(g, spec).graph;
}

Multigraph cycle_contract(const Multigraph& g, const Cycle& c) {
  c.validate_in(g);
  if (!c.is_chordless_in(g))
    throw DomainError("cycle_contract: cycle has a chord");

  // The preservation proposition has stronger hypotheses than the operation;
  // assert it exactly when they hold.
  bool claim = false;
  if (debug_asserts_enabled() && g.order() >= 2 && is_biconnected(g)) {
    int off = 0;
    Vertex high = -1;
    for (Vertex v : g.vertices())
      if (g.degree(v) != 3) {
        ++off;
        high = v;
      }
    claim = off == 0 || (off == 1 && c.contains(high));
    claim = claim && is_exactly_k(g, 3).exact;
  }

  Multigraph out = g;
  std::set<Vertex> on_cycle(c.vertices().begin(), c.vertices().end());
  Vertex u = out.add_vertex();
  for (const auto& [pair, mult] : g.edges()) {
    bool a_in = on_cycle.count(pair.first), b_in = on_cycle.count(pair.second);
    if (a_in && b_in) continue;  // cycle edges (and extra parallels) vanish
    if (a_in) out.add_edge(u, pair.second, mult);
    else if (b_in) out.add_edge(pair.first, u, mult);
  }
  for (Vertex v : on_cycle) out.remove_vertex(v);

  if (claim) {
    if (!is_exactly_k(out, 3).exact)
      throw InvariantError("cycle_contract: exactness not preserved");
    int off = 0;
    for (Vertex v : out.vertices())
      if (out.degree(v) != 3) ++off;
    if (off > 1)
      throw InvariantError("cycle_contract: result not quasi 3-regular");
  }
  return out;
}

Multigraph contraction_expansion(const Multigraph& g, const Cycle& c,
                                 const std::set<Vertex>& block) {
  c.validate_in(g);
  if (!c.is_chordless_in(g))
    throw DomainError("contraction_expansion: cycle has a chord");
  std::set<Vertex> cycle_verts(c.vertices().begin(), c.vertices().end());
  std::set<Vertex> rest;
  for (Vertex v : g.vertices())
    if (!cycle_verts.count(v)) rest.insert(v);
  bool found = false;
  for (const auto& comp : components(g.induced(rest)))
    if (comp == block) {
      found = true;
      break;
    }
  if (!found)
    throw DomainError(
        "contraction_expansion: block is not a component of the partition");

  bool exact_in = debug_inputs_exact(g, 3);
  std::set<Vertex> keep = block;
  keep.insert(cycle_verts.begin(), cycle_verts.end());
  Multigraph out = smooth_degree2(g.induced(keep));
  debug_check_preserved(exact_in, out, 3, "contraction_expansion");
  return out;
}

}  // namespace exact3
