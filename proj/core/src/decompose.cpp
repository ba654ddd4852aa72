#include "exact3/decompose.hpp"

#include <algorithm>
#include <map>
#include <queue>
#include <sstream>

#include "exact3/blocks.hpp"
#include "exact3/canonical.hpp"
#include "exact3/connectivity.hpp"
#include "exact3/cycles.hpp"
#include "exact3/generators.hpp"

namespace exact3 {

CPartition c_partition(const Multigraph& g, const Cycle& c) {
  c.validate_in(g);
  std::set<Vertex> rest;
  for (Vertex v : g.vertices())
    if (!c.contains(v)) rest.insert(v);
  CPartition out{c, components(g.induced(rest))};
  return out;
}

int ColoredCycle::bicolored_edges() const {
  int count = 0;
  for (std::size_t i = 0; i < red.size(); ++i)
    if (red[i] != red[(i + 1) % red.size()]) ++count;
  return count;
}

ColoredCycle color_cycle(const Multigraph& g, const Cycle& c,
                         const std::set<Vertex>& block) {
  c.validate_in(g);
  ColoredCycle out{c, block, {}};
  for (Vertex v : c.vertices()) {
    bool adj = false;
    for (Vertex w : g.neighbors(v))
      if (block.count(w)) adj = true;
    out.red.push_back(adj);
  }
  return out;
}

namespace {

// The four conditions with the preconditions already verified by the caller.
bool collapsible_unchecked(const Multigraph& g, const Cycle& c) {
  if (!c.is_chordless_in(g)) return false;
  int off_degree = 0;
  for (Vertex v : c.vertices())
    if (g.degree(v) != 3) ++off_degree;
  if (off_degree > 1) return false;
  if (c_partition(g, c).size() > 1) return false;
  Multigraph contracted = cycle_contract(g, c);
  if (contracted.order() < 2) return false;
  return is_exactly_k(contracted, 3).exact;
}

}  // namespace

bool is_collapsible(const Multigraph& g, const Cycle& c) {
  c.validate_in(g);
  if (!is_biconnected(g))
    throw DomainError("is_collapsible: graph not biconnected");
  if (g.order() < 2 || !is_exactly_k(g, 3).exact)
    throw DomainError("is_collapsible: graph not exactly 3-edge-connected");
  return collapsible_unchecked(g, c);
}

Cycle find_collapsible_cycle(const Multigraph& g, Vertex avoid) {
  if (!g.has_vertex(avoid))
    throw ArgumentError("find_collapsible_cycle: avoid vertex not in graph");
  if (g.degree(avoid) != 3)
    throw ArgumentError("find_collapsible_cycle: avoid vertex must have degree 3");
  if (g.order() < 3)
    throw DomainError("find_collapsible_cycle: order < 3");
  if (!is_biconnected(g))
    throw DomainError("find_collapsible_cycle: graph not biconnected");
  if (!is_exactly_k(g, 3).exact)
    throw DomainError("find_collapsible_cycle: graph not exactly 3-edge-connected");

  CycleQuery query;
  query.avoiding = avoid;
  for (const Cycle& c : chordless_cycles(g, query))
    if (collapsible_unchecked(g, c)) return c;
  throw InvariantError(
      "find_collapsible_cycle: no collapsible cycle found; the existence "
      "theorem excludes this");
}

// ---------------------------------------------------------------------------
// Script records
// ---------------------------------------------------------------------------

std::string ScriptOp::to_text() const {
  std::ostringstream out;
  switch (kind) {
    case Kind::Dumbbell:
      out << "DUMBBELL " << a;
      break;
    case Kind::Glue:
      out << "GLUE " << a << ' ' << ua << ' ' << b << ' ' << ub << ' ' << result;
      break;
    case Kind::Expand: {
      out << "EXPAND " << a << ' ' << ua << ' ' << cycle_size << ' ';
      for (std::size_t i = 0; i < darts.size(); ++i) {
        if (i) out << ',';
        out << darts[i].to_string();
      }
      break;
    }
  }
  return out.str();
}

int SynthesisScript::dumbbells() const {
  int n = 0;
  for (const auto& op : ops) n += op.kind == ScriptOp::Kind::Dumbbell;
  return n;
}

int SynthesisScript::expansions() const {
  int n = 0;
  for (const auto& op : ops) n += op.kind == ScriptOp::Kind::Expand;
  return n;
}

int SynthesisScript::gluings() const {
  int n = 0;
  for (const auto& op : ops) n += op.kind == ScriptOp::Kind::Glue;
  return n;
}

std::string SynthesisScript::to_text() const {
  std::ostringstream out;
  if (provenance) out << "# provenance " << *provenance << '\n';
  for (const auto& op : ops) out << op.to_text() << '\n';
  return out.str();
}

SynthesisScript SynthesisScript::parse(const std::string& text) {
  SynthesisScript script;
  std::istringstream in(text);
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.empty()) continue;
    if (line[0] == '#') {
      std::istringstream c(line.substr(1));
      std::string word, value;
      if (c >> word >> value && word == "provenance") script.provenance = value;
      continue;
    }
    std::istringstream ls(line);
    std::string kind;
    ls >> kind;
    ScriptOp op;
    auto want_int = [&](const char* what) {
      long v;
      if (!(ls >> v)) throw FormatError(std::string("expected ") + what, line_no);
      return static_cast<int>(v);
    };
    auto want_word = [&](const char* what) {
      std::string w;
      if (!(ls >> w)) throw FormatError(std::string("expected ") + what, line_no);
      return w;
    };
    if (kind == "DUMBBELL") {
      op.kind = ScriptOp::Kind::Dumbbell;
      op.a = want_word("graph id");
    } else if (kind == "GLUE") {
      op.kind = ScriptOp::Kind::Glue;
      op.a = want_word("left graph id");
      op.ua = want_int("left vertex");
      op.b = want_word("right graph id");
      op.ub = want_int("right vertex");
      op.result = want_word("result id");
    } else if (kind == "EXPAND") {
      op.kind = ScriptOp::Kind::Expand;
      op.a = want_word("graph id");
      op.ua = want_int("vertex");
      op.cycle_size = want_int("cycle size");
      std::string darts = want_word("dart order");
      std::size_t start = 0;
      while (start <= darts.size()) {
        std::size_t comma = darts.find(',', start);
        std::string tok = darts.substr(
            start, comma == std::string::npos ? std::string::npos : comma - start);
        if (tok.empty()) throw FormatError("empty dart token", line_no);
        try {
          op.darts.push_back(Dart::parse(tok));
        } catch (const FormatError& e) {
          throw FormatError(e.what(), line_no);
        }
        if (comma == std::string::npos) break;
        start = comma + 1;
      }
    } else {
      throw FormatError("unknown record '" + kind + "'", line_no);
    }
    std::string extra;
    if (ls >> extra) throw FormatError("trailing tokens", line_no);
    script.ops.push_back(std::move(op));
  }
  return script;
}

// ---------------------------------------------------------------------------
// Replay
// ---------------------------------------------------------------------------

namespace {

// Interprets records against a registry of named graphs, tracking enough
// detail (created cycle ids, glue vertex, offset) for decompose and
// thick_tree_factor to mirror coordinates while they emit.
struct Interpreter {
  std::map<std::string, Multigraph> reg;
  std::string last;
  std::vector<Vertex> last_cycle;   // Expand
  Vertex last_glue_vertex = -1;     // Glue
  Vertex last_offset = -1;          // Glue

  const Multigraph& graph(const std::string& name, int index) const {
    auto it = reg.find(name);
    if (it == reg.end())
      throw FormatError("record " + std::to_string(index) +
                        ": unknown graph '" + name + "'");
    return it->second;
  }

  void apply(const ScriptOp& op, int index) {
    switch (op.kind) {
      case ScriptOp::Kind::Dumbbell:
        if (reg.count(op.a))
          throw FormatError("record " + std::to_string(index) +
                            ": graph '" + op.a + "' already defined");
        reg.emplace(op.a, dumbbell());
        last = op.a;
        break;
      case ScriptOp::Kind::Glue: {
        const Multigraph& g1 = graph(op.a, index);
        const Multigraph& g2 = graph(op.b, index);
        if (reg.count(op.result))
          throw FormatError("record " + std::to_string(index) +
                            ": graph '" + op.result + "' already defined");
        try {
          BlockGlueResult res = block_glue_detail(g1, op.ua, g2, op.ub);
          last_glue_vertex = res.glue_vertex;
          last_offset = res.offset;
          reg.emplace(op.result, std::move(res.graph));
        } catch (const Error& e) {
          throw FormatError("record " + std::to_string(index) + ": " + e.what());
        }
        last = op.result;
        break;
      }
      case ScriptOp::Kind::Expand: {
        const Multigraph& g = graph(op.a, index);
        CycleExpansionSpec spec{op.ua, op.cycle_size, op.darts};
        try {
          CycleExpandResult res = block_respecting_cycle_expand_detail(g, spec);
          last_cycle = res.cycle;
          reg[op.a] = std::move(res.graph);
        } catch (const Error& e) {
          throw FormatError("record " + std::to_string(index) + ": " + e.what());
        }
        last = op.a;
        break;
      }
    }
  }
};

}  // namespace

Multigraph replay(const SynthesisScript& script) {
  if (script.ops.empty()) throw FormatError("empty script");
  Interpreter interp;
  for (std::size_t i = 0; i < script.ops.size(); ++i)
    interp.apply(script.ops[i], static_cast<int>(i));
  Multigraph out = interp.reg.at(interp.last);
  if (debug_asserts_enabled() && out.order() >= 2 && !is_exactly_k(out, 3).exact)
    throw InvariantError("replay: result not exactly 3-edge-connected");
  return out;
}

// ---------------------------------------------------------------------------
// Decompose
// ---------------------------------------------------------------------------

namespace {

// One contraction of the reduction chain, with everything needed to replay
// it as an expansion: the cycle in position order (last position absorbs
// the leftover darts) and each position's outside attachments, which are
// vertices of the contracted (smaller) graph.
struct ChainStep {
  std::vector<Vertex> positions;
  std::vector<std::vector<std::pair<Vertex, int>>> attachments;  // (far, mult)
  Vertex contracted = -1;
};

struct Chain {
  std::vector<ChainStep> steps;  // contraction order, full graph first
  Multigraph base;               // the terminal dumbbell
};

Chain contract_to_dumbbell(const Multigraph& block_graph) {
  Chain chain;
  Multigraph cur = block_graph;
  while (cur.order() > 2) {
    Vertex avoid = -1;
    for (Vertex v : cur.vertices())
      if (cur.degree(v) == 3) {
        avoid = v;
        break;
      }
    if (avoid < 0)
      throw InvariantError("decompose: no degree-3 vertex in a biconnected "
                           "exactly-3 graph of order >= 3");
    Cycle c = find_collapsible_cycle(cur, avoid);

    ChainStep step;
    step.positions = c.vertices();
    // rotate the heavy vertex (if any) into the last position
    for (std::size_t i = 0; i < step.positions.size(); ++i)
      if (cur.degree(step.positions[i]) != 3) {
        std::rotate(step.positions.begin(), step.positions.begin() + i + 1,
                    step.positions.end());
        break;
      }
    std::set<Vertex> on_cycle(step.positions.begin(), step.positions.end());
    for (std::size_t p = 0; p < step.positions.size(); ++p) {
      std::vector<std::pair<Vertex, int>> att;
      for (Vertex w : cur.neighbors(step.positions[p]))
        if (!on_cycle.count(w)) att.push_back({w, cur.multiplicity(step.positions[p], w)});
      int total = 0;
      for (auto& [w, m] : att) total += m;
      if (p + 1 < step.positions.size() && total != 1)
        throw InvariantError("decompose: non-final cycle position without "
                             "exactly one outside dart");
      step.attachments.push_back(std::move(att));
    }
    step.contracted = cur.peek_fresh_id();
    cur = cycle_contract(cur, c);
    chain.steps.push_back(std::move(step));
  }
  if (cur.size() != 3 || cur.distinct_edge_count() != 1)
    throw InvariantError("decompose: reduction did not end at a dumbbell");
  chain.base = std::move(cur);
  return chain;
}

struct Emitter {
  std::vector<ScriptOp> ops;
  Interpreter interp;
  int names = 0;

  std::string fresh_name() { return "g" + std::to_string(names++); }

  void apply(ScriptOp op) {
    interp.apply(op, static_cast<int>(ops.size()));
    ops.push_back(std::move(op));
  }
};

// Emits DUMBBELL + EXPAND records rebuilding a biconnected exactly-3 graph;
// returns the registry name and the isomorphism onto the replayed graph.
std::pair<std::string, std::map<Vertex, Vertex>> emit_biconnected(
    Emitter& em, const Multigraph& bi) {
  Chain chain = contract_to_dumbbell(bi);
  std::string name = em.fresh_name();
  ScriptOp db;
  db.kind = ScriptOp::Kind::Dumbbell;
  db.a = name;
  em.apply(std::move(db));

  std::map<Vertex, Vertex> phi;
  phi[*chain.base.vertices().begin()] = 0;
  phi[*std::next(chain.base.vertices().begin())] = 1;

  for (auto it = chain.steps.rbegin(); it != chain.steps.rend(); ++it) {
    const ChainStep& step = *it;
    Vertex target = phi.at(step.contracted);
    ScriptOp ex;
    ex.kind = ScriptOp::Kind::Expand;
    ex.a = name;
    ex.ua = target;
    ex.cycle_size = static_cast<int>(step.positions.size());
    std::map<Vertex, int> used;
    for (const auto& att : step.attachments)
      for (const auto& [w, mult] : att)
        for (int c = 0; c < mult; ++c) {
          Vertex far = phi.at(w);
          ex.darts.emplace_back(target, far, used[far]++);
        }
    em.apply(std::move(ex));
    for (std::size_t p = 0; p < step.positions.size(); ++p)
      phi[step.positions[p]] = em.interp.last_cycle[p];
  }
  return {name, std::move(phi)};
}

// Block-cut tree traversal order: (block index, parent articulation or -1).
std::vector<std::pair<int, Vertex>> block_bfs_order(const BlockDecomposition& bd) {
  std::map<Vertex, std::vector<int>> artic_blocks;
  for (const auto& [b, a] : bd.block_cut_tree) artic_blocks[a].push_back(b);
  std::vector<std::pair<int, Vertex>> order;
  std::vector<bool> seen(bd.blocks.size(), false);
  std::queue<int> bfs;
  bfs.push(0);
  seen[0] = true;
  order.push_back({0, -1});
  while (!bfs.empty()) {
    int b = bfs.front();
    bfs.pop();
    for (Vertex a : bd.blocks[b]) {
      if (!bd.articulation_points.count(a)) continue;
      for (int next : artic_blocks[a])
        if (!seen[next]) {
          seen[next] = true;
          order.push_back({next, a});
          bfs.push(next);
        }
    }
  }
  if (order.size() != bd.blocks.size())
    throw InvariantError("decompose: block-cut tree not connected");
  return order;
}

}  // namespace

SynthesisScript decompose(const Multigraph& g) {
  ConnectivityReport report = is_exactly_k(g, 3);
  if (!report.exact) {
    const auto& w = *report.witness;
    throw DomainError("decompose: not exactly 3-edge-connected, lambda(" +
                      std::to_string(w.u) + "," + std::to_string(w.v) +
                      ") = " + std::to_string(w.lambda));
  }

  Emitter em;
  BlockDecomposition bd = blocks(g);
  if (bd.blocks.size() == 1) {
    emit_biconnected(em, g);
  } else {
    auto order = block_bfs_order(bd);
    std::string acc;
    std::map<Vertex, Vertex> phi_acc;  // covered vertices of g -> acc ids
    for (const auto& [b, via] : order) {
      Multigraph piece = g.induced(bd.blocks[b]);
      auto [name, phi_b] = emit_biconnected(em, piece);
      if (via < 0) {
        acc = name;
        phi_acc = std::move(phi_b);
        continue;
      }
      ScriptOp glue;
      glue.kind = ScriptOp::Kind::Glue;
      glue.a = acc;
      glue.ua = phi_acc.at(via);
      glue.b = name;
      glue.ub = phi_b.at(via);
      glue.result = em.fresh_name();
      em.apply(std::move(glue));
      Vertex u_star = em.interp.last_glue_vertex;
      Vertex offset = em.interp.last_offset;
      Vertex old_at = phi_acc.at(via);
      for (auto& [v, image] : phi_acc)
        if (image == old_at) image = u_star;
      for (const auto& [v, image] : phi_b)
        phi_acc[v] = (v == via) ? u_star : image + offset;
      acc = em.ops.back().result;
    }
  }

  SynthesisScript script;
  script.ops = std::move(em.ops);
  script.provenance = to_hex(canonical_code(g));
  return script;
}

// ---------------------------------------------------------------------------
// Thick-tree factoring
// ---------------------------------------------------------------------------

namespace {

struct Trace {
  std::vector<std::pair<int, int>> involvement;  // (chain step, position)
  Vertex base = -1;                              // id in the chain's dumbbell
};

Trace trace_vertex(const Chain& chain, Vertex a) {
  Trace t;
  Vertex pi = a;
  for (std::size_t j = 0; j < chain.steps.size(); ++j) {
    const auto& pos = chain.steps[j].positions;
    auto it = std::find(pos.begin(), pos.end(), pi);
    if (it != pos.end()) {
      t.involvement.push_back(
          {static_cast<int>(j), static_cast<int>(it - pos.begin())});
      pi = chain.steps[j].contracted;
    }
  }
  t.base = pi;
  return t;
}

}  // namespace

SynthesisScript thick_tree_factor(const SynthesisScript& script) {
  if (script.gluings() == 0) return script;
  Multigraph h = replay(script);
  BlockDecomposition bd = blocks(h);
  auto order = block_bfs_order(bd);
  int t = static_cast<int>(bd.blocks.size());

  std::vector<Chain> chains(t);
  std::vector<std::map<Vertex, Trace>> traces(t);  // per block: artic -> trace
  for (int b = 0; b < t; ++b) {
    chains[b] = contract_to_dumbbell(h.induced(bd.blocks[b]));
    for (Vertex a : bd.blocks[b])
      if (bd.articulation_points.count(a)) traces[b][a] = trace_vertex(chains[b], a);
  }

  // route_artic[b][a]: the articulation vertex of block b separating b from
  // articulation a in the block-cut tree (a itself when a is in b).
  std::map<Vertex, std::vector<int>> artic_blocks;
  for (const auto& [b, a] : bd.block_cut_tree) artic_blocks[a].push_back(b);
  std::vector<std::map<Vertex, Vertex>> route(t);
  for (int b = 0; b < t; ++b) {
    // BFS over the bipartite tree from block b, remembering the first
    // articulation vertex stepped through.
    std::queue<std::pair<int, Vertex>> bfs;  // (block, first artic on path)
    std::set<int> seen_blocks{b};
    for (Vertex a : bd.blocks[b])
      if (bd.articulation_points.count(a)) {
        route[b][a] = a;
        for (int nb : artic_blocks[a])
          if (seen_blocks.insert(nb).second) bfs.push({nb, a});
      }
    while (!bfs.empty()) {
      auto [blk, first] = bfs.front();
      bfs.pop();
      for (Vertex a : bd.blocks[blk]) {
        if (!bd.articulation_points.count(a)) continue;
        if (!route[b].count(a)) route[b][a] = first;
        for (int nb : artic_blocks[a])
          if (seen_blocks.insert(nb).second) bfs.push({nb, first});
      }
    }
  }

  Emitter em;
  std::vector<std::string> names(t);
  for (int i = 0; i < t; ++i) {
    names[order[i].first] = em.fresh_name();
    ScriptOp db;
    db.kind = ScriptOp::Kind::Dumbbell;
    db.a = names[order[i].first];
    em.apply(std::move(db));
  }

  auto base_local = [&](const Chain& chain, Vertex base_vertex) -> Vertex {
    return base_vertex == *chain.base.vertices().begin() ? 0 : 1;
  };

  std::map<Vertex, Vertex> carrier;              // h-artic -> accumulated id
  std::vector<std::map<Vertex, Vertex>> basemap(t);  // chain base -> acc id
  struct GlueEvent {
    Vertex artic;  // h-articulation vertex the branch hangs from
    Vertex rep;    // accumulated vertex inside the branch
  };
  std::vector<GlueEvent> events;

  // Stage 1: glue every block's dumbbell into one 3-thick tree.
  int root = order[0].first;
  std::string acc = names[root];
  {
    Vertex lo = *chains[root].base.vertices().begin();
    Vertex hi = *std::next(chains[root].base.vertices().begin());
    basemap[root][lo] = 0;
    basemap[root][hi] = 1;
    for (const auto& [a, tr] : traces[root]) carrier[a] = basemap[root][tr.base];
  }
  for (int i = 1; i < t; ++i) {
    auto [b, via] = order[i];
    Vertex x_at = carrier.at(via);
    Vertex y_base = traces[b].at(via).base;
    ScriptOp glue;
    glue.kind = ScriptOp::Kind::Glue;
    glue.a = acc;
    glue.ua = x_at;
    glue.b = names[b];
    glue.ub = base_local(chains[b], y_base);
    glue.result = em.fresh_name();
    em.apply(std::move(glue));
    Vertex u_star = em.interp.last_glue_vertex;
    Vertex offset = em.interp.last_offset;
    acc = em.ops.back().result;

    // x_at merged into u_star: everything that sat on it moves along.
    for (auto& [a, img] : carrier)
      if (img == x_at) img = u_star;
    for (auto& ev : events)
      if (ev.rep == x_at) ev.rep = u_star;

    Vertex lo = *chains[b].base.vertices().begin();
    Vertex hi = *std::next(chains[b].base.vertices().begin());
    basemap[b][lo] = (lo == y_base) ? u_star : 0 + offset;
    basemap[b][hi] = (hi == y_base) ? u_star : 1 + offset;
    for (const auto& [a, tr] : traces[b])
      if (!carrier.count(a)) carrier[a] = basemap[b][tr.base];

    events.push_back({via, basemap[b][y_base == lo ? hi : lo]});
  }

  // Stage 2: expand block by block; branches hanging on an expansion target
  // ride along as bundles to their traced cycle positions.
  for (int i = 0; i < t; ++i) {
    int b = order[i].first;
    const Chain& chain = chains[b];
    // Base vertices holding an articulation resolve through the carrier map,
    // since earlier expansions may have moved the branch; plain base
    // vertices still sit where the gluing stage left them.
    std::map<Vertex, Vertex> phi = basemap[b];
    for (const auto& [a, tr] : traces[b]) phi[tr.base] = carrier.at(a);
    for (auto it = chain.steps.rbegin(); it != chain.steps.rend(); ++it) {
      const ChainStep& step = *it;
      int step_index = static_cast<int>(chain.steps.rend() - it) - 1;
      Vertex target = phi.at(step.contracted);
      int d_prime = static_cast<int>(step.positions.size());

      // Branches hanging on the target are the components of acc - target
      // other than the one holding this block's own partial body. Each such
      // component re-glues at the cycle position its governing articulation
      // vertex is traced to at this step.
      const Multigraph& cur = em.interp.reg.at(acc);
      std::set<Vertex> rest;
      for (Vertex v : cur.vertices())
        if (v != target) rest.insert(v);
      auto comps = components(cur.induced(rest));
      auto comp_index = [&](Vertex v) {
        for (std::size_t c = 0; c < comps.size(); ++c)
          if (comps[c].count(v)) return c;
        throw InvariantError("thick_tree_factor: lost an anchor vertex");
      };
      std::size_t beta_comp = comp_index(phi.at(step.attachments[0][0].first));

      auto position_of = [&](Vertex artic) {
        Vertex a_r = traces[b].count(artic) ? artic : route[b].at(artic);
        const Trace& tr = traces[b].at(a_r);
        for (const auto& [s, p] : tr.involvement)
          if (s == step_index) return p;
        throw InvariantError("thick_tree_factor: branch artic not traced to "
                             "this step");
      };

      std::vector<bool> touches(comps.size(), false);
      for (std::size_t c = 0; c < comps.size(); ++c)
        for (Vertex w : comps[c])
          if (cur.multiplicity(target, w) > 0) touches[c] = true;

      std::vector<int> comp_position(comps.size(), -1);
      std::vector<bool> comp_anchored(comps.size(), false);
      for (const GlueEvent& ev : events) {
        std::size_t c = comp_index(ev.rep);
        if (c == beta_comp) continue;
        comp_anchored[c] = true;
        if (!touches[c]) continue;  // branch hangs elsewhere on the body
        int pos = position_of(ev.artic);
        if (comp_position[c] >= 0 && comp_position[c] != pos)
          throw InvariantError("thick_tree_factor: conflicting bundle routes");
        comp_position[c] = pos;
      }
      // At most one target-hanging component has no event inside: the side
      // of the tree this block was glued from. It rides with the parent
      // articulation vertex.
      for (std::size_t c = 0; c < comps.size(); ++c) {
        if (c == beta_comp || comp_anchored[c] || !touches[c]) continue;
        if (order[i].second < 0)
          throw InvariantError("thick_tree_factor: unanchored branch at the "
                               "root block");
        comp_position[c] = position_of(order[i].second);
      }

      ScriptOp ex;
      ex.kind = ScriptOp::Kind::Expand;
      ex.a = acc;
      ex.ua = target;
      ex.cycle_size = d_prime;
      std::map<Vertex, int> used;  // copy counters per far endpoint
      auto append_bundles = [&](int p) {
        for (std::size_t c = 0; c < comps.size(); ++c) {
          if (comp_position[c] != p) continue;
          for (Vertex w : cur.neighbors(target))
            if (comps[c].count(w))
              for (int k = 0; k < cur.multiplicity(target, w); ++k)
                ex.darts.emplace_back(target, w, used[w]++);
        }
      };
      for (int p = 0; p < d_prime; ++p) {
        for (const auto& [w, mult] : step.attachments[p])
          for (int c = 0; c < mult; ++c) {
            Vertex far = phi.at(w);
            ex.darts.emplace_back(target, far, used[far]++);
          }
        append_bundles(p);
      }
      if (static_cast<int>(ex.darts.size()) != cur.degree(target))
        throw InvariantError("thick_tree_factor: dart accounting mismatch");
      em.apply(std::move(ex));
      const auto& created = em.interp.last_cycle;
      for (std::size_t p = 0; p < step.positions.size(); ++p)
        phi[step.positions[p]] = created[p];
      // every articulation vertex parked on the target moves to its routed
      // cycle position
      for (auto& [a, img] : carrier) {
        if (img != target) continue;
        img = created[position_of(a)];
      }
      for (auto& ev : events)
        if (ev.rep == target) ev.rep = created[0];
    }
    // carriers of this block's articulation vertices now sit on their final
    // images; deeper blocks glue their bundles from there.
    for (const auto& [a, tr] : traces[b]) carrier[a] = phi.at(a);
  }

  SynthesisScript out;
  out.ops = std::move(em.ops);
  out.provenance = script.provenance ? script.provenance
                                     : std::optional<std::string>(
                                           to_hex(canonical_code(h)));
  return out;
}

}  // namespace exact3
