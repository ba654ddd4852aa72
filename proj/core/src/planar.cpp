#include "exact3/planar.hpp"

#include <algorithm>
#include <sstream>

#include "exact3/blocks.hpp"
#include "exact3/canonical.hpp"
#include "exact3/connectivity.hpp"
#include "exact3/generators.hpp"

namespace exact3 {

void RotationSystem::validate(const Multigraph& g) const {
  if (order.size() != g.order())
    throw FormatError("rotation system: vertex count mismatch");
  for (const auto& [v, seq] : order) {
    if (!g.has_vertex(v))
      throw FormatError("rotation system: unknown vertex " + std::to_string(v));
    std::vector<Dart> expect = g.darts(v);
    std::vector<Dart> got = seq;
    std::sort(got.begin(), got.end());
    if (got != expect)
      throw FormatError("rotation system: darts at vertex " + std::to_string(v) +
                        " do not match the graph");
  }
}

std::vector<std::vector<Dart>> faces(const Multigraph& g,
                                     const RotationSystem& rot) {
  rot.validate(g);
  std::map<Dart, std::size_t> slot;  // dart -> its index in order[at]
  for (const auto& [v, seq] : rot.order)
    for (std::size_t i = 0; i < seq.size(); ++i) slot[seq[i]] = i;

  auto next_in_face = [&](const Dart& d) {
    Dart r = d.reversed();
    const auto& seq = rot.order.at(r.at);
    return seq[(slot.at(r) + 1) % seq.size()];
  };

  std::vector<std::vector<Dart>> out;
  std::set<Dart> used;
  for (const auto& [v, seq] : rot.order)
    for (const Dart& start : seq) {
      if (used.count(start)) continue;
      std::vector<Dart> face;
      Dart d = start;
      do {
        face.push_back(d);
        used.insert(d);
        d = next_in_face(d);
      } while (!(d == start));
      out.push_back(std::move(face));
    }
  return out;
}

bool euler_planar(const Multigraph& g, const RotationSystem& rot) {
  if (!g.is_connected()) throw DomainError("euler_planar: graph disconnected");
  long v = static_cast<long>(g.order());
  long e = g.size();
  long f = static_cast<long>(faces(g, rot).size());
  return v - e + f == 2;
}

bool euler_planar_per_block(const Multigraph& g, const RotationSystem& rot) {
  rot.validate(g);
  for (const auto& blk : blocks(g).blocks) {
    Multigraph sub = g.induced(blk);
    RotationSystem sub_rot;
    for (Vertex v : blk) {
      std::vector<Dart> seq;
      for (const Dart& d : rot.order.at(v))
        if (blk.count(d.to)) seq.push_back(d);
      sub_rot.order[v] = std::move(seq);
    }
    if (!euler_planar(sub, sub_rot)) return false;
  }
  return true;
}

RotationSystem dumbbell_embedding() {
  RotationSystem rot;
  rot.order[0] = {Dart(0, 1, 0), Dart(0, 1, 1), Dart(0, 1, 2)};
  rot.order[1] = {Dart(1, 0, 2), Dart(1, 0, 1), Dart(1, 0, 0)};
  return rot;
}

OrderPreservingExpansion order_preserving_expand(const Multigraph& g,
                                                 const RotationSystem& rot,
                                                 const CycleExpansionSpec& spec) {
  rot.validate(g);
  const std::vector<Dart>& around = rot.order.at(spec.target);
  if (spec.assignment.size() != around.size())
    throw DomainError("order_preserving_expand: assignment must list every "
                      "dart of the target");
  std::size_t d = around.size();
  std::size_t shift = d;
  for (std::size_t s = 0; s < d; ++s)
    if (around[s] == spec.assignment[0]) {
      shift = s;
      break;
    }
  bool rotated = shift < d;
  for (std::size_t j = 0; rotated && j < d; ++j)
    if (!(around[(shift + j) % d] == spec.assignment[j])) rotated = false;
  if (!rotated)
    throw DomainError("order_preserving_expand: assignment is not a rotation "
                      "of the target's cyclic dart order");

  auto groups = expansion_dart_groups(g, spec, /*allow_bundles=*/true);
  CycleExpandResult expanded = block_respecting_cycle_expand_detail(g, spec);
  const std::vector<Vertex>& cyc = expanded.cycle;
  int d_prime = static_cast<int>(cyc.size());

  // Where did each original dart (u,w,c) land, and which copy is it now?
  struct Landing {
    int position;
    int new_copy;
  };
  std::map<Dart, Landing> landing;
  {
    std::map<std::pair<int, Vertex>, int> counter;  // (position, far) -> copies
    for (int p = 0; p < d_prime; ++p)
      for (const Dart& dart : groups[p])
        landing[dart] = {p, counter[{p, dart.to}]++};
  }

  RotationSystem out;
  for (const auto& [v, seq] : rot.order) {
    if (v == spec.target) continue;
    std::vector<Dart> updated;
    for (const Dart& dart : seq) {
      if (dart.to == spec.target) {
        Landing l = landing.at(Dart(spec.target, dart.at, dart.copy));
        updated.emplace_back(dart.at, cyc[l.position], l.new_copy);
      } else {
        updated.push_back(dart);
      }
    }
    out.order[v] = std::move(updated);
  }
  // Clockwise at a cycle vertex: its spokes in assignment order, then the
  // edge toward the next cycle vertex, then the edge back to the previous.
  for (int p = 0; p < d_prime; ++p) {
    std::vector<Dart> seq;
    for (const Dart& dart : groups[p]) {
      Landing l = landing.at(dart);
      seq.emplace_back(cyc[p], dart.to, l.new_copy);
    }
    if (d_prime == 2) {
      seq.emplace_back(cyc[p], cyc[1 - p], p == 0 ? 0 : 1);
      seq.emplace_back(cyc[p], cyc[1 - p], p == 0 ? 1 : 0);
    } else {
      seq.emplace_back(cyc[p], cyc[(p + 1) % d_prime],
                       0);
      seq.emplace_back(cyc[p], cyc[(p + d_prime - 1) % d_prime], 0);
    }
    out.order[cyc[p]] = std::move(seq);
  }

  OrderPreservingExpansion result{std::move(expanded.graph), std::move(out),
                                  cyc};
  result.rot.validate(result.graph);
  if (!euler_planar_per_block(result.graph, result.rot))
    throw InvariantError("order_preserving_expand: Euler certificate failed");
  if (debug_asserts_enabled() && result.graph.order() >= 2 &&
      !is_exactly_k(result.graph, 3).exact)
    throw InvariantError("order_preserving_expand: exactness lost");
  return result;
}

EmbeddedGraph embedded_block_glue(const EmbeddedGraph& g1, Vertex u1,
                                  const EmbeddedGraph& g2, Vertex u2,
                                  int corner) {
  g1.rot.validate(g1.graph);
  g2.rot.validate(g2.graph);
  BlockGlueResult glued = block_glue_detail(g1.graph, u1, g2.graph, u2);
  Vertex off = glued.offset;
  Vertex u = glued.glue_vertex;

  RotationSystem rot;
  for (const auto& [v, seq] : g1.rot.order) {
    if (v == u1) continue;
    std::vector<Dart> updated;
    for (const Dart& d : seq)
      updated.emplace_back(d.at, d.to == u1 ? u : d.to, d.copy);
    rot.order[v] = std::move(updated);
  }
  for (const auto& [v, seq] : g2.rot.order) {
    if (v == u2) continue;
    std::vector<Dart> updated;
    for (const Dart& d : seq)
      updated.emplace_back(d.at + off, d.to == u2 ? u : d.to + off, d.copy);
    rot.order[v + off] = std::move(updated);
  }
  std::vector<Dart> at_u;
  const auto& seq1 = g1.rot.order.at(u1);
  if (seq1.empty()) corner = 0;
  else corner = ((corner % static_cast<int>(seq1.size())) +
                 static_cast<int>(seq1.size())) % static_cast<int>(seq1.size());
  for (int i = 0; i < corner; ++i)
    at_u.emplace_back(u, seq1[i].to, seq1[i].copy);
  for (const Dart& d : g2.rot.order.at(u2)) at_u.emplace_back(u, d.to + off, d.copy);
  for (std::size_t i = corner; i < seq1.size(); ++i)
    at_u.emplace_back(u, seq1[i].to, seq1[i].copy);
  rot.order[u] = std::move(at_u);

  EmbeddedGraph out{std::move(glued.graph), std::move(rot)};
  out.rot.validate(out.graph);
  return out;
}

EmbeddedGraph planar_synthesize(const SynthesisScript& script) {
  if (script.ops.empty()) throw FormatError("empty script");
  std::map<std::string, EmbeddedGraph> reg;
  std::string last;
  for (std::size_t i = 0; i < script.ops.size(); ++i) {
    const ScriptOp& op = script.ops[i];
    auto fetch = [&](const std::string& name) -> EmbeddedGraph& {
      auto it = reg.find(name);
      if (it == reg.end())
        throw FormatError("record " + std::to_string(i) + ": unknown graph '" +
                          name + "'");
      return it->second;
    };
    switch (op.kind) {
      case ScriptOp::Kind::Dumbbell:
        if (reg.count(op.a))
          throw FormatError("record " + std::to_string(i) + ": duplicate id");
        reg.emplace(op.a, EmbeddedGraph{dumbbell(), dumbbell_embedding()});
        last = op.a;
        break;
      case ScriptOp::Kind::Glue: {
        EmbeddedGraph& left = fetch(op.a);
        EmbeddedGraph& right = fetch(op.b);
        if (reg.count(op.result))
          throw FormatError("record " + std::to_string(i) + ": duplicate id");
        reg.emplace(op.result,
                    embedded_block_glue(left, op.ua, right, op.ub));
        last = op.result;
        break;
      }
      case ScriptOp::Kind::Expand: {
        EmbeddedGraph& host = fetch(op.a);
        CycleExpansionSpec spec{op.ua, op.cycle_size, op.darts};
        try {
          OrderPreservingExpansion res =
              order_preserving_expand(host.graph, host.rot, spec);
          host.graph = std::move(res.graph);
          host.rot = std::move(res.rot);
        } catch (const DomainError& e) {
          throw DomainError("record " + std::to_string(i) + ": " + e.what());
        } catch (const ArgumentError& e) {
          throw DomainError("record " + std::to_string(i) + ": " + e.what());
        }
        last = op.a;
        break;
      }
    }
    const EmbeddedGraph& state = reg.at(last);
    if (!euler_planar_per_block(state.graph, state.rot))
      throw InvariantError("planar_synthesize: Euler certificate failed after "
                           "record " + std::to_string(i));
  }
  return reg.at(last);
}

std::string write_embedding(const RotationSystem& rot) {
  std::ostringstream out;
  for (const auto& [v, seq] : rot.order) {
    out << v << ':';
    for (const Dart& d : seq) out << ' ' << d.to_string();
    out << '\n';
  }
  return out.str();
}

RotationSystem parse_embedding(const std::string& text) {
  RotationSystem rot;
  std::istringstream in(text);
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.empty() || line[0] == '#') continue;
    auto colon = line.find(':');
    if (colon == std::string::npos)
      throw FormatError("embedding line needs 'v: darts...'", line_no);
    Vertex v;
    try {
      std::size_t used;
      v = std::stoi(line.substr(0, colon), &used);
      if (used != colon) throw std::invalid_argument("");
    } catch (const std::exception&) {
      throw FormatError("bad vertex id", line_no);
    }
    if (rot.order.count(v)) throw FormatError("duplicate vertex line", line_no);
    std::istringstream rest(line.substr(colon + 1));
    std::string tok;
    std::vector<Dart> seq;
    while (rest >> tok) {
      try {
        seq.push_back(Dart::parse(tok));
      } catch (const FormatError& e) {
        throw FormatError(e.what(), line_no);
      }
      if (seq.back().at != v)
        throw FormatError("dart not anchored at line's vertex", line_no);
    }
    rot.order[v] = std::move(seq);
  }
  return rot;
}

std::string embedding_code(const Multigraph& g, const RotationSystem& rot) {
  rot.validate(g);
  std::string best;
  for (const auto& lab : canonical_labelings(g)) {
    for (int mirror = 0; mirror < 2; ++mirror) {
      std::ostringstream out;
      std::vector<Vertex> by_rank(lab.size());
      for (const auto& [v, rank] : lab) by_rank[rank] = v;
      for (Vertex v : by_rank) {
        std::vector<Dart> seq = rot.order.at(v);
        if (mirror) std::reverse(seq.begin(), seq.end());
        // rotate to the lexicographically least starting dart
        std::size_t start = 0;
        auto key = [&](const Dart& d) {
          return std::pair<int, int>(lab.at(d.to), d.copy);
        };
        for (std::size_t i = 1; i < seq.size(); ++i)
          if (key(seq[i]) < key(seq[start])) start = i;
        out << '|';
        for (std::size_t i = 0; i < seq.size(); ++i) {
          const Dart& d = seq[(start + i) % seq.size()];
          out << lab.at(d.to) << '.' << d.copy << ',';
        }
      }
      std::string code = out.str();
      if (best.empty() || code < best) best = code;
    }
  }
  return best;
}

}  // namespace exact3
