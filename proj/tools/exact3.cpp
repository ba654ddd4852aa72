// exact3: verify, synthesize, decompose and enumerate exactly
// 3-edge-connected multigraphs.
//
// Exit codes: 0 success, 1 property failure (not exact, witness printed),
// 2 parse error, 3 resource budget exceeded.

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "exact3/blocks.hpp"
#include "exact3/canonical.hpp"
#include "exact3/connectivity.hpp"
#include "exact3/decompose.hpp"
#include "exact3/enumerate.hpp"
#include "exact3/generators.hpp"
#include "exact3/io.hpp"
#include "exact3/ops.hpp"
#include "exact3/planar.hpp"
#include "json.hpp"

using json = nlohmann::json;
using namespace exact3;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitProperty = 1;
constexpr int kExitParse = 2;
constexpr int kExitBudget = 3;

std::string slurp(const std::string& path) {
  if (path == "-") {
    std::ostringstream buf;
    buf << std::cin.rdbuf();
    return buf.str();
  }
  std::ifstream in(path);
  if (!in) throw FormatError("cannot open '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

Multigraph load_graph(const std::string& path, const std::string& format) {
  std::string text = slurp(path);
  if (format == "edgelist") return parse_edge_list(text);
  if (format == "graph6") return parse_graph6(text);
  return parse_graph(text);
}

int parse_failure(const FormatError& e, bool as_json) {
  if (as_json) {
    json out{{"ok", false},
             {"error",
              {{"kind", "parse"}, {"message", e.what()}, {"line", e.line}}}};
    std::cout << out.dump() << '\n';
  } else {
    std::cerr << "parse error";
    if (e.line >= 0) std::cerr << " at line " << e.line;
    std::cerr << ": " << e.what() << '\n';
  }
  return kExitParse;
}

int cmd_verify(const std::string& path, const std::string& format, int k,
               bool as_json) {
  Multigraph g;
  try {
    g = load_graph(path, format);
  } catch (const FormatError& e) {
    return parse_failure(e, as_json);
  }
  ConnectivityReport report = is_exactly_k(g, k);
  if (as_json) {
    json out{{"command", "verify"}, {"ok", report.exact}, {"k", k}};
    if (!report.exact)
      out["witness"] = {{"u", report.witness->u},
                        {"v", report.witness->v},
                        {"lambda", report.witness->lambda}};
    std::cout << out.dump() << '\n';
  } else if (report.exact) {
    std::cout << "EXACT k=" << k << '\n';
  } else {
    std::cout << "NOT EXACT k=" << k << ": lambda(" << report.witness->u << ","
              << report.witness->v << ") = " << report.witness->lambda << '\n';
  }
  return report.exact ? kExitOk : kExitProperty;
}

int cmd_decompose(const std::string& path, const std::string& format,
                  bool thick_tree, bool as_json) {
  Multigraph g;
  try {
    g = load_graph(path, format);
  } catch (const FormatError& e) {
    return parse_failure(e, as_json);
  }
  SynthesisScript script;
  try {
    script = decompose(g);
  } catch (const DomainError& e) {
    if (as_json) {
      json out{{"command", "decompose"},
               {"ok", false},
               {"error", {{"kind", "property"}, {"message", e.what()}}}};
      std::cout << out.dump() << '\n';
    } else {
      std::cerr << e.what() << '\n';
    }
    return kExitProperty;
  }
  if (thick_tree) script = thick_tree_factor(script);
  if (as_json) {
    json out{{"command", "decompose"},
             {"ok", true},
             {"script", script.to_text()},
             {"dumbbells", script.dumbbells()},
             {"gluings", script.gluings()},
             {"expansions", script.expansions()}};
    std::cout << out.dump() << '\n';
  } else {
    std::cout << script.to_text();
  }
  return kExitOk;
}

int cmd_replay(const std::string& path, bool as_json) {
  SynthesisScript script;
  Multigraph g;
  try {
    script = SynthesisScript::parse(slurp(path));
    g = replay(script);
  } catch (const FormatError& e) {
    return parse_failure(e, as_json);
  }
  if (as_json) {
    json out{{"command", "replay"},
             {"ok", true},
             {"order", g.order()},
             {"size", g.size()},
             {"graph", write_edge_list(g)}};
    std::cout << out.dump() << '\n';
  } else {
    std::cout << write_edge_list(g);
  }
  return kExitOk;
}

int cmd_enumerate(const EnumerationQuery& query, bool as_json) {
  EnumerationResult result;
  bool budget_hit = false;
  std::vector<int> completed;
  try {
    result = enumerate(query);
  } catch (const BudgetError& e) {
    result = e.partial_result;
    completed = e.completed_orders;
    budget_hit = true;
  }
  if (as_json) {
    json counts = json::object();
    for (const auto& [order, count] : result.counts_by_order)
      counts[std::to_string(order)] = count;
    json out{{"command", "enumerate"},
             {"ok", !budget_hit},
             {"counts_by_order", counts}};
    if (budget_hit) out["completed_orders"] = completed;
    std::cout << out.dump() << '\n';
  } else {
    for (const EmittedGraph& e : result.graphs) {
      std::ostringstream flat;
      flat << e.graph.order() << ' ' << e.graph.distinct_edge_count();
      for (const auto& [pair, mult] : e.graph.edges())
        flat << ' ' << pair.first << ' ' << pair.second << ' ' << mult;
      std::cout << e.order << '\t' << to_hex(e.code) << '\t' << flat.str()
                << '\n';
    }
    for (const auto& [order, count] : result.counts_by_order)
      std::cerr << order << '\t' << count << '\n';
    if (budget_hit) std::cerr << "budget exceeded; partial summary above\n";
  }
  return budget_hit ? kExitBudget : kExitOk;
}

int cmd_expand(const std::string& path, const std::string& format, Vertex vertex,
               int cycle_size, const std::string& dart_order, bool as_json) {
  Multigraph g;
  CycleExpansionSpec spec;
  try {
    g = load_graph(path, format);
    spec.target = vertex;
    spec.cycle_size = cycle_size;
    std::istringstream in(dart_order);
    std::string tok;
    while (std::getline(in, tok, ','))
      if (!tok.empty()) spec.assignment.push_back(Dart::parse(tok));
  } catch (const FormatError& e) {
    return parse_failure(e, as_json);
  }
  Multigraph out = block_respecting_cycle_expand(g, spec);
  if (as_json) {
    json j{{"command", "expand"}, {"ok", true}, {"graph", write_edge_list(out)}};
    std::cout << j.dump() << '\n';
  } else {
    std::cout << write_edge_list(out);
  }
  return kExitOk;
}

int cmd_glue(const std::string& left, const std::string& right,
             const std::string& format, const std::string& mode, Vertex u1,
             Vertex u2, const std::string& pairing, bool as_json) {
  Multigraph g1, g2;
  VertexGluingSpec spec;
  try {
    g1 = load_graph(left, format);
    g2 = load_graph(right, format);
    if (mode == "vertex") {
      spec.u1 = u1;
      spec.u2 = u2;
      std::istringstream in(pairing);
      std::string tok;
      while (std::getline(in, tok, ',')) {
        auto colon = tok.find(':');
        if (colon == std::string::npos)
          throw FormatError("pairing entries look like dart:dart");
        spec.pairing.push_back({Dart::parse(tok.substr(0, colon)),
                                Dart::parse(tok.substr(colon + 1))});
      }
    }
  } catch (const FormatError& e) {
    return parse_failure(e, as_json);
  }
  Multigraph out = mode == "vertex" ? vertex_glue(g1, g2, spec)
                                    : block_glue(g1, u1, g2, u2);
  if (as_json) {
    json j{{"command", "glue"}, {"ok", true}, {"graph", write_edge_list(out)}};
    std::cout << j.dump() << '\n';
  } else {
    std::cout << write_edge_list(out);
  }
  return kExitOk;
}

int cmd_export(const std::string& path, const std::string& in_format,
               const std::string& out_format, bool as_json) {
  Multigraph g;
  try {
    g = load_graph(path, in_format);
  } catch (const FormatError& e) {
    return parse_failure(e, as_json);
  }
  std::string rendered;
  if (out_format == "dot")
    rendered = write_dot(g);
  else if (out_format == "graph6")
    rendered = write_graph6(g) + "\n";
  else
    rendered = write_edge_list(g);
  if (as_json) {
    json j{{"command", "export"}, {"ok", true}, {"output", rendered}};
    std::cout << j.dump() << '\n';
  } else {
    std::cout << rendered;
  }
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exactly 3-edge-connected multigraph toolkit"};
  app.require_subcommand(1);
  bool as_json = false;
  std::string format = "auto";

  auto add_common = [&](CLI::App* cmd, bool with_format = true) {
    cmd->add_flag("--json", as_json, "machine-readable output");
    if (with_format)
      cmd->add_option("--format", format, "edgelist|graph6|auto")
          ->check(CLI::IsMember({"auto", "edgelist", "graph6"}));
  };

  std::string path, path2;
  int k = 3;
  auto* verify = app.add_subcommand("verify", "check exact k-edge-connectivity");
  verify->add_option("path", path, "graph file (- for stdin)")->required();
  verify->add_option("--k", k, "connectivity target (default 3)");
  add_common(verify);

  bool thick = false;
  auto* dec = app.add_subcommand("decompose", "emit a synthesis script");
  dec->add_option("path", path)->required();
  dec->add_flag("--thick-tree", thick, "factor gluings in front of expansions");
  add_common(dec);

  auto* rep = app.add_subcommand("replay", "rebuild a graph from a script");
  rep->add_option("path", path, "script file (- for stdin)")->required();
  add_common(rep, false);

  EnumerationQuery query;
  long long budget = -1;
  auto* enu = app.add_subcommand("enumerate", "exhaustive synthesis closure");
  enu->add_option("--max-n", query.max_vertices, "largest order")->required();
  enu->add_flag("--simple", query.require_simple);
  enu->add_flag("--biconnected", query.require_biconnected);
  enu->add_flag("--minimum", query.require_minimum);
  enu->add_flag("--planar", query.require_planar);
  enu->add_flag("--count-only", query.count_only);
  enu->add_option("--jobs", query.jobs, "parallel expansion threads");
  enu->add_option("--budget", budget, "max isomorphism classes explored");
  add_common(enu, false);

  Vertex vertex = -1, u1 = -1, u2 = -1;
  int cycle_size = 0;
  std::string darts, mode = "block", pairing;
  auto* exp = app.add_subcommand("expand", "cycle expansion at a vertex");
  exp->add_option("path", path)->required();
  exp->add_option("--vertex", vertex)->required();
  exp->add_option("--cycle-size", cycle_size)->required();
  exp->add_option("--darts", darts, "comma-separated dart order")->required();
  add_common(exp);

  auto* glue = app.add_subcommand("glue", "block or vertex gluing");
  glue->add_option("left", path)->required();
  glue->add_option("right", path2)->required();
  glue->add_option("--mode", mode)->check(CLI::IsMember({"block", "vertex"}));
  glue->add_option("--u1", u1)->required();
  glue->add_option("--u2", u2)->required();
  glue->add_option("--pairing", pairing, "dart:dart,... for vertex mode");
  add_common(glue);

  std::string out_format = "dot";
  auto* exp2 = app.add_subcommand("export", "re-serialize a graph");
  exp2->add_option("path", path)->required();
  exp2->add_option("--to", out_format, "dot|edgelist|graph6")
      ->check(CLI::IsMember({"dot", "edgelist", "graph6"}));
  add_common(exp2);

  CLI11_PARSE(app, argc, argv);

  try {
    if (*verify) return cmd_verify(path, format, k, as_json);
    if (*dec) return cmd_decompose(path, format, thick, as_json);
    if (*rep) return cmd_replay(path, as_json);
    if (*enu) {
      query.budget = budget;
      return cmd_enumerate(query, as_json);
    }
    if (*exp) return cmd_expand(path, format, vertex, cycle_size, darts, as_json);
    if (*glue)
      return cmd_glue(path, path2, format, mode, u1, u2, pairing, as_json);
    if (*exp2) return cmd_export(path, format, out_format, as_json);
  } catch (const FormatError& e) {
    return parse_failure(e, as_json);
  } catch (const Error& e) {
    if (as_json) {
      json out{{"ok", false},
               {"error", {{"kind", "property"}, {"message", e.what()}}}};
      std::cout << out.dump() << '\n';
    } else {
      std::cerr << e.what() << '\n';
    }
    return kExitProperty;
  }
  return kExitOk;
}
