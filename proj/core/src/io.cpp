#include "exact3/io.hpp"

#include <cctype>
#include <fstream>
#include <sstream>

namespace exact3 {

namespace {

std::vector<std::string> split_ws(const std::string& line) {
  std::vector<std::string> out;
  std::istringstream in(line);
  std::string tok;
  while (in >> tok) out.push_back(tok);
  return out;
}

long parse_int(const std::string& tok, int line_no, const char* what) {
  std::size_t used = 0;
  long v;
  try {
    v = std::stol(tok, &used);
  } catch (const std::exception&) {
    throw FormatError(std::string("expected ") + what + ", got '" + tok + "'",
                      line_no);
  }
  if (used != tok.size())
    throw FormatError(std::string("expected ") + what + ", got '" + tok + "'",
                      line_no);
  return v;
}

}  // namespace

Multigraph parse_edge_list(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  int line_no = 0;
  long n = -1, m = -1;
  Multigraph g;
  long seen = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.empty() || line[0] == '#') continue;
    auto toks = split_ws(line);
    if (toks.empty()) continue;
    if (n < 0) {
      if (toks.size() != 2)
        throw FormatError("header must be 'n m'", line_no);
      n = parse_int(toks[0], line_no, "vertex count");
      m = parse_int(toks[1], line_no, "edge count");
      if (n < 0 || m < 0) throw FormatError("negative header values", line_no);
      for (long v = 0; v < n; ++v) g.add_vertex(static_cast<Vertex>(v));
      continue;
    }
    if (toks.size() != 3)
      throw FormatError("edge line must be 'u v r'", line_no);
    long u = parse_int(toks[0], line_no, "vertex id");
    long v = parse_int(toks[1], line_no, "vertex id");
    long r = parse_int(toks[2], line_no, "multiplicity");
    if (u < 0 || u >= n || v < 0 || v >= n)
      throw FormatError("vertex id out of range", line_no);
    if (u == v) throw FormatError("self-loop not allowed", line_no);
    if (r < 1) throw FormatError("multiplicity must be >= 1", line_no);
    if (g.multiplicity(static_cast<Vertex>(u), static_cast<Vertex>(v)) != 0)
      throw FormatError("duplicate edge line", line_no);
    if (++seen > m) throw FormatError("more edge lines than header says", line_no);
    g.add_edge(static_cast<Vertex>(u), static_cast<Vertex>(v),
               static_cast<int>(r));
  }
  if (n < 0) throw FormatError("missing header", 1);
  if (seen != m)
    throw FormatError("expected " + std::to_string(m) + " edge lines, got " +
                          std::to_string(seen),
                      line_no);
  return g;
}

std::string write_edge_list(const Multigraph& g) {
  std::map<Vertex, int> compact;
  for (Vertex v : g.vertices())
    compact.emplace(v, static_cast<int>(compact.size()));
  std::ostringstream out;
  out << g.order() << ' ' << g.distinct_edge_count() << '\n';
  for (const auto& [pair, mult] : g.edges()) {
    int a = compact[pair.first], b = compact[pair.second];
    if (a > b) std::swap(a, b);
    out << a << ' ' << b << ' ' << mult << '\n';
  }
  return out.str();
}

Multigraph parse_graph6(const std::string& input) {
  std::string line = input;
  if (line.rfind(">>graph6<<", 0) == 0) line = line.substr(10);
  while (!line.empty() && (line.back() == '\n' || line.back() == '\r'))
    line.pop_back();
  if (line.empty()) throw FormatError("empty graph6 line", 1);

  std::size_t pos = 0;
  auto byte = [&](std::size_t i) -> int {
    if (i >= line.size()) throw FormatError("graph6 data truncated", 1);
    int c = static_cast<unsigned char>(line[i]);
    if (c < 63 || c > 126)
      throw FormatError("byte out of graph6 range", 1);
    return c - 63;
  };

  long n;
  if (byte(0) <= 62) {
    n = byte(0);
    pos = 1;
  } else {
    if (line.size() < 4) throw FormatError("graph6 data truncated", 1);
    if (byte(1) == 63) {  // 8-byte form for n >= 258048
      n = 0;
      for (int i = 2; i < 8; ++i) n = (n << 6) | byte(i);
      pos = 8;
    } else {
      n = (static_cast<long>(byte(1)) << 12) | (byte(2) << 6) | byte(3);
      pos = 4;
    }
  }
  if (n > 4096) throw FormatError("graph6 order too large", 1);

  Multigraph g;
  for (long v = 0; v < n; ++v) g.add_vertex(static_cast<Vertex>(v));
  long bit = 0;
  for (long j = 1; j < n; ++j)
    for (long i = 0; i < j; ++i, ++bit) {
      int data = byte(pos + bit / 6);
      if ((data >> (5 - bit % 6)) & 1)
        g.add_edge(static_cast<Vertex>(i), static_cast<Vertex>(j));
    }
  return g;
}

std::string write_graph6(const Multigraph& g) {
  if (!g.is_simple())
    throw DomainError("write_graph6: graph has parallel edges");
  long n = static_cast<long>(g.order());
  if (n > 62 * 62 * 62) throw DomainError("write_graph6: order too large");
  std::map<Vertex, long> compact;
  for (Vertex v : g.vertices())
    compact.emplace(v, static_cast<long>(compact.size()));

  std::string out;
  if (n <= 62) {
    out.push_back(static_cast<char>(n + 63));
  } else {
    out.push_back(126);
    out.push_back(static_cast<char>(((n >> 12) & 63) + 63));
    out.push_back(static_cast<char>(((n >> 6) & 63) + 63));
    out.push_back(static_cast<char>((n & 63) + 63));
  }
  std::vector<char> adj(static_cast<std::size_t>(n) * n, 0);
  for (const auto& [pair, mult] : g.edges()) {
    long a = compact[pair.first], b = compact[pair.second];
    adj[a * n + b] = adj[b * n + a] = 1;
  }
  int acc = 0, nbits = 0;
  for (long j = 1; j < n; ++j)
    for (long i = 0; i < j; ++i) {
      acc = (acc << 1) | adj[i * n + j];
      if (++nbits == 6) {
        out.push_back(static_cast<char>(acc + 63));
        acc = 0;
        nbits = 0;
      }
    }
  if (nbits > 0) out.push_back(static_cast<char>((acc << (6 - nbits)) + 63));
  return out;
}

std::string write_dot(const Multigraph& g) {
  std::ostringstream out;
  out << "graph G {\n";
  for (Vertex v : g.vertices()) out << "  " << v << ";\n";
  for (const auto& [pair, mult] : g.edges())
    for (int c = 0; c < mult; ++c)
      out << "  " << pair.first << " -- " << pair.second << ";\n";
  out << "}\n";
  return out.str();
}

GraphFormat detect_format(const std::string& text) {
  // An edge-list file opens with a "n m" header made of digits and spaces;
  // anything else in graph6's printable range is taken as graph6.
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty() || line[0] == '#') continue;
    auto toks = split_ws(line);
    if (toks.size() == 2) {
      bool digits = true;
      for (const auto& t : toks)
        for (char c : t)
          if (!std::isdigit(static_cast<unsigned char>(c))) digits = false;
      if (digits) return GraphFormat::EdgeList;
    }
    break;
  }
  return GraphFormat::Graph6;
}

Multigraph parse_graph(const std::string& text) {
  switch (detect_format(text)) {
    case GraphFormat::EdgeList:
      return parse_edge_list(text);
    case GraphFormat::Graph6:
      return parse_graph6(text);
  }
  throw FormatError("unreachable", 1);
}

Multigraph read_graph_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw FormatError("cannot open '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_graph(buf.str());
}

}  // namespace exact3
