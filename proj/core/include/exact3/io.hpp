#ifndef EXACT3_IO_HPP
#define EXACT3_IO_HPP

#include <iosfwd>
#include <string>

#include "exact3/multigraph.hpp"

namespace exact3 {

enum class GraphFormat { EdgeList, Graph6 };

// Header "n m", then m lines "u v r" with 0-based ids and multiplicity
// r >= 1. FormatError carries the offending 1-based line number.
Multigraph parse_edge_list(const std::string& text);
// Compacts vertex ids to 0..n-1 in ascending id order.
std::string write_edge_list(const Multigraph& g);

// graph6, simple graphs only; the optional ">>graph6<<" prefix is accepted.
Multigraph parse_graph6(const std::string& line);
std::string write_graph6(const Multigraph& g);

std::string write_dot(const Multigraph& g);  // parallel edges repeated

GraphFormat detect_format(const std::string& text);
Multigraph parse_graph(const std::string& text);  // detect, then parse
Multigraph read_graph_file(const std::string& path);

}  // namespace exact3

#endif
