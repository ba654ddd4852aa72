#ifndef EXACT3_CANONICAL_HPP
#define EXACT3_CANONICAL_HPP

#include <map>
#include <string>

#include "exact3/multigraph.hpp"

namespace exact3 {

// Canonical byte string: equal for two multigraphs iff they are isomorphic.
// Layout: one byte vertex count, then the upper triangle of the canonically
// relabeled multiplicity matrix, one byte per pair.
struct CanonicalForm {
  std::string code;
  std::map<Vertex, int> labeling;  // original id -> canonical position
};

CanonicalForm canonical_form(const Multigraph& g);
std::string canonical_code(const Multigraph& g);
bool is_isomorphic(const Multigraph& g, const Multigraph& h);

// Every discrete labeling that reaches the canonical code; the set is a
// coset of the automorphism group. Needed where a structure on top of the
// graph (a rotation system) must be canonicalized exactly.
std::vector<std::map<Vertex, int>> canonical_labelings(const Multigraph& g);

std::string to_hex(const std::string& code);

}  // namespace exact3

#endif
