#ifndef EXACT3_ENUMERATE_HPP
#define EXACT3_ENUMERATE_HPP

#include <functional>
#include <map>
#include <string>
#include <vector>

#include "exact3/multigraph.hpp"
#include "exact3/ops.hpp"

namespace exact3 {

struct EnumerationQuery {
  int max_vertices = 2;
  bool require_simple = false;
  bool require_biconnected = false;
  bool require_minimum = false;
  bool require_planar = false;
  bool count_only = false;
  int jobs = 1;
  long long budget = -1;  // max isomorphism classes explored; -1 = unlimited
};

struct EmittedGraph {
  int order = 0;
  std::string code;  // canonical code (raw bytes)
  Multigraph graph;  // canonically relabeled representative
};

struct EnumerationResult {
  std::map<int, long long> counts_by_order;  // only orders <= max_vertices
  std::vector<EmittedGraph> graphs;          // empty when count_only
};

// Thrown when the class budget runs out; carries what was finished.
class BudgetError : public Error {
 public:
  BudgetError(std::string what, EnumerationResult partial,
              std::vector<int> completed)
      : Error(std::move(what)),
        partial_result(std::move(partial)),
        completed_orders(std::move(completed)) {}
  EnumerationResult partial_result;
  std::vector<int> completed_orders;
};

// Breadth-first closure of the dumbbell under cycle expansion (and block
// gluing unless require_biconnected), deduplicated by canonical code, with
// the filters applied at emission. Counts are deterministic for any jobs
// value.
EnumerationResult enumerate(const EnumerationQuery& query);

// Independent oracle: all simple graphs on <= max_vertices (<= 7) vertices
// by exhaustive generation, filtered to biconnected exactly-3, counted per
// order up to isomorphism.
EnumerationResult brute_force_census(int max_vertices);

// Evaluates the three equivalent characterizations -- minimum edge count
// ceil(kn/2), almost k-regular, exactly k-edge-connected and almost
// k-regular -- and reports whether they agree. g must be k-edge-connected.
bool check_minimum_equivalence(const Multigraph& g, int k);

// Degree-sum admission test for keeping a cycle expansion inside the
// minimum stratum: result keeps sum(deg) <= 3n+1.
bool minimum_filter_admits(const Multigraph& g, const CycleExpansionSpec& spec);

}  // namespace exact3

#endif
