#pragma once

#include <vector>

#include "mpec/instance.hpp"

namespace mpec {

// Multigraph with non-negative edge costs; u == v denotes a loop and
// parallel edges are allowed. Every node needs at least one incident edge
// for a cover to exist.
struct CoverMultigraph {
  int num_nodes = 0;
  std::vector<Edge> edges;
};

struct EdgeCoverResult {
  std::vector<EdgeId> chosen;  // sorted ids into the input edge list
  Cost total_cost = 0;
};

// Exact minimum-cost edge cover. Reduction: take each node's cheapest
// incident edge, then run maximum-weight matching on the gains
// m(u) + m(v) - c(uv); matched edges replace the two cheapest picks.
// The result is minimal (a disjoint union of stars; loops only as
// singleton covers). Throws naming the node if some node is uncoverable.
EdgeCoverResult min_cost_edge_cover(const CoverMultigraph& g);

}  // namespace mpec
