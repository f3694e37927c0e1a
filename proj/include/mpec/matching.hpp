#pragma once

#include <utility>
#include <vector>

#include "mpec/instance.hpp"

namespace mpec {

struct WeightedEdge {
  NodeId u = 0;
  NodeId v = 0;
  long long weight = 0;
};

// Input may contain parallel edges, loops and non-positive weights; they are
// reduced away before the algorithm runs (max weight per pair, loops and
// weight <= 0 edges dropped - they never help a maximum-weight matching).
struct WeightedGraph {
  int num_nodes = 0;
  std::vector<WeightedEdge> edges;
};

struct MatchingResult {
  std::vector<std::pair<NodeId, NodeId>> edges;  // u < v, sorted
  std::vector<NodeId> mate;                      // partner per node, -1 if unmatched
  long long total_weight = 0;
};

// Exact maximum-weight matching on a general graph (Edmonds blossom with
// integer dual variables kept at twice the natural scale). The optimum is
// certified internally against the dual solution before returning.
MatchingResult max_weight_matching(const WeightedGraph& g);

}  // namespace mpec
