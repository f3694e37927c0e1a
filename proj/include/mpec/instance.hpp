#pragma once

#include <span>
#include <string>
#include <vector>

#include "mpec/errors.hpp"

namespace mpec {

using NodeId = int;
using EdgeId = int;
using Cost = long long;

struct Edge {
  NodeId u = 0;
  NodeId v = 0;
  Cost cost = 0;

  bool operator==(const Edge&) const = default;
};

// A simple undirected graph with integer edge costs and per-node degree
// requirements. Node identifiers are dense 0..num_nodes-1; edge identifiers
// are indices into `edges` and double as the tie-break order everywhere.
struct Instance {
  int num_nodes = 0;
  std::vector<Edge> edges;
  std::vector<int> requirements;  // size num_nodes

  bool operator==(const Instance&) const = default;
};

struct Violation {
  std::string rule;    // stable identifier, e.g. "duplicate-edge"
  std::string detail;  // names the offending node/edge
};

// An edge subset together with the node powers it induces. The power of a
// node is the maximum cost among its chosen incident edges, 0 if isolated.
struct Solution {
  std::vector<EdgeId> chosen;       // sorted ascending, no duplicates
  std::vector<Cost> power_by_node;  // size num_nodes
  Cost total_power = 0;
};

// Incident edge ids per node, in edge-id order.
std::vector<std::vector<EdgeId>> incidence_lists(const Instance& inst);

std::vector<int> degrees(const Instance& inst);

// Empty result means the instance is valid: simple graph, nodes in range,
// non-negative integer costs, and every requirement within the node degree.
std::vector<Violation> validate_instance(const Instance& inst);

inline bool is_valid(const Instance& inst) { return validate_instance(inst).empty(); }

// k = max requirement (0 on an all-zero profile or empty node set).
int max_requirement(const Instance& inst);

// Node powers induced by the edge subset `chosen`. Throws on out-of-range or
// duplicate edge references.
Solution power_profile(const Instance& inst, std::span<const EdgeId> chosen);

// Residual requirements r_J(v) = max(r(v) - deg_J(v), 0).
std::vector<int> residual_requirements(const Instance& inst, std::span<const EdgeId> chosen);

// w_v = cost of the r(v)-th cheapest incident edge (ties by edge id),
// 0 where r(v) = 0. Any feasible cover pays at least w_v at v.
std::vector<Cost> threshold_costs(const Instance& inst);

// Union over nodes of each node's r(v) cheapest incident edges.
Solution trivial_cover(const Instance& inst);

// Sum over the given nodes of w_v * residual(v): the progress measure driven
// down geometrically by the log-k solver.
Cost deficiency_potential(std::span<const Cost> thresholds, std::span<const int> residual,
                          std::span<const NodeId> nodes);

// Sorted, de-duplicated union of two edge-id sets.
std::vector<EdgeId> merge_edge_sets(std::span<const EdgeId> a, std::span<const EdgeId> b);

}  // namespace mpec
