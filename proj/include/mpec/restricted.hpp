#pragma once

#include <array>
#include <span>
#include <vector>

#include "mpec/edge_cover.hpp"
#include "mpec/instance.hpp"

namespace mpec {

// Cover a target node set U at minimum total node power, subject to
// per-node power floors on U. A power assignment pi is feasible when
// pi >= lower on U and the edges affordable at both ends cover U.
struct RestrictedInstance {
  Instance graph;
  std::vector<char> in_u;    // size num_nodes
  std::vector<Cost> lower;   // size num_nodes; 0 outside U
};

// Extra power an edge set forces beyond the floors:
// sum over nodes of max(p_I(v) - lower_v, 0).
Cost deficiency(const Instance& inst, std::span<const Cost> lower,
                std::span<const EdgeId> chosen);

// Raises each floor on U to at least the cheapest incident cost. Loss-free:
// any feasible assignment already pays that much. Throws if a U node has no
// incident edge.
RestrictedInstance normalized(RestrictedInstance ri);

enum class CoverEdgeKind { kLoop, kDirect, kTwoPath };

struct CoverGraphEdge {
  NodeId u = 0;  // original node ids, both in U
  NodeId v = 0;
  Cost cost = 0;
  CoverEdgeKind kind = CoverEdgeKind::kLoop;
  std::array<EdgeId, 2> origin = {-1, -1};  // backing edges in the instance
  int origin_size = 0;
};

// Auxiliary covering problem over U. Loops price covering a node through
// its cheapest edge, direct edges price an edge inside U, two-path edges
// price covering two U nodes through a shared intermediate (only the
// cheapest parallel per pair is kept). Every edge cost decomposes as
// floors(e') + deficiency(origin(e')).
struct CoverGraph {
  std::vector<NodeId> u_nodes;  // dense cover-graph node -> original node
  CoverMultigraph graph;
  std::vector<CoverGraphEdge> meta;  // aligned with graph.edges
};

// Requires normalized floors.
CoverGraph build_cover_graph(const RestrictedInstance& ri);

struct PowerAssignment {
  std::vector<Cost> pi;           // size num_nodes
  std::vector<EdgeId> induced;    // edges affordable at both endpoints
  Cost total = 0;
};

struct RestrictedResult {
  PowerAssignment assignment;
  Cost cover_cost = 0;                // optimum of the auxiliary cover
  std::vector<EdgeId> cover_edges;    // ids into CoverGraph::graph.edges
};

// 3/2-approximation: solve the auxiliary cover exactly, take the union of
// origin edges, and lift to pi(v) = max(p_I(v), lower_v). Guarantees
// total <= cover_cost (checked) and feasibility of the assignment.
RestrictedResult solve_restricted(const RestrictedInstance& ri);

// Edges uv with pi(u) >= c(uv) and pi(v) >= c(uv).
std::vector<EdgeId> induced_edge_set(const Instance& inst, std::span<const Cost> pi);

// True when every U node has an incident edge in `chosen`.
bool covers_targets(const Instance& inst, std::span<const EdgeId> chosen,
                    const std::vector<char>& in_u);

}  // namespace mpec
