#pragma once

#include <span>
#include <vector>

#include "mpec/instance.hpp"

namespace mpec {

// Two-copy reduction of an instance: side A carries a node a_v per original
// node, side B a node b_v, and every original edge uv becomes the pair
// a_u b_v / a_v b_u at the original cost. Requirements live on side B only.
// The doubled graph is itself an Instance (a_v = v, b_v = n + v), so all
// instance operations apply to it directly.
struct BipartiteInstance {
  Instance graph;
  std::vector<EdgeId> origin;  // bipartite edge id -> original edge id
  int original_nodes = 0;

  NodeId side_a(NodeId v) const { return v; }
  NodeId side_b(NodeId v) const { return original_nodes + v; }
  bool is_b(NodeId x) const { return x >= original_nodes; }

  // Side-B node ids in ascending order.
  std::vector<NodeId> b_nodes() const {
    std::vector<NodeId> out;
    out.reserve(original_nodes);
    for (NodeId v = 0; v < original_nodes; ++v) out.push_back(side_b(v));
    return out;
  }
};

// Requires a valid instance. Original edge e yields bipartite edges 2e and
// 2e+1, so provenance is positional as well as stored.
BipartiteInstance to_bipartite(const Instance& inst);

// Maps a bipartite edge set back to the original edges it came from
// (de-duplicated, sorted). Covers map to covers and power never increases.
std::vector<EdgeId> from_bipartite(const BipartiteInstance& bip,
                                   std::span<const EdgeId> bip_edges);

}  // namespace mpec
