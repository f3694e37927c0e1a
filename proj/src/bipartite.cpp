#include "mpec/bipartite.hpp"

#include <algorithm>

namespace mpec {

BipartiteInstance to_bipartite(const Instance& inst) {
  auto violations = validate_instance(inst);
  if (!violations.empty())
    throw Error("cannot transform invalid instance: " + violations.front().rule + " " +
                violations.front().detail);
  BipartiteInstance bip;
  bip.original_nodes = inst.num_nodes;
  bip.graph.num_nodes = 2 * inst.num_nodes;
  bip.graph.requirements.assign(bip.graph.num_nodes, 0);
  for (NodeId v = 0; v < inst.num_nodes; ++v)
    bip.graph.requirements[bip.side_b(v)] = inst.requirements[v];
  bip.graph.edges.reserve(2 * inst.edges.size());
  bip.origin.reserve(2 * inst.edges.size());
  for (EdgeId e = 0; e < static_cast<EdgeId>(inst.edges.size()); ++e) {
    const Edge& edge = inst.edges[e];
    bip.graph.edges.push_back({bip.side_a(edge.u), bip.side_b(edge.v), edge.cost});
    bip.origin.push_back(e);
    bip.graph.edges.push_back({bip.side_a(edge.v), bip.side_b(edge.u), edge.cost});
    bip.origin.push_back(e);
  }
  return bip;
}

std::vector<EdgeId> from_bipartite(const BipartiteInstance& bip,
                                   std::span<const EdgeId> bip_edges) {
  std::vector<EdgeId> out;
  out.reserve(bip_edges.size());
  for (EdgeId e : bip_edges) {
    if (e < 0 || e >= static_cast<EdgeId>(bip.origin.size()))
      throw Error("bipartite edge reference out of range: " + std::to_string(e));
    out.push_back(bip.origin[e]);
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

}  // namespace mpec
