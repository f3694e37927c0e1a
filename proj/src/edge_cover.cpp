#include "mpec/edge_cover.hpp"

#include <algorithm>
#include <map>

#include "mpec/errors.hpp"
#include "mpec/matching.hpp"

namespace mpec {

EdgeCoverResult min_cost_edge_cover(const CoverMultigraph& g) {
  for (EdgeId e = 0; e < static_cast<EdgeId>(g.edges.size()); ++e) {
    const Edge& edge = g.edges[e];
    if (edge.u < 0 || edge.u >= g.num_nodes || edge.v < 0 || edge.v >= g.num_nodes)
      throw Error("cover edge " + std::to_string(e) + " references a node out of range");
    if (edge.cost < 0) throw Error("cover edge " + std::to_string(e) + " has negative cost");
  }

  // Parallel reduction: cheapest edge per unordered pair, cheapest loop per
  // node (ties by edge id). Costlier parallels never appear in a minimum
  // cover.
  std::map<std::pair<NodeId, NodeId>, EdgeId> cheapest;
  for (EdgeId e = 0; e < static_cast<EdgeId>(g.edges.size()); ++e) {
    auto key = std::minmax(g.edges[e].u, g.edges[e].v);
    auto [it, fresh] = cheapest.emplace(key, e);
    if (!fresh && g.edges[e].cost < g.edges[it->second].cost) it->second = e;
  }

  std::vector<std::vector<EdgeId>> incident(g.num_nodes);
  for (const auto& [key, e] : cheapest) {
    incident[key.first].push_back(e);
    if (key.second != key.first) incident[key.second].push_back(e);
  }

  // m(u): cheapest incident edge, loops included.
  std::vector<EdgeId> m_edge(g.num_nodes, -1);
  for (NodeId u = 0; u < g.num_nodes; ++u) {
    for (EdgeId e : incident[u]) {
      if (m_edge[u] == -1 ||
          std::make_pair(g.edges[e].cost, e) <
              std::make_pair(g.edges[m_edge[u]].cost, m_edge[u]))
        m_edge[u] = e;
    }
    if (m_edge[u] == -1) throw Error("node " + std::to_string(u) + " has no incident edge");
  }

  WeightedGraph gains;
  gains.num_nodes = g.num_nodes;
  for (const auto& [key, e] : cheapest) {
    auto [u, v] = key;
    if (u == v) continue;
    long long gain = g.edges[m_edge[u]].cost + g.edges[m_edge[v]].cost - g.edges[e].cost;
    if (gain > 0) gains.edges.push_back({u, v, gain});
  }
  MatchingResult matching = max_weight_matching(gains);

  std::vector<char> in_cover(g.edges.size(), 0);
  std::vector<char> matched(g.num_nodes, 0);
  for (auto [u, v] : matching.edges) {
    matched[u] = matched[v] = 1;
    in_cover[cheapest.at({u, v})] = 1;
  }
  for (NodeId u = 0; u < g.num_nodes; ++u)
    if (!matched[u]) in_cover[m_edge[u]] = 1;

  // Strip redundant edges (descending cost, then descending id): afterwards
  // every edge has a degree-1 endpoint, so components are stars and loops
  // survive only as singleton covers.
  std::vector<int> covered(g.num_nodes, 0);
  for (EdgeId e = 0; e < static_cast<EdgeId>(g.edges.size()); ++e) {
    if (!in_cover[e]) continue;
    ++covered[g.edges[e].u];
    if (g.edges[e].v != g.edges[e].u) ++covered[g.edges[e].v];
  }
  std::vector<EdgeId> order;
  for (EdgeId e = 0; e < static_cast<EdgeId>(g.edges.size()); ++e)
    if (in_cover[e]) order.push_back(e);
  std::sort(order.begin(), order.end(), [&](EdgeId a, EdgeId b) {
    return std::make_pair(g.edges[a].cost, a) > std::make_pair(g.edges[b].cost, b);
  });
  for (EdgeId e : order) {
    const Edge& edge = g.edges[e];
    bool removable = edge.u == edge.v ? covered[edge.u] > 1
                                      : covered[edge.u] > 1 && covered[edge.v] > 1;
    if (removable) {
      in_cover[e] = 0;
      --covered[edge.u];
      if (edge.v != edge.u) --covered[edge.v];
    }
  }

  EdgeCoverResult result;
  for (EdgeId e = 0; e < static_cast<EdgeId>(g.edges.size()); ++e) {
    if (in_cover[e]) {
      result.chosen.push_back(e);
      result.total_cost += g.edges[e].cost;
    }
  }

  Cost base_total = 0;
  for (NodeId u = 0; u < g.num_nodes; ++u) base_total += g.edges[m_edge[u]].cost;
  internal_check(result.total_cost == base_total - matching.total_weight,
                 "edge-cover reduction identity failed");
  return result;
}

}  // namespace mpec
