#include "mpec/restricted.hpp"

#include <algorithm>
#include <map>

#include "mpec/errors.hpp"

namespace mpec {

namespace {

void check_restricted(const RestrictedInstance& ri) {
  if (static_cast<int>(ri.in_u.size()) != ri.graph.num_nodes ||
      static_cast<int>(ri.lower.size()) != ri.graph.num_nodes)
    throw Error("restricted instance field sizes do not match node count");
  for (NodeId v = 0; v < ri.graph.num_nodes; ++v) {
    if (ri.lower[v] < 0) throw Error("negative power floor at node " + std::to_string(v));
    if (!ri.in_u[v] && ri.lower[v] != 0)
      throw Error("power floor outside the target set at node " + std::to_string(v));
  }
}

// Deficiency of a one- or two-edge set, without building a full profile.
Cost small_deficiency(const Instance& inst, std::span<const Cost> lower,
                      std::span<const EdgeId> chosen) {
  NodeId touched[4];
  Cost power[4];
  int cnt = 0;
  for (EdgeId e : chosen) {
    for (NodeId x : {inst.edges[e].u, inst.edges[e].v}) {
      int i = 0;
      while (i < cnt && touched[i] != x) ++i;
      if (i == cnt) {
        touched[cnt] = x;
        power[cnt] = inst.edges[e].cost;
        ++cnt;
      } else {
        power[i] = std::max(power[i], inst.edges[e].cost);
      }
    }
  }
  Cost d = 0;
  for (int i = 0; i < cnt; ++i) d += std::max<Cost>(power[i] - lower[touched[i]], 0);
  return d;
}

}  // namespace

Cost deficiency(const Instance& inst, std::span<const Cost> lower,
                std::span<const EdgeId> chosen) {
  if (chosen.size() <= 2) {
    for (EdgeId e : chosen)
      if (e < 0 || e >= static_cast<EdgeId>(inst.edges.size()))
        throw Error("edge reference out of range: " + std::to_string(e));
    return small_deficiency(inst, lower, chosen);
  }
  Solution prof = power_profile(inst, chosen);
  Cost d = 0;
  for (NodeId v = 0; v < inst.num_nodes; ++v)
    d += std::max<Cost>(prof.power_by_node[v] - lower[v], 0);
  return d;
}

RestrictedInstance normalized(RestrictedInstance ri) {
  check_restricted(ri);
  std::vector<Cost> min_cost(ri.graph.num_nodes, -1);
  for (const Edge& e : ri.graph.edges) {
    for (NodeId x : {e.u, e.v})
      if (min_cost[x] < 0 || e.cost < min_cost[x]) min_cost[x] = e.cost;
  }
  for (NodeId v = 0; v < ri.graph.num_nodes; ++v) {
    if (!ri.in_u[v]) continue;
    if (min_cost[v] < 0)
      throw Error("target node " + std::to_string(v) + " has no incident edge");
    ri.lower[v] = std::max(ri.lower[v], min_cost[v]);
  }
  return ri;
}

CoverGraph build_cover_graph(const RestrictedInstance& ri) {
  check_restricted(ri);
  const Instance& g = ri.graph;
  CoverGraph out;
  std::vector<int> dense(g.num_nodes, -1);
  for (NodeId v = 0; v < g.num_nodes; ++v) {
    if (ri.in_u[v]) {
      dense[v] = static_cast<int>(out.u_nodes.size());
      out.u_nodes.push_back(v);
    }
  }
  out.graph.num_nodes = static_cast<int>(out.u_nodes.size());

  auto inc = incidence_lists(g);
  auto push = [&](NodeId u, NodeId v, Cost cost, CoverEdgeKind kind, EdgeId e1, EdgeId e2) {
    CoverGraphEdge meta;
    meta.u = u;
    meta.v = v;
    meta.cost = cost;
    meta.kind = kind;
    meta.origin = {e1, e2};
    meta.origin_size = e2 >= 0 ? 2 : 1;
    out.graph.edges.push_back({dense[u], dense[v], cost});
    out.meta.push_back(meta);
  };

  // Loops: cover u through its cheapest incident edge (ties by edge id).
  for (NodeId u : out.u_nodes) {
    if (inc[u].empty())
      throw Error("target node " + std::to_string(u) + " has no incident edge");
    EdgeId cheapest = inc[u][0];
    for (EdgeId e : inc[u]) {
      if (std::make_pair(g.edges[e].cost, e) <
          std::make_pair(g.edges[cheapest].cost, cheapest))
        cheapest = e;
    }
    std::array<EdgeId, 1> one{cheapest};
    push(u, u, ri.lower[u] + deficiency(g, ri.lower, one), CoverEdgeKind::kLoop, cheapest, -1);
  }

  // Direct edges inside U.
  for (EdgeId e = 0; e < static_cast<EdgeId>(g.edges.size()); ++e) {
    NodeId u = g.edges[e].u, v = g.edges[e].v;
    if (!ri.in_u[u] || !ri.in_u[v]) continue;
    std::array<EdgeId, 1> one{e};
    push(u, v, ri.lower[u] + ri.lower[v] + deficiency(g, ri.lower, one),
         CoverEdgeKind::kDirect, e, -1);
  }

  // Two-path edges: u-x-v with c(ux) >= c(xv), u != v, both in U. Keep the
  // cheapest per unordered pair.
  std::map<std::pair<NodeId, NodeId>, std::pair<Cost, std::array<EdgeId, 2>>> best;
  for (NodeId x = 0; x < g.num_nodes; ++x) {
    for (EdgeId e1 : inc[x]) {
      NodeId u = g.edges[e1].u == x ? g.edges[e1].v : g.edges[e1].u;
      if (!ri.in_u[u]) continue;
      for (EdgeId e2 : inc[x]) {
        if (e2 == e1) continue;
        NodeId v = g.edges[e2].u == x ? g.edges[e2].v : g.edges[e2].u;
        if (!ri.in_u[v] || u == v) continue;
        if (g.edges[e1].cost < g.edges[e2].cost) continue;
        std::array<EdgeId, 2> pair{e1, e2};
        Cost cost = ri.lower[u] + ri.lower[v] + deficiency(g, ri.lower, pair);
        auto key = std::minmax(u, v);
        auto [it, fresh] = best.emplace(key, std::make_pair(cost, pair));
        if (!fresh && cost < it->second.first) it->second = {cost, pair};
      }
    }
  }
  for (const auto& [key, val] : best)
    push(key.first, key.second, val.first, CoverEdgeKind::kTwoPath, val.second[0],
         val.second[1]);

  return out;
}

std::vector<EdgeId> induced_edge_set(const Instance& inst, std::span<const Cost> pi) {
  std::vector<EdgeId> out;
  for (EdgeId e = 0; e < static_cast<EdgeId>(inst.edges.size()); ++e) {
    const Edge& edge = inst.edges[e];
    if (pi[edge.u] >= edge.cost && pi[edge.v] >= edge.cost) out.push_back(e);
  }
  return out;
}

bool covers_targets(const Instance& inst, std::span<const EdgeId> chosen,
                    const std::vector<char>& in_u) {
  std::vector<char> hit(inst.num_nodes, 0);
  for (EdgeId e : chosen) {
    hit[inst.edges[e].u] = 1;
    hit[inst.edges[e].v] = 1;
  }
  for (NodeId v = 0; v < inst.num_nodes; ++v)
    if (in_u[v] && !hit[v]) return false;
  return true;
}

RestrictedResult solve_restricted(const RestrictedInstance& input) {
  RestrictedInstance ri = normalized(input);
  const Instance& g = ri.graph;

  RestrictedResult result;
  bool any_target = false;
  for (char c : ri.in_u) any_target |= (c != 0);
  if (!any_target) {
    result.assignment.pi.assign(g.num_nodes, 0);
    result.assignment.induced = induced_edge_set(g, result.assignment.pi);
    for (Cost p : result.assignment.pi) result.assignment.total += p;
    return result;
  }

  CoverGraph cg = build_cover_graph(ri);
  EdgeCoverResult cover = min_cost_edge_cover(cg.graph);
  result.cover_cost = cover.total_cost;
  result.cover_edges = cover.chosen;

  std::vector<EdgeId> lifted;
  for (EdgeId ce : cover.chosen)
    for (int i = 0; i < cg.meta[ce].origin_size; ++i) lifted.push_back(cg.meta[ce].origin[i]);
  std::sort(lifted.begin(), lifted.end());
  lifted.erase(std::unique(lifted.begin(), lifted.end()), lifted.end());

  Solution prof = power_profile(g, lifted);
  result.assignment.pi.resize(g.num_nodes);
  for (NodeId v = 0; v < g.num_nodes; ++v) {
    result.assignment.pi[v] = std::max(prof.power_by_node[v], ri.lower[v]);
    result.assignment.total += result.assignment.pi[v];
  }
  result.assignment.induced = induced_edge_set(g, result.assignment.pi);

  internal_check(covers_targets(g, result.assignment.induced, ri.in_u),
                 "lifted assignment fails to cover the target set");
  internal_check(result.assignment.total <= result.cover_cost,
                 "assignment exceeds the auxiliary cover cost");
  return result;
}

}  // namespace mpec
