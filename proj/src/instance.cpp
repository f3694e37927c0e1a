#include "mpec/instance.hpp"

#include <algorithm>
#include <set>
#include <utility>

namespace mpec {

std::vector<std::vector<EdgeId>> incidence_lists(const Instance& inst) {
  std::vector<std::vector<EdgeId>> at(inst.num_nodes);
  for (EdgeId e = 0; e < static_cast<EdgeId>(inst.edges.size()); ++e) {
    at[inst.edges[e].u].push_back(e);
    at[inst.edges[e].v].push_back(e);
  }
  return at;
}

std::vector<int> degrees(const Instance& inst) {
  std::vector<int> d(inst.num_nodes, 0);
  for (const Edge& e : inst.edges) {
    ++d[e.u];
    ++d[e.v];
  }
  return d;
}

std::vector<Violation> validate_instance(const Instance& inst) {
  std::vector<Violation> out;
  if (inst.num_nodes < 0) {
    out.push_back({"bad-structure", "negative node count"});
    return out;
  }
  if (static_cast<int>(inst.requirements.size()) != inst.num_nodes) {
    out.push_back({"bad-structure", "requirements size does not match node count"});
    return out;
  }
  std::set<std::pair<NodeId, NodeId>> seen;
  std::vector<int> deg(inst.num_nodes, 0);
  for (EdgeId e = 0; e < static_cast<EdgeId>(inst.edges.size()); ++e) {
    const Edge& edge = inst.edges[e];
    const std::string id = "edge " + std::to_string(e) + " (" + std::to_string(edge.u) + "," +
                           std::to_string(edge.v) + ")";
    if (edge.u < 0 || edge.u >= inst.num_nodes || edge.v < 0 || edge.v >= inst.num_nodes) {
      out.push_back({"bad-node", id + " references a node out of range"});
      continue;
    }
    if (edge.u == edge.v) {
      out.push_back({"self-loop", id});
      continue;
    }
    if (edge.cost < 0) out.push_back({"negative-cost", id});
    auto key = std::minmax(edge.u, edge.v);
    if (!seen.insert(key).second) out.push_back({"duplicate-edge", id});
    ++deg[edge.u];
    ++deg[edge.v];
  }
  for (NodeId v = 0; v < inst.num_nodes; ++v) {
    if (inst.requirements[v] < 0) {
      out.push_back({"negative-requirement", "node " + std::to_string(v)});
    } else if (inst.requirements[v] > deg[v]) {
      out.push_back({"requirement-exceeds-degree",
                     "node " + std::to_string(v) + " requires " +
                         std::to_string(inst.requirements[v]) + " but has degree " +
                         std::to_string(deg[v])});
    }
  }
  return out;
}

int max_requirement(const Instance& inst) {
  int k = 0;
  for (int r : inst.requirements) k = std::max(k, r);
  return k;
}

namespace {

// Validates an edge-id set: in range and free of duplicates.
void check_edge_refs(const Instance& inst, std::span<const EdgeId> chosen) {
  std::vector<char> seen(inst.edges.size(), 0);
  for (EdgeId e : chosen) {
    if (e < 0 || e >= static_cast<EdgeId>(inst.edges.size()))
      throw Error("edge reference out of range: " + std::to_string(e));
    if (seen[e]) throw Error("duplicate edge reference: " + std::to_string(e));
    seen[e] = 1;
  }
}

}  // namespace

Solution power_profile(const Instance& inst, std::span<const EdgeId> chosen) {
  check_edge_refs(inst, chosen);
  Solution sol;
  sol.chosen.assign(chosen.begin(), chosen.end());
  std::sort(sol.chosen.begin(), sol.chosen.end());
  sol.power_by_node.assign(inst.num_nodes, 0);
  for (EdgeId e : sol.chosen) {
    const Edge& edge = inst.edges[e];
    sol.power_by_node[edge.u] = std::max(sol.power_by_node[edge.u], edge.cost);
    sol.power_by_node[edge.v] = std::max(sol.power_by_node[edge.v], edge.cost);
  }
  for (Cost p : sol.power_by_node) sol.total_power += p;
  return sol;
}

std::vector<int> residual_requirements(const Instance& inst, std::span<const EdgeId> chosen) {
  check_edge_refs(inst, chosen);
  std::vector<int> res = inst.requirements;
  for (EdgeId e : chosen) {
    const Edge& edge = inst.edges[e];
    if (res[edge.u] > 0) --res[edge.u];
    if (res[edge.v] > 0) --res[edge.v];
  }
  return res;
}

std::vector<Cost> threshold_costs(const Instance& inst) {
  auto inc = incidence_lists(inst);
  std::vector<Cost> w(inst.num_nodes, 0);
  for (NodeId v = 0; v < inst.num_nodes; ++v) {
    int need = inst.requirements[v];
    if (need <= 0) continue;
    if (need > static_cast<int>(inc[v].size()))
      throw Error("requirement exceeds degree at node " + std::to_string(v));
    auto& ids = inc[v];
    std::sort(ids.begin(), ids.end(), [&](EdgeId a, EdgeId b) {
      return std::make_pair(inst.edges[a].cost, a) < std::make_pair(inst.edges[b].cost, b);
    });
    w[v] = inst.edges[ids[need - 1]].cost;
  }
  return w;
}

Solution trivial_cover(const Instance& inst) {
  auto inc = incidence_lists(inst);
  std::vector<char> take(inst.edges.size(), 0);
  for (NodeId v = 0; v < inst.num_nodes; ++v) {
    int need = inst.requirements[v];
    if (need <= 0) continue;
    if (need > static_cast<int>(inc[v].size()))
      throw Error("requirement exceeds degree at node " + std::to_string(v));
    auto& ids = inc[v];
    std::sort(ids.begin(), ids.end(), [&](EdgeId a, EdgeId b) {
      return std::make_pair(inst.edges[a].cost, a) < std::make_pair(inst.edges[b].cost, b);
    });
    for (int i = 0; i < need; ++i) take[ids[i]] = 1;
  }
  std::vector<EdgeId> chosen;
  for (EdgeId e = 0; e < static_cast<EdgeId>(inst.edges.size()); ++e)
    if (take[e]) chosen.push_back(e);
  return power_profile(inst, chosen);
}

Cost deficiency_potential(std::span<const Cost> thresholds, std::span<const int> residual,
                          std::span<const NodeId> nodes) {
  Cost sum = 0;
  for (NodeId b : nodes) sum += thresholds[b] * residual[b];
  return sum;
}

std::vector<EdgeId> merge_edge_sets(std::span<const EdgeId> a, std::span<const EdgeId> b) {
  std::vector<EdgeId> out(a.begin(), a.end());
  out.insert(out.end(), b.begin(), b.end());
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

}  // namespace mpec
