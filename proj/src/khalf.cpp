#include "mpec/khalf.hpp"

#include <algorithm>

#include "mpec/errors.hpp"
#include "mpec/restricted.hpp"

namespace mpec {

Solution solve_khalf(const Instance& inst) {
  auto violations = validate_instance(inst);
  if (!violations.empty())
    throw Error("infeasible instance: " + violations.front().rule + " " +
                violations.front().detail);

  RestrictedInstance ri;
  ri.graph = inst;
  ri.in_u.assign(inst.num_nodes, 0);
  ri.lower.assign(inst.num_nodes, 0);
  std::vector<Cost> w = threshold_costs(inst);
  for (NodeId v = 0; v < inst.num_nodes; ++v) {
    if (inst.requirements[v] >= 1) {
      ri.in_u[v] = 1;
      ri.lower[v] = w[v];
    }
  }

  RestrictedResult stage1 = solve_restricted(ri);
  const std::vector<EdgeId>& cover = stage1.assignment.induced;

  std::vector<char> in_cover(inst.edges.size(), 0);
  for (EdgeId e : cover) in_cover[e] = 1;
  std::vector<int> residual = residual_requirements(inst, cover);
  for (NodeId v = 0; v < inst.num_nodes; ++v)
    if (ri.in_u[v])
      internal_check(residual[v] < inst.requirements[v],
                     "covered node kept its full requirement");

  auto inc = incidence_lists(inst);
  std::vector<char> take = in_cover;
  for (NodeId v = 0; v < inst.num_nodes; ++v) {
    int need = residual[v];
    if (need <= 0) continue;
    std::vector<EdgeId> avail;
    for (EdgeId e : inc[v])
      if (!in_cover[e]) avail.push_back(e);
    internal_check(static_cast<int>(avail.size()) >= need,
                   "not enough edges to finish a requirement");
    std::sort(avail.begin(), avail.end(), [&](EdgeId a, EdgeId b) {
      return std::make_pair(inst.edges[a].cost, a) < std::make_pair(inst.edges[b].cost, b);
    });
    for (int i = 0; i < need; ++i) {
      internal_check(inst.edges[avail[i]].cost <= w[v],
                     "top-up edge costs more than the node threshold");
      take[avail[i]] = 1;
    }
  }

  std::vector<EdgeId> chosen;
  for (EdgeId e = 0; e < static_cast<EdgeId>(inst.edges.size()); ++e)
    if (take[e]) chosen.push_back(e);
  Solution sol = power_profile(inst, chosen);

  std::vector<int> final_res = residual_requirements(inst, sol.chosen);
  for (int r : final_res) internal_check(r == 0, "output is not a full cover");
  return sol;
}

}  // namespace mpec
