#pragma once

#include <span>
#include <vector>

#include "mpec/bipartite.hpp"

namespace mpec {

// Budgeted coverage on a bipartite instance: pick candidate edges I so that
// the side-A power stays within the budget while maximizing
//   sum over b of w_b * min(deg_I(b), r(b)).
//
// The side-A power is not additive over edges, so the solver works on star
// choices: (center a, level) covers every candidate edge at a of cost at
// most level, at an additive knapsack cost of level. One choice per center
// reproduces any edge solution exactly; extra choices at a center only
// overpay and are avoided by the optimizer.
struct StarChoice {
  NodeId center = 0;
  Cost level = 0;
  std::vector<EdgeId> covered;  // candidate edges at center with cost <= level
};

// All star choices over the candidate set, sorted by (center, level); one
// entry per distinct cost at each center.
std::vector<StarChoice> star_choices(const BipartiteInstance& bip,
                                     std::span<const EdgeId> candidates);

// val(I) = sum over side-B nodes of w_b * min(deg_I(b), r(b)). Monotone and
// submodular in I.
Cost coverage_value(const BipartiteInstance& bip, std::span<const Cost> w,
                    std::span<const int> r, std::span<const EdgeId> chosen);

struct BpbmemOptions {
  // Best of density greedy and best single choice; faster, weaker guarantee.
  bool greedy_only = false;
};

// Partial-enumeration greedy: every feasible seed of at most three star
// choices with distinct centers is extended by density greedy, and the best
// extension wins (first in enumeration order on ties). Achieves a
// (1 - 1/e) fraction of the optimal value; the returned set always satisfies
// p_I(A) <= budget.
std::vector<EdgeId> solve_bpbmem(const BipartiteInstance& bip, std::span<const Cost> w,
                                 std::span<const int> r, std::span<const EdgeId> candidates,
                                 Cost budget, const BpbmemOptions& opts = {});

}  // namespace mpec
