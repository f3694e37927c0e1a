#pragma once

#include "mpec/instance.hpp"

namespace mpec {

// (k + 1/2)-approximation for the multi-cover problem. Stage one covers
// every node with a positive requirement once via the restricted power
// cover (floors set to the threshold costs); stage two tops each node up
// to its requirement with its cheapest unused edges.
Solution solve_khalf(const Instance& inst);

}  // namespace mpec
