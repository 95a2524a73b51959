#pragma once

#include <span>
#include <vector>

#include "cok/convex_partition.hpp"
#include "cok/equiv_chain.hpp"
#include "cok/lin_order.hpp"

namespace cok {

// The reversed-within order <' of an order < and a convex equivalence E:
//   x <' y  iff  (E(x,y) and y < x)  or  (not E(x,y) and x < y).
// Implemented by flipping each block's rank interval in place.
lin_order reverse_within(const lin_order& order, const convex_partition& equiv);

// Folds reverse_within over the chain, left to right. Members must be
// pairwise comparable under refinement; comparability keeps every member
// convex with respect to the order current at its step, which is still
// checked at each application.
lin_order apply_chain(const lin_order& order,
                      std::span<const convex_partition> chain);
lin_order apply_chain(const lin_order& order, const equiv_chain& chain);

// Order induced on blocks, with each block represented by its least element.
lin_order quotient(const lin_order& order, const convex_partition& equiv);

}  // namespace cok
