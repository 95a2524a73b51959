#include "cok/equiv_chain.hpp"

#include "cok/errors.hpp"

namespace cok {

equiv_chain equiv_chain::from_levels(std::vector<convex_partition> levels) {
  for (std::size_t i = 0; i + 1 < levels.size(); ++i) {
    if (!levels[i].universe()->same_ids(*levels[i + 1].universe()))
      fail(errc::not_an_equiv_chain, "levels on different carriers");
    if (!levels[i].refines(levels[i + 1]) || levels[i] == levels[i + 1])
      fail(errc::not_an_equiv_chain,
           "level " + std::to_string(i + 1) + " does not strictly coarsen level " +
               std::to_string(i));
  }
  return equiv_chain(std::move(levels));
}

equiv_chain equiv_chain::normalized(std::vector<convex_partition> levels,
                                    const carrier_ref& universe) {
  if (levels.empty() || !levels.front().is_discrete())
    levels.insert(levels.begin(), convex_partition::discrete(universe));
  return from_levels(std::move(levels));
}

}  // namespace cok
