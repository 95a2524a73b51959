#include "cok/block_reversal.hpp"

#include <algorithm>

#include "cok/errors.hpp"

namespace cok {

lin_order reverse_within(const lin_order& order, const convex_partition& equiv) {
  if (!order.universe()->same_ids(*equiv.universe()))
    fail(errc::carrier_mismatch, "partition is not over the order's carrier");
  if (!is_convex_equiv(order, equiv))
    fail(errc::non_convex_partition, "a block is not a rank interval");
  // Block at rank interval [lo, hi]: rank r becomes lo + hi - r.
  std::vector<int> ranks(order.size());
  for (const auto& block : equiv.blocks()) {
    int lo = static_cast<int>(order.size());
    int hi = -1;
    for (int idx : block) {
      lo = std::min(lo, order.rank_of_index(idx));
      hi = std::max(hi, order.rank_of_index(idx));
    }
    for (int idx : block) ranks[idx] = lo + hi - order.rank_of_index(idx);
  }
  return lin_order::from_ranks(order.universe(), std::move(ranks));
}

lin_order apply_chain(const lin_order& order,
                      std::span<const convex_partition> chain) {
  for (std::size_t i = 0; i < chain.size(); ++i)
    for (std::size_t j = i + 1; j < chain.size(); ++j)
      if (!comparable(chain[i], chain[j]))
        fail(errc::incomparable_partitions,
             "members " + std::to_string(i) + " and " + std::to_string(j) +
                 " are not nested");
  lin_order current = order;
  for (const auto& level : chain) current = reverse_within(current, level);
  return current;
}

lin_order apply_chain(const lin_order& order, const equiv_chain& chain) {
  return apply_chain(order, std::span<const convex_partition>(chain.levels()));
}

lin_order quotient(const lin_order& order, const convex_partition& equiv) {
  if (!order.universe()->same_ids(*equiv.universe()))
    fail(errc::carrier_mismatch, "partition is not over the order's carrier");
  if (!is_convex_equiv(order, equiv))
    fail(errc::non_convex_partition, "a block is not a rank interval");
  // Representative: least carrier id of each block, a name that reversing
  // inside the block cannot change; blocks ordered by their rank interval.
  std::vector<std::pair<int, element_id>> reps;
  reps.reserve(equiv.block_count());
  for (const auto& block : equiv.blocks()) {
    int lo_rank = static_cast<int>(order.size());
    for (int idx : block) lo_rank = std::min(lo_rank, order.rank_of_index(idx));
    reps.emplace_back(lo_rank, order.universe()->id_of(block.front()));
  }
  std::sort(reps.begin(), reps.end());
  std::vector<element_id> elements;
  std::vector<element_id> ranking;
  elements.reserve(reps.size());
  ranking.reserve(reps.size());
  for (const auto& [rank, id] : reps) {
    elements.push_back(id);
    ranking.push_back(id);
  }
  return lin_order::from_ranking(std::move(elements), std::move(ranking));
}

}  // namespace cok
