#include "cok/convex_partition.hpp"

#include <algorithm>
#include <numeric>

#include "cok/errors.hpp"
#include "cok/lin_order.hpp"

namespace cok {

convex_partition::convex_partition(carrier_ref universe, std::vector<int> block_of,
                                   std::vector<std::vector<int>> blocks)
    : carrier_(std::move(universe)),
      block_of_(std::move(block_of)),
      blocks_(std::move(blocks)) {}

convex_partition convex_partition::from_block_ids(carrier_ref universe,
                                                  std::vector<int> block_of) {
  const int n = static_cast<int>(universe->size());
  if (static_cast<int>(block_of.size()) != n)
    fail(errc::not_a_partition, "block assignment size mismatch");
  // Canonical numbering: blocks appear in order of their least carrier index.
  std::vector<int> renumber(block_of.size(), -1);
  std::vector<std::vector<int>> blocks;
  std::vector<int> canonical(block_of.size());
  for (int i = 0; i < n; ++i) {
    int raw = block_of[i];
    if (raw < 0 || raw >= n) fail(errc::not_a_partition, "block id out of range");
    if (renumber[raw] == -1) {
      renumber[raw] = static_cast<int>(blocks.size());
      blocks.emplace_back();
    }
    canonical[i] = renumber[raw];
    blocks[canonical[i]].push_back(i);
  }
  return convex_partition(std::move(universe), std::move(canonical), std::move(blocks));
}

convex_partition convex_partition::from_blocks(
    carrier_ref universe, const std::vector<std::vector<element_id>>& blocks) {
  const int n = static_cast<int>(universe->size());
  std::vector<int> block_of(n, -1);
  int block_id = 0;
  for (const auto& block : blocks) {
    if (block.empty()) fail(errc::not_a_partition, "empty block");
    for (const auto& id : block) {
      int idx = universe->index_of(id);
      if (block_of[idx] != -1)
        fail(errc::not_a_partition, "'" + id + "' appears in two blocks");
      block_of[idx] = block_id;
    }
    ++block_id;
  }
  for (int i = 0; i < n; ++i)
    if (block_of[i] == -1)
      fail(errc::not_a_partition, "'" + universe->id_of(i) + "' not covered");
  return from_block_ids(std::move(universe), std::move(block_of));
}

convex_partition convex_partition::discrete(carrier_ref universe) {
  std::vector<int> block_of(universe->size());
  std::iota(block_of.begin(), block_of.end(), 0);
  return from_block_ids(std::move(universe), std::move(block_of));
}

convex_partition convex_partition::one_block(carrier_ref universe) {
  std::vector<int> block_of(universe->size(), 0);
  if (universe->size() == 0) return convex_partition(std::move(universe), {}, {});
  return from_block_ids(std::move(universe), std::move(block_of));
}

bool convex_partition::related(const element_id& a, const element_id& b) const {
  return same_block_idx(carrier_->index_of(a), carrier_->index_of(b));
}

bool convex_partition::refines(const convex_partition& coarser) const {
  if (!carrier_->same_ids(*coarser.carrier_))
    fail(errc::carrier_mismatch, "partitions on different carriers");
  for (const auto& block : blocks_) {
    const int target = coarser.block_of_[block.front()];
    for (int idx : block)
      if (coarser.block_of_[idx] != target) return false;
  }
  return true;
}

std::vector<std::vector<element_id>> convex_partition::block_ids() const {
  std::vector<std::vector<element_id>> out;
  out.reserve(blocks_.size());
  for (const auto& block : blocks_) {
    std::vector<element_id> ids;
    ids.reserve(block.size());
    for (int idx : block) ids.push_back(carrier_->id_of(idx));
    out.push_back(std::move(ids));
  }
  return out;
}

bool convex_partition::operator==(const convex_partition& other) const {
  return carrier_->same_ids(*other.carrier_) && block_of_ == other.block_of_;
}

bool comparable(const convex_partition& a, const convex_partition& b) {
  return a.refines(b) || b.refines(a);
}

bool is_convex_equiv(const lin_order& order, const convex_partition& partition) {
  if (!order.universe()->same_ids(*partition.universe()))
    fail(errc::not_a_partition, "partition is not over the order's carrier");
  for (const auto& block : partition.blocks()) {
    int lo = static_cast<int>(order.size());
    int hi = -1;
    for (int idx : block) {
      lo = std::min(lo, order.rank_of_index(idx));
      hi = std::max(hi, order.rank_of_index(idx));
    }
    if (hi - lo + 1 != static_cast<int>(block.size())) return false;
  }
  return true;
}

}  // namespace cok
