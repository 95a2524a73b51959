#pragma once

#include <vector>

#include "cok/carrier.hpp"

namespace cok {

class lin_order;

// Partition of a carrier, doubling as an equivalence relation. Blocks are
// numbered canonically by their smallest carrier index, so structural
// equality coincides with equality as relations. Convexity is a property
// relative to a linear order and is checked where required, not stored.
class convex_partition {
 public:
  static convex_partition from_blocks(carrier_ref universe,
                                      const std::vector<std::vector<element_id>>& blocks);
  static convex_partition from_block_ids(carrier_ref universe,
                                         std::vector<int> block_of);
  static convex_partition discrete(carrier_ref universe);
  static convex_partition one_block(carrier_ref universe);

  const carrier_ref& universe() const { return carrier_; }
  std::size_t block_count() const { return blocks_.size(); }
  const std::vector<std::vector<int>>& blocks() const { return blocks_; }
  int block_of_index(int index) const { return block_of_[index]; }

  bool same_block_idx(int a, int b) const { return block_of_[a] == block_of_[b]; }
  bool related(const element_id& a, const element_id& b) const;

  bool is_discrete() const { return blocks_.size() == carrier_->size(); }
  bool is_one_block() const { return blocks_.size() <= 1; }

  // Every block of this partition lies inside a block of coarser.
  bool refines(const convex_partition& coarser) const;

  // Block member ids, blocks in canonical sequence.
  std::vector<std::vector<element_id>> block_ids() const;

  bool operator==(const convex_partition& other) const;

 private:
  convex_partition(carrier_ref universe, std::vector<int> block_of,
                   std::vector<std::vector<int>> blocks);

  carrier_ref carrier_;
  std::vector<int> block_of_;             // carrier index -> block
  std::vector<std::vector<int>> blocks_;  // block -> ascending carrier indices
};

bool comparable(const convex_partition& a, const convex_partition& b);

// True when every block occupies a contiguous rank interval of the order.
bool is_convex_equiv(const lin_order& order, const convex_partition& partition);

}  // namespace cok
