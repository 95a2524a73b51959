#pragma once

#include <vector>

#include "cok/convex_partition.hpp"

namespace cok {

// Strictly increasing (under refinement) sequence of partitions on one
// carrier. May be empty. Decomposition results are normalized so that
// level 0 is the finest relation of the family: the discrete partition for
// plain orders, the kernel for functions and preorders.
class equiv_chain {
 public:
  equiv_chain() = default;

  static equiv_chain from_levels(std::vector<convex_partition> levels);

  // Same validation, with a discrete level prepended when level 0 is not
  // already discrete.
  static equiv_chain normalized(std::vector<convex_partition> levels,
                                const carrier_ref& universe);

  const std::vector<convex_partition>& levels() const { return levels_; }
  std::size_t size() const { return levels_.size(); }
  bool empty() const { return levels_.empty(); }

  bool starts_discrete() const {
    return !levels_.empty() && levels_.front().is_discrete();
  }
  bool ends_one_block() const {
    return !levels_.empty() && levels_.back().is_one_block();
  }

  bool operator==(const equiv_chain& other) const {
    return levels_ == other.levels_;
  }

 private:
  explicit equiv_chain(std::vector<convex_partition> levels)
      : levels_(std::move(levels)) {}

  std::vector<convex_partition> levels_;
};

}  // namespace cok
