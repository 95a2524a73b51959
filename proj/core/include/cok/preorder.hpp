#pragma once

#include <vector>

#include "cok/carrier.hpp"
#include "cok/convex_partition.hpp"

namespace cok {

// Total preorder: a linear order with ties, stored as a dense level
// assignment (x precedes-or-ties y iff level(x) <= level(y)).
class total_preorder {
 public:
  static total_preorder from_levels(carrier_ref universe, std::vector<int> levels);

  // Validates reflexivity, totality, and transitivity of an explicit
  // relation matrix (row-major, related[i * n + j] means i precedes-or-ties j).
  static total_preorder from_relation(carrier_ref universe,
                                      const std::vector<bool>& related);

  const carrier_ref& universe() const { return carrier_; }
  int level_of_index(int index) const { return level_[index]; }
  int level_count() const { return level_count_; }

  bool leq_idx(int a, int b) const { return level_[a] <= level_[b]; }
  bool ties_idx(int a, int b) const { return level_[a] == level_[b]; }

  // Symmetrization: blocks of tied elements.
  convex_partition kernel() const;

 private:
  total_preorder(carrier_ref universe, std::vector<int> levels, int level_count);

  carrier_ref carrier_;
  std::vector<int> level_;
  int level_count_;
};

}  // namespace cok
