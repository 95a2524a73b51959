#include "cok/preorder.hpp"

#include <algorithm>

#include "cok/errors.hpp"

namespace cok {

total_preorder::total_preorder(carrier_ref universe, std::vector<int> levels,
                               int level_count)
    : carrier_(std::move(universe)), level_(std::move(levels)), level_count_(level_count) {}

total_preorder total_preorder::from_levels(carrier_ref universe,
                                           std::vector<int> levels) {
  if (levels.size() != universe->size())
    fail(errc::not_total_preorder, "level assignment size mismatch");
  // Compress to dense levels 0..k-1 preserving order.
  std::vector<int> sorted(levels);
  std::sort(sorted.begin(), sorted.end());
  sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
  for (auto& level : levels) {
    level = static_cast<int>(std::lower_bound(sorted.begin(), sorted.end(), level) -
                             sorted.begin());
  }
  return total_preorder(std::move(universe), std::move(levels),
                        static_cast<int>(sorted.size()));
}

total_preorder total_preorder::from_relation(carrier_ref universe,
                                             const std::vector<bool>& related) {
  const int n = static_cast<int>(universe->size());
  if (static_cast<int>(related.size()) != n * n)
    fail(errc::not_total_preorder, "relation matrix size mismatch");
  auto at = [&](int i, int j) { return related[i * n + j]; };
  for (int i = 0; i < n; ++i)
    if (!at(i, i))
      fail(errc::not_total_preorder, "not reflexive at '" + universe->id_of(i) + "'");
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (!at(i, j) && !at(j, i))
        fail(errc::not_total_preorder, "'" + universe->id_of(i) + "' and '" +
                                           universe->id_of(j) + "' are incomparable");
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k)
        if (at(i, j) && at(j, k) && !at(i, k))
          fail(errc::not_total_preorder,
               "not transitive via '" + universe->id_of(j) + "'");
  // Level of x = number of elements strictly below it.
  std::vector<int> levels(n, 0);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (at(j, i) && !at(i, j)) ++levels[i];
  return from_levels(std::move(universe), std::move(levels));
}

convex_partition total_preorder::kernel() const {
  return convex_partition::from_block_ids(carrier_, level_);
}

}  // namespace cok
