#include "cok/convexity.hpp"

#include <vector>

namespace cok {

namespace {

std::vector<bool> member_mask(const lin_order& order,
                              const std::vector<element_id>& subset) {
  std::vector<bool> mask(order.size(), false);
  for (const auto& id : subset) mask[order.universe()->index_of(id)] = true;
  return mask;
}

}  // namespace

std::vector<std::vector<element_id>> convex_components(
    const lin_order& order, const std::vector<element_id>& subset) {
  const auto mask = member_mask(order, subset);
  std::vector<std::vector<element_id>> components;
  for (int r = 0; r < static_cast<int>(order.size()); ++r) {
    int idx = order.index_at_rank(r);
    if (!mask[idx]) continue;
    if (components.empty() || !mask[order.index_at_rank(r - 1)])
      components.emplace_back();
    components.back().push_back(order.universe()->id_of(idx));
  }
  return components;
}

region_report region_classify(const lin_order& order,
                              const std::vector<element_id>& subset) {
  region_report report;
  report.components = convex_components(order, subset);
  const auto mask = member_mask(order, subset);
  const int n = static_cast<int>(order.size());
  int lo = n, hi = -1, count = 0;
  for (int r = 0; r < n; ++r) {
    if (!mask[order.index_at_rank(r)]) continue;
    lo = std::min(lo, r);
    hi = std::max(hi, r);
    ++count;
  }
  if (count == 0) {
    report.is_convex = report.is_initial = report.is_final = report.is_bounded = true;
    return report;
  }
  report.is_convex = report.components.size() == 1;
  report.is_initial = report.is_convex && lo == 0;
  report.is_final = report.is_convex && hi == n - 1;
  report.is_bounded = lo > 0 && hi < n - 1;
  return report;
}

}  // namespace cok
