#pragma once

#include <vector>

#include "cok/lin_order.hpp"

namespace cok {

// Maximal convex pieces of the subset, listed from least to greatest;
// each component lists its members from least to greatest.
std::vector<std::vector<element_id>> convex_components(
    const lin_order& order, const std::vector<element_id>& subset);

struct region_report {
  std::vector<std::vector<element_id>> components;
  bool is_convex = false;   // at most one component
  bool is_initial = false;  // downward closed
  bool is_final = false;    // upward closed
  bool is_bounded = false;  // strict bounds on both sides exist
};

// The empty subset counts as convex, initial, final, and bounded.
region_report region_classify(const lin_order& order,
                              const std::vector<element_id>& subset);

}  // namespace cok
