#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "cok/lin_order.hpp"

namespace cok {

// Finite family of nonempty subsets of one ordered carrier, with the
// maximal number of convex components any member splits into.
class set_family {
 public:
  static set_family make(lin_order order,
                         std::vector<std::vector<element_id>> sets);

  const lin_order& order() const { return order_; }
  std::size_t size() const { return sets_.size(); }
  const std::vector<std::vector<int>>& sets() const { return sets_; }
  std::vector<element_id> set_ids(int member) const;
  int component_bound() const { return component_bound_; }

  bool contains(int member, int carrier_index) const;

 private:
  set_family(lin_order order, std::vector<std::vector<int>> sets, int bound);

  lin_order order_;
  std::vector<std::vector<int>> sets_;  // ascending carrier indices
  int component_bound_;
};

struct helly_core_result {
  // Least common element (the max of the left endpoints) when all members
  // pairwise intersect; otherwise a disjoint pair of member indices.
  std::optional<element_id> witness;
  std::optional<std::pair<int, int>> violating_pair;
};

// One-dimensional Helly for convex members; throws non_convex_set.
helly_core_result convex_helly_core(const set_family& family);

// First pair of members with empty intersection, if any.
std::optional<std::pair<int, int>> find_non_intersecting_pair(const set_family& family);

struct subfamily_extraction {
  std::vector<int> indices;  // ascending member indices
  element_id witness;        // common to every chosen member
  // How the subfamily was found: pairs are colored by the least component
  // pair that meets; a monochromatic color (i,i) yields a Helly core on the
  // i-th components, a mixed color yields containment of a middle component;
  // "exhaustive_fallback" reports a direct search.
  std::string route;
  std::string search_mode;  // "exhaustive" or "greedy" monochromatic search
  std::pair<int, int> color{-1, -1};
};

// Subfamily of at least target_size members with a common element. Members
// must pairwise intersect (two_intersection_violated otherwise). nullopt
// when no qualifying subfamily exists.
std::optional<subfamily_extraction> extract_consistent_subfamily(
    const set_family& family, int target_size);

}  // namespace cok
