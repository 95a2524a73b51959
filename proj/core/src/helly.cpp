#include "cok/helly.hpp"

#include <algorithm>
#include <set>

#include "cok/errors.hpp"

namespace cok {

namespace {

// Maximal runs of consecutive ranks, ascending, as closed rank intervals.
std::vector<std::pair<int, int>> rank_components(const lin_order& order,
                                                 const std::vector<int>& set) {
  std::vector<int> ranks;
  ranks.reserve(set.size());
  for (int idx : set) ranks.push_back(order.rank_of_index(idx));
  std::sort(ranks.begin(), ranks.end());
  std::vector<std::pair<int, int>> components;
  for (std::size_t i = 0; i < ranks.size(); ++i) {
    if (components.empty() || ranks[i] != components.back().second + 1)
      components.emplace_back(ranks[i], ranks[i]);
    else
      components.back().second = ranks[i];
  }
  return components;
}

bool intervals_meet(std::pair<int, int> a, std::pair<int, int> b) {
  return a.first <= b.second && b.first <= a.second;
}

bool interval_inside(std::pair<int, int> inner, std::pair<int, int> outer) {
  return outer.first <= inner.first && inner.second <= outer.second;
}

}  // namespace

set_family set_family::make(lin_order order,
                            std::vector<std::vector<element_id>> sets) {
  std::vector<std::vector<int>> indexed;
  indexed.reserve(sets.size());
  for (std::size_t n = 0; n < sets.size(); ++n) {
    if (sets[n].empty())
      fail(errc::parse_error, "family member " + std::to_string(n) + " is empty");
    std::vector<int> indices;
    indices.reserve(sets[n].size());
    for (const auto& id : sets[n]) indices.push_back(order.universe()->index_of(id));
    std::sort(indices.begin(), indices.end());
    if (std::adjacent_find(indices.begin(), indices.end()) != indices.end())
      fail(errc::duplicate_element,
           "family member " + std::to_string(n) + " repeats an element");
    indexed.push_back(std::move(indices));
  }
  int bound = 0;
  for (const auto& set : indexed)
    bound = std::max(bound,
                     static_cast<int>(rank_components(order, set).size()));
  return set_family(std::move(order), std::move(indexed), bound);
}

set_family::set_family(lin_order order, std::vector<std::vector<int>> sets, int bound)
    : order_(std::move(order)), sets_(std::move(sets)), component_bound_(bound) {}

std::vector<element_id> set_family::set_ids(int member) const {
  std::vector<element_id> ids;
  ids.reserve(sets_[member].size());
  for (int idx : sets_[member]) ids.push_back(order_.universe()->id_of(idx));
  return ids;
}

bool set_family::contains(int member, int carrier_index) const {
  const auto& set = sets_[member];
  return std::binary_search(set.begin(), set.end(), carrier_index);
}

helly_core_result convex_helly_core(const set_family& family) {
  if (family.component_bound() > 1)
    fail(errc::non_convex_set, "a family member has more than one convex component");
  if (family.size() == 0) {
    // Intersection over nothing is the whole carrier.
    if (family.order().size() == 0) return {std::nullopt, std::nullopt};
    return {family.order().universe()->id_of(family.order().index_at_rank(0)),
            std::nullopt};
  }
  int left = -1, right = -1, arg_left = -1, arg_right = -1;
  for (std::size_t n = 0; n < family.size(); ++n) {
    auto interval = rank_components(family.order(), family.sets()[n]).front();
    if (arg_left == -1 || interval.first > left) {
      left = interval.first;
      arg_left = static_cast<int>(n);
    }
    if (arg_right == -1 || interval.second < right) {
      right = interval.second;
      arg_right = static_cast<int>(n);
    }
  }
  if (left <= right)
    return {family.order().universe()->id_of(family.order().index_at_rank(left)),
            std::nullopt};
  return {std::nullopt,
          std::make_pair(std::min(arg_left, arg_right), std::max(arg_left, arg_right))};
}

std::optional<std::pair<int, int>> find_non_intersecting_pair(const set_family& family) {
  for (std::size_t n = 0; n < family.size(); ++n)
    for (std::size_t m = n + 1; m < family.size(); ++m) {
      const auto& a = family.sets()[n];
      const auto& b = family.sets()[m];
      std::vector<int> common;
      std::set_intersection(a.begin(), a.end(), b.begin(), b.end(),
                            std::back_inserter(common));
      if (common.empty()) return std::make_pair(static_cast<int>(n), static_cast<int>(m));
    }
  return std::nullopt;
}

namespace {

struct color_context {
  std::vector<std::vector<std::pair<int, int>>> components;  // per member
  std::vector<std::vector<std::pair<int, int>>> color;       // pair (n,m), n<m
};

// The least (i, j), i over components of the earlier member and j over
// components of the later one, whose components meet.
std::pair<int, int> pair_color(const color_context& ctx, int n, int m) {
  for (std::size_t i = 0; i < ctx.components[n].size(); ++i)
    for (std::size_t j = 0; j < ctx.components[m].size(); ++j)
      if (intervals_meet(ctx.components[n][i], ctx.components[m][j]))
        return {static_cast<int>(i), static_cast<int>(j)};
  return {-1, -1};
}

// Largest member subset whose pairs all carry the given color; exhaustive for
// small families (first-found among equal sizes, scanning masks upward),
// greedy left-to-right otherwise.
std::vector<int> monochromatic_subset(const color_context& ctx, int family_size,
                                      std::pair<int, int> wanted, bool exhaustive) {
  auto colored = [&](int n, int m) { return ctx.color[n][m - n - 1] == wanted; };
  std::vector<int> best;
  if (exhaustive) {
    for (unsigned mask = 1; mask < (1u << family_size); ++mask) {
      std::vector<int> chosen;
      for (int v = 0; v < family_size; ++v)
        if (mask & (1u << v)) chosen.push_back(v);
      if (chosen.size() <= best.size()) continue;
      bool ok = true;
      for (std::size_t a = 0; a < chosen.size() && ok; ++a)
        for (std::size_t b = a + 1; b < chosen.size() && ok; ++b)
          ok = colored(chosen[a], chosen[b]);
      if (ok) best = std::move(chosen);
    }
  } else {
    for (int v = 0; v < family_size; ++v) {
      bool ok = true;
      for (int u : best)
        if (!colored(u, v)) {
          ok = false;
          break;
        }
      if (ok) best.push_back(v);
    }
  }
  return best;
}

}  // namespace

std::optional<subfamily_extraction> extract_consistent_subfamily(
    const set_family& family, int target_size) {
  if (auto pair = find_non_intersecting_pair(family))
    fail(errc::two_intersection_violated,
         "members " + std::to_string(pair->first) + " and " +
             std::to_string(pair->second) + " are disjoint");
  target_size = std::max(target_size, 1);
  const int size = static_cast<int>(family.size());
  if (size == 0) return std::nullopt;
  const lin_order& order = family.order();

  color_context ctx;
  ctx.components.reserve(family.size());
  for (const auto& set : family.sets())
    ctx.components.push_back(rank_components(order, set));
  ctx.color.resize(family.size());
  std::set<std::pair<int, int>> palette;
  for (int n = 0; n < size; ++n)
    for (int m = n + 1; m < size; ++m) {
      auto c = pair_color(ctx, n, m);
      ctx.color[n].push_back(c);
      palette.insert(c);
    }

  const bool exhaustive = size <= 16;
  const std::string mode = exhaustive ? "exhaustive" : "greedy";

  auto contains_rank = [&](int member, int rank) {
    return family.contains(member, order.index_at_rank(rank));
  };
  auto verified = [&](const std::vector<int>& indices, int witness_rank) {
    for (int n : indices)
      if (!contains_rank(n, witness_rank)) return false;
    return true;
  };
  auto closed_over = [&](int witness_rank) {
    std::vector<int> all;
    for (int n = 0; n < size; ++n)
      if (contains_rank(n, witness_rank)) all.push_back(n);
    return all;
  };

  std::optional<subfamily_extraction> best;
  for (const auto& color : palette) {
    std::vector<int> mono = monochromatic_subset(ctx, size, color, exhaustive);
    const int i = color.first, j = color.second;
    std::vector<int> indices;
    int witness_rank = -1;
    std::string route;
    if (i == j) {
      if (mono.empty()) continue;
      // Pairwise-meeting convex pieces: the max of the left endpoints lies
      // in all of them.
      int left = -1, right = -1;
      bool sound = true;
      for (int n : mono) {
        auto piece = ctx.components[n][i];
        if (left == -1 || piece.first > left) left = piece.first;
        if (right == -1 || piece.second < right) right = piece.second;
      }
      sound = left <= right;
      if (!sound) continue;
      indices = mono;
      witness_rank = left;
      route = "helly_core";
    } else if (i < j) {
      if (mono.size() < 4) continue;
      // The i-th pieces descend along mono, so every late j-th piece meets
      // pieces on both sides of the second member's i-th piece and must
      // contain it entirely.
      auto part = ctx.components[mono[1]][i];
      bool sound = true;
      for (std::size_t l = 3; l < mono.size() && sound; ++l)
        sound = interval_inside(part, ctx.components[mono[l]][j]);
      if (!sound) continue;
      indices.push_back(mono[1]);
      for (std::size_t l = 3; l < mono.size(); ++l) indices.push_back(mono[l]);
      std::sort(indices.begin(), indices.end());
      witness_rank = part.first;
      route = "containment_low";
    } else {
      if (mono.size() < 4) continue;
      // Mirror case: the j-th pieces ascend, and every early i-th piece
      // contains the second-to-last member's j-th piece.
      const std::size_t b = mono.size();
      auto part = ctx.components[mono[b - 2]][j];
      bool sound = true;
      for (std::size_t l = 0; l + 4 <= b && sound; ++l)
        sound = interval_inside(part, ctx.components[mono[l]][i]);
      if (!sound) continue;
      for (std::size_t l = 0; l + 4 <= b; ++l) indices.push_back(mono[l]);
      indices.push_back(mono[b - 2]);
      std::sort(indices.begin(), indices.end());
      witness_rank = part.first;
      route = "containment_high";
    }
    if (!verified(indices, witness_rank)) continue;
    std::vector<int> closed = closed_over(witness_rank);
    subfamily_extraction candidate{std::move(closed),
                                   order.universe()->id_of(order.index_at_rank(witness_rank)),
                                   std::move(route), mode, color};
    if (!best || candidate.indices.size() > best->indices.size())
      best = std::move(candidate);
    if (best && static_cast<int>(best->indices.size()) >= target_size) return best;
  }

  // Exact fallback: a nonempty finite intersection is witnessed by a single
  // element, so sweeping witnesses finds the true maximum subfamily.
  int best_rank = -1;
  std::size_t best_count = 0;
  for (int r = 0; r < static_cast<int>(order.size()); ++r) {
    std::size_t count = 0;
    for (int n = 0; n < size; ++n)
      if (contains_rank(n, r)) ++count;
    if (count > best_count) {
      best_count = count;
      best_rank = r;
    }
  }
  if (best_rank != -1 && static_cast<int>(best_count) >= target_size) {
    return subfamily_extraction{closed_over(best_rank),
                                order.universe()->id_of(order.index_at_rank(best_rank)),
                                "exhaustive_fallback", mode,
                                {-1, -1}};
  }
  return std::nullopt;
}

}  // namespace cok
