#include "cok/lin_order.hpp"

#include <algorithm>
#include <numeric>

#include "cok/errors.hpp"

namespace cok {

lin_order::lin_order(carrier_ref universe, std::vector<int> ranks)
    : carrier_(std::move(universe)), rank_(std::move(ranks)) {
  at_rank_.assign(rank_.size(), 0);
  for (std::size_t i = 0; i < rank_.size(); ++i) at_rank_[rank_[i]] = static_cast<int>(i);
}

lin_order lin_order::from_ranking(std::vector<element_id> elements,
                                  std::vector<element_id> ranking) {
  carrier_ref universe = carrier::make(std::move(elements));
  if (ranking.size() != universe->size())
    fail(errc::ranking_mismatch, "ranking lists " + std::to_string(ranking.size()) +
                                     " ids for a carrier of " +
                                     std::to_string(universe->size()));
  std::vector<int> ranks(universe->size(), -1);
  for (std::size_t r = 0; r < ranking.size(); ++r) {
    auto idx = universe->find(ranking[r]);
    if (!idx) fail(errc::ranking_mismatch, "'" + ranking[r] + "' not in the carrier");
    if (ranks[*idx] != -1) fail(errc::ranking_mismatch, "'" + ranking[r] + "' ranked twice");
    ranks[*idx] = static_cast<int>(r);
  }
  return lin_order(std::move(universe), std::move(ranks));
}

lin_order lin_order::identity(carrier_ref universe) {
  std::vector<int> ranks(universe->size());
  std::iota(ranks.begin(), ranks.end(), 0);
  return lin_order(std::move(universe), std::move(ranks));
}

lin_order lin_order::from_ranks(carrier_ref universe, std::vector<int> ranks) {
  if (ranks.size() != universe->size())
    fail(errc::ranking_mismatch, "rank array size mismatch");
  std::vector<bool> seen(ranks.size(), false);
  for (int r : ranks) {
    if (r < 0 || r >= static_cast<int>(ranks.size()) || seen[r])
      fail(errc::ranking_mismatch, "rank array is not a permutation");
    seen[r] = true;
  }
  return lin_order(std::move(universe), std::move(ranks));
}

bool lin_order::less(const element_id& a, const element_id& b) const {
  return rank_[carrier_->index_of(a)] < rank_[carrier_->index_of(b)];
}

std::vector<element_id> lin_order::ranking_ids() const {
  std::vector<element_id> ids;
  ids.reserve(at_rank_.size());
  for (int idx : at_rank_) ids.push_back(carrier_->id_of(idx));
  return ids;
}

lin_order lin_order::reversed() const {
  std::vector<int> ranks(rank_.size());
  const int top = static_cast<int>(rank_.size()) - 1;
  for (std::size_t i = 0; i < rank_.size(); ++i) ranks[i] = top - rank_[i];
  return lin_order(carrier_, std::move(ranks));
}

bool lin_order::operator==(const lin_order& other) const {
  return carrier_->same_ids(*other.carrier_) && rank_ == other.rank_;
}

}  // namespace cok
