#pragma once

#include <vector>

#include "cok/carrier.hpp"

namespace cok {

// Finite linear order on a carrier, represented as a rank bijection.
// Comparisons are O(1) through the rank array.
class lin_order {
 public:
  // elements: the carrier (any order, no duplicates);
  // ranking: the same ids listed from least to greatest.
  static lin_order from_ranking(std::vector<element_id> elements,
                                std::vector<element_id> ranking);

  // Carrier ids in their canonical (sorted) sequence taken as the order.
  static lin_order identity(carrier_ref universe);

  // rank_by_index[i] is the rank of carrier index i. Internal constructor;
  // ranks must be a permutation of 0..n-1.
  static lin_order from_ranks(carrier_ref universe, std::vector<int> ranks);

  const carrier_ref& universe() const { return carrier_; }
  std::size_t size() const { return carrier_->size(); }

  int rank_of_index(int index) const { return rank_[index]; }
  int index_at_rank(int rank) const { return at_rank_[rank]; }
  const std::vector<int>& ranks() const { return rank_; }

  bool less_idx(int a, int b) const { return rank_[a] < rank_[b]; }
  bool less(const element_id& a, const element_id& b) const;

  // Ids from least to greatest.
  std::vector<element_id> ranking_ids() const;

  lin_order reversed() const;

  bool operator==(const lin_order& other) const;

 private:
  lin_order(carrier_ref universe, std::vector<int> ranks);

  carrier_ref carrier_;
  std::vector<int> rank_;     // carrier index -> rank
  std::vector<int> at_rank_;  // rank -> carrier index
};

}  // namespace cok
