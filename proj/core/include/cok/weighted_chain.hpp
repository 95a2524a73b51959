#pragma once

#include <vector>

#include "cok/equiv_chain.hpp"
#include "cok/rational.hpp"

namespace cok {

// Chain of equivalences with strictly increasing weights in [0, 1]:
// weight 0 for the discrete level, weight 1 for the one-block relation.
// When the chain itself stops short of one block, the final weight entry
// stands for the implicit one-block relation on top.
class weighted_chain {
 public:
  static weighted_chain make(equiv_chain chain, std::vector<rational> weights);

  const equiv_chain& chain() const { return chain_; }
  const std::vector<rational>& weights() const { return weights_; }
  const carrier_ref& universe() const;

  // Least weight among levels relating x and y; distance to self is 0 and
  // unrelated pairs get the one-block weight 1. This is an ultrametric.
  rational distance(const element_id& x, const element_id& y) const;

 private:
  weighted_chain(equiv_chain chain, std::vector<rational> weights);

  equiv_chain chain_;
  std::vector<rational> weights_;
};

}  // namespace cok
