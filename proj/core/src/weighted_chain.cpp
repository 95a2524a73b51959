#include "cok/weighted_chain.hpp"

#include "cok/errors.hpp"

namespace cok {

weighted_chain::weighted_chain(equiv_chain chain, std::vector<rational> weights)
    : chain_(std::move(chain)), weights_(std::move(weights)) {}

weighted_chain weighted_chain::make(equiv_chain chain, std::vector<rational> weights) {
  if (chain.empty())
    fail(errc::invalid_weights, "the chain must include its discrete level");
  if (!chain.starts_discrete())
    fail(errc::invalid_weights, "level 0 must be the discrete partition");

  const bool closed = chain.ends_one_block();
  const std::size_t expected = chain.size() + (closed ? 0 : 1);
  if (weights.size() != expected)
    fail(errc::invalid_weights,
         "expected " + std::to_string(expected) + " weights, got " +
             std::to_string(weights.size()));
  for (std::size_t i = 0; i < weights.size(); ++i) {
    if (weights[i] < rational(0) || weights[i] > rational(1))
      fail(errc::invalid_weights, "weights must lie in [0, 1]");
    if (i > 0 && !(weights[i - 1] < weights[i]))
      fail(errc::invalid_weights, "weights must strictly increase");
  }
  if (weights.front() != rational(0))
    fail(errc::invalid_weights, "the discrete level must weigh 0");
  // When the discrete level is already one block (a carrier of at most one
  // element), the single weight 0 covers both roles.
  if (weights.size() > 1 && weights.back() != rational(1))
    fail(errc::invalid_weights, "the one-block relation must weigh 1");
  return weighted_chain(std::move(chain), std::move(weights));
}

const carrier_ref& weighted_chain::universe() const {
  return chain_.levels().front().universe();
}

rational weighted_chain::distance(const element_id& x, const element_id& y) const {
  const int ix = universe()->index_of(x);
  const int iy = universe()->index_of(y);
  if (ix == iy) return rational(0);
  for (std::size_t k = 0; k < chain_.size(); ++k)
    if (chain_.levels()[k].same_block_idx(ix, iy)) return weights_[k];
  return weights_.back();  // related only by the implicit one-block relation
}

}  // namespace cok
