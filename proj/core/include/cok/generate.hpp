#pragma once

#include <cstdint>
#include <vector>

#include "cok/block_order.hpp"
#include "cok/decompose.hpp"
#include "cok/helly.hpp"
#include "cok/weighted_chain.hpp"

namespace cok {

// Deterministic, platform-independent generator (splitmix64 steps); the
// same seed always yields the same instances, bit for bit.
class rng {
 public:
  explicit rng(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next();
  // Uniform in [0, n), n > 0.
  std::uint64_t below(std::uint64_t n);
  int range(int lo, int hi);  // inclusive bounds
  bool chance(int numerator, int denominator);

 private:
  std::uint64_t state_;
};

carrier_ref random_carrier(rng& gen, int n);
lin_order random_order(rng& gen, int n);
lin_order random_order_on(rng& gen, carrier_ref universe);

// Pairwise comparable, strictly increasing from the region above the
// discrete partition; suitable as apply_chain input.
std::vector<convex_partition> random_comparable_chain(rng& gen,
                                                      const lin_order& base,
                                                      int max_len);

ordered_fn random_fn(rng& gen, int domain_n, int codomain_n);
// Monotone-decomposable by construction (a reversal chain composed with a
// weakly increasing map).
ordered_fn random_decomposable_fn(rng& gen, int domain_n, int codomain_n);

// Members pairwise intersect and split into at most component_bound pieces.
set_family random_intersecting_family(rng& gen, int carrier_n, int family_n,
                                      int component_bound);

block_order random_block_order(rng& gen, int max_blocks, int max_elements,
                               int max_tag);

weighted_chain random_weighted_chain(rng& gen, int carrier_n);

}  // namespace cok
