#pragma once

#include <functional>
#include <optional>
#include <vector>

#include "cok/equiv_chain.hpp"
#include "cok/lin_order.hpp"
#include "cok/ordered_fn.hpp"
#include "cok/preorder.hpp"

namespace cok {

enum class orientation { same, opposite };

struct decomposition_result {
  equiv_chain chain;  // level 0 discrete, strictly increasing
  orientation direction = orientation::same;
};

// Unique chain of nested convex reversals carrying base to target, or
// nullopt when target is not reachable that way (the smallest obstruction
// is the 2413 inversion pattern). The candidate is built top-down: the
// coarsest level is recovered from the alternation structure of the two
// orders, stripped off by reversing within it, and the result is verified
// by replaying the chain. Orientation is opposite exactly when the chain
// ends with the one-block relation.
std::optional<decomposition_result> decompose_order(const lin_order& base,
                                                    const lin_order& target);

struct preorder_decomposition {
  convex_partition kernel;
  equiv_chain chain;  // level 0 is the kernel
};

// Chain such that x precedes-or-ties y iff kernel(x,y) or x < y after
// applying the chain. Requires the kernel to be convex; fails like
// decompose_order when the induced order on kernel classes is unreachable.
std::optional<preorder_decomposition> decompose_preorder(
    const lin_order& base, const total_preorder& pre);

struct monotone_decomposition {
  equiv_chain domain_chain;  // level 0 is the kernel of f
  orientation direction = orientation::same;
  // Pushforwards of the nontrivial levels, extended to the full codomain:
  // interior non-image points join the image block on their left, points
  // outside the image span become singletons.
  std::vector<convex_partition> codomain_chain;
};

// f becomes weakly increasing after reversing the domain within the chain,
// equivalently after reversing the codomain within the pushforward chain.
std::optional<monotone_decomposition> monotone_decompose(const ordered_fn& f);

// Domain-side half of monotone_decompose.
std::optional<decomposition_result> monotone_decompose_domain(const ordered_fn& f);

// Nontrivial equivalence whose classes f is constant or strictly monotone
// on: the kernel when it has ties, otherwise the first nontrivial chain
// level (the one-block relation when f is strictly monotone).
std::optional<convex_partition> local_monotonicity(const ordered_fn& f);

enum class monotone_direction { increasing, decreasing };

struct upper_monotonicity_result {
  convex_partition equiv;
  monotone_direction direction = monotone_direction::increasing;
};

// Coarsest chain level below the one-block relation; f is strictly
// monotone across its classes, increasing when the chain stops short of
// one block and decreasing when it does not.
std::optional<upper_monotonicity_result> upper_monotonicity(const ordered_fn& f);

struct piecewise_result {
  convex_partition pieces;
  // Per-piece chains, front-padded with discrete levels to equal length and
  // united blockwise; empty for constant f. Every block sits inside one piece.
  equiv_chain chain;
};

// Greedy left-to-right split into maximal convex pieces on which f is
// monotone-decomposable. Always succeeds; singleton pieces are the worst case.
piecewise_result piecewise_decompose(const ordered_fn& f);

// Minimal number of convex pieces, by exhaustive interval DP. nullopt when
// the domain exceeds max_n.
std::optional<int> min_piece_count(const ordered_fn& f, int max_n = 6);

// Every strictly increasing chain of convex partitions starting at the
// discrete one, in depth-first order. Throws oracle_bound_exceeded when the
// carrier is larger than bound.
void enumerate_chains(const lin_order& base, int bound,
                      const std::function<void(const equiv_chain&)>& yield);
std::vector<equiv_chain> enumerate_chains(const lin_order& base, int bound = 8);

}  // namespace cok
