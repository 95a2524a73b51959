#include "cok/decompose.hpp"

#include <algorithm>
#include <numeric>

#include "cok/block_reversal.hpp"
#include "cok/errors.hpp"

namespace cok {

namespace {

// Candidate for the coarsest nontrivial level relating base to target,
// assuming both run in the same direction. Any pair that the two orders
// rank differently has to share a block, and the block must be convex in
// the base, so each element a drags along everything up to its furthest
// inversion partner: the strict upper set of a minus its trailing run of
// successors-in-target. The candidate is the finest interval partition of
// the base containing every such forced span; across its blocks the two
// orders agree by construction.
convex_partition top_level_equiv(const lin_order& base, const lin_order& target) {
  const int n = static_cast<int>(base.size());
  std::vector<int> limit(n);
  for (int r = 0; r < n; ++r) {
    const int a = base.index_at_rank(r);
    // Trailing run of the strict upper set on which a precedes x in target.
    int tail = n;
    while (tail - 1 > r && target.less_idx(a, base.index_at_rank(tail - 1))) --tail;
    limit[r] = tail - 1;
  }

  std::vector<int> block_of(n);
  int block = -1;
  int block_end = -1;
  for (int r = 0; r < n; ++r) {
    if (r > block_end) {
      ++block;
      block_end = r;
    }
    block_of[base.index_at_rank(r)] = block;
    block_end = std::max(block_end, limit[r]);
  }
  return convex_partition::from_block_ids(base.universe(), std::move(block_of));
}

// Levels above the discrete one, finest first. coarse_bound, when present,
// strictly bounds every produced level from above, which also bounds the
// recursion depth.
std::optional<std::vector<convex_partition>> suffix_levels(
    const lin_order& base, const lin_order& target,
    const std::optional<convex_partition>& coarse_bound) {
  if (base == target) return std::vector<convex_partition>{};

  const int n = static_cast<int>(base.size());
  const int min_idx = base.index_at_rank(0);
  const int max_idx = base.index_at_rank(n - 1);
  // The extremes of base are related only by the one-block relation, so they
  // flip exactly when the chain tops out at one block.
  const bool same_direction = target.less_idx(min_idx, max_idx);

  if (!same_direction) {
    if (coarse_bound) return std::nullopt;
    auto one = convex_partition::one_block(base.universe());
    auto sub = suffix_levels(base, reverse_within(target, one), one);
    if (!sub) return std::nullopt;
    sub->push_back(std::move(one));
    return sub;
  }

  convex_partition level = top_level_equiv(base, target);
  if (level.is_discrete() || level.is_one_block()) return std::nullopt;
  if (!is_convex_equiv(target, level)) return std::nullopt;
  if (coarse_bound &&
      (!level.refines(*coarse_bound) || level == *coarse_bound))
    return std::nullopt;

  auto sub = suffix_levels(base, reverse_within(target, level), level);
  if (!sub) return std::nullopt;
  sub->push_back(std::move(level));
  return sub;
}

orientation direction_of(const equiv_chain& chain) {
  return chain.ends_one_block() ? orientation::opposite : orientation::same;
}

}  // namespace

std::optional<decomposition_result> decompose_order(const lin_order& base,
                                                    const lin_order& target) {
  if (!base.universe()->same_ids(*target.universe()))
    fail(errc::carrier_mismatch, "base and target have different carriers");

  auto levels = suffix_levels(base, target, std::nullopt);
  if (!levels) return std::nullopt;
  auto chain = equiv_chain::normalized(std::move(*levels), base.universe());
  if (!(apply_chain(base, chain) == target)) return std::nullopt;
  const orientation direction = direction_of(chain);
  return decomposition_result{std::move(chain), direction};
}

std::optional<preorder_decomposition> decompose_preorder(const lin_order& base,
                                                         const total_preorder& pre) {
  if (!base.universe()->same_ids(*pre.universe()))
    fail(errc::carrier_mismatch, "preorder is not over the order's carrier");
  convex_partition kernel = pre.kernel();
  if (!is_convex_equiv(base, kernel))
    fail(errc::non_convex_kernel, "tie classes are not convex in the base order");

  lin_order q_base = quotient(base, kernel);
  const auto& q_universe = q_base.universe();
  // Classes inherit the preorder's levels through their representatives.
  std::vector<int> q_ranks(q_universe->size());
  for (std::size_t i = 0; i < q_universe->size(); ++i)
    q_ranks[i] = pre.level_of_index(base.universe()->index_of(q_universe->id_of(static_cast<int>(i))));
  lin_order q_target = lin_order::from_ranks(q_universe, std::move(q_ranks));

  auto q_result = decompose_order(q_base, q_target);
  if (!q_result) return std::nullopt;

  // Lift each quotient level by replacing a representative with its class;
  // the discrete quotient level lifts to the kernel itself.
  std::vector<int> class_of(base.size());
  for (std::size_t b = 0; b < kernel.block_count(); ++b)
    for (int idx : kernel.blocks()[b]) class_of[idx] = static_cast<int>(b);
  std::vector<int> q_index_of_class(kernel.block_count());
  for (std::size_t b = 0; b < kernel.block_count(); ++b) {
    int rep = kernel.blocks()[b].front();  // least carrier id names the class
    q_index_of_class[b] = q_universe->index_of(base.universe()->id_of(rep));
  }

  std::vector<convex_partition> lifted;
  lifted.reserve(q_result->chain.size());
  for (const auto& q_level : q_result->chain.levels()) {
    std::vector<int> block_of(base.size());
    for (std::size_t i = 0; i < base.size(); ++i)
      block_of[i] = q_level.block_of_index(q_index_of_class[class_of[i]]);
    lifted.push_back(convex_partition::from_block_ids(base.universe(), std::move(block_of)));
  }
  equiv_chain chain = equiv_chain::from_levels(std::move(lifted));

  lin_order replay = apply_chain(base, chain);
  for (int i = 0; i < static_cast<int>(base.size()); ++i)
    for (int j = 0; j < static_cast<int>(base.size()); ++j) {
      bool lhs = pre.leq_idx(i, j);
      bool rhs = kernel.same_block_idx(i, j) || replay.less_idx(i, j);
      if (lhs != rhs) return std::nullopt;
    }
  return preorder_decomposition{std::move(kernel), std::move(chain)};
}

std::optional<decomposition_result> monotone_decompose_domain(const ordered_fn& f) {
  if (f.is_constant()) fail(errc::constant_function, "function has a single value");
  auto pre = f.pullback_preorder();
  auto result = decompose_preorder(f.domain(), pre);
  if (!result) return std::nullopt;
  return decomposition_result{result->chain, direction_of(result->chain)};
}

namespace {

// Image blocks of a domain level, extended over the whole codomain:
// non-image points inside the image span join the block of the nearest
// image point below them; points outside the span become singletons.
convex_partition pushforward_extended(const ordered_fn& f,
                                      const convex_partition& level) {
  const lin_order& cod = f.codomain();
  const int n_cod = static_cast<int>(cod.size());
  std::vector<int> image_block(n_cod, -1);  // codomain index -> domain block
  for (std::size_t i = 0; i < f.domain().size(); ++i)
    image_block[f.image_index(static_cast<int>(i))] =
        level.block_of_index(static_cast<int>(i));

  int min_rank = n_cod, max_rank = -1;
  for (int d = 0; d < n_cod; ++d)
    if (image_block[d] != -1) {
      min_rank = std::min(min_rank, cod.rank_of_index(d));
      max_rank = std::max(max_rank, cod.rank_of_index(d));
    }

  std::vector<int> block_of(n_cod, -1);
  std::vector<int> dense_of_domain_block(level.block_count(), -1);
  int next_block = 0;
  int current = -1;  // dense block id of the nearest image point below
  for (int r = 0; r < n_cod; ++r) {
    const int d = cod.index_at_rank(r);
    if (image_block[d] != -1) {
      int& dense = dense_of_domain_block[image_block[d]];
      if (dense == -1) dense = next_block++;
      current = dense;
      block_of[d] = dense;
    } else if (r < min_rank || r > max_rank) {
      block_of[d] = next_block++;
    } else {
      block_of[d] = current;
    }
  }
  return convex_partition::from_block_ids(cod.universe(), std::move(block_of));
}

}  // namespace

std::optional<monotone_decomposition> monotone_decompose(const ordered_fn& f) {
  auto domain_side = monotone_decompose_domain(f);
  if (!domain_side) return std::nullopt;

  std::vector<convex_partition> codomain_chain;
  const auto& levels = domain_side->chain.levels();
  for (std::size_t k = 1; k < levels.size(); ++k)
    codomain_chain.push_back(pushforward_extended(f, levels[k]));

  for (std::size_t k = 0; k < codomain_chain.size(); ++k) {
    if (!is_convex_equiv(f.codomain(), codomain_chain[k])) return std::nullopt;
    if (k + 1 < codomain_chain.size() &&
        (!codomain_chain[k].refines(codomain_chain[k + 1]) ||
         codomain_chain[k] == codomain_chain[k + 1]))
      return std::nullopt;
  }

  // After reversing the codomain within the pushforward chain, f must be
  // weakly increasing along the domain.
  lin_order cod_applied =
      apply_chain(f.codomain(), std::span<const convex_partition>(codomain_chain));
  for (int r = 0; r + 1 < static_cast<int>(f.domain().size()); ++r) {
    int x = f.image_index(f.domain().index_at_rank(r));
    int y = f.image_index(f.domain().index_at_rank(r + 1));
    if (x != y && !cod_applied.less_idx(x, y)) return std::nullopt;
  }

  return monotone_decomposition{std::move(domain_side->chain),
                                domain_side->direction,
                                std::move(codomain_chain)};
}

std::optional<convex_partition> local_monotonicity(const ordered_fn& f) {
  if (f.is_constant()) fail(errc::constant_function, "function has a single value");
  convex_partition kernel = f.kernel();
  if (!kernel.is_discrete()) {
    if (!is_convex_equiv(f.domain(), kernel)) return std::nullopt;
    return kernel;
  }
  auto domain_side = monotone_decompose_domain(f);
  if (!domain_side) return std::nullopt;
  const auto& levels = domain_side->chain.levels();
  if (levels.size() == 1) return convex_partition::one_block(f.domain().universe());
  return levels[1];
}

std::optional<upper_monotonicity_result> upper_monotonicity(const ordered_fn& f) {
  if (f.is_constant()) fail(errc::constant_function, "function has a single value");
  std::optional<decomposition_result> domain_side;
  try {
    domain_side = monotone_decompose_domain(f);
  } catch (const error& e) {
    if (e.code() == errc::non_convex_kernel) return std::nullopt;
    throw;
  }
  if (!domain_side) return std::nullopt;
  const auto& levels = domain_side->chain.levels();
  if (!levels.back().is_one_block())
    return upper_monotonicity_result{levels.back(), monotone_direction::increasing};
  return upper_monotonicity_result{levels[levels.size() - 2],
                                   monotone_direction::decreasing};
}

namespace {

struct piece_decomposition {
  std::vector<convex_partition> levels;  // kernel-led chain on the piece carrier
  std::vector<int> members;              // full-carrier indices, ascending base rank
};

// Restriction of f to the base-rank interval [lo, hi], decomposed; nullopt
// when the restricted kernel is non-convex or the class order is unreachable.
std::optional<piece_decomposition> decompose_piece(const ordered_fn& f, int lo, int hi) {
  const lin_order& dom = f.domain();
  std::vector<element_id> ranking;
  for (int r = lo; r <= hi; ++r)
    ranking.push_back(dom.universe()->id_of(dom.index_at_rank(r)));
  lin_order sub = lin_order::from_ranking(ranking, ranking);
  std::vector<int> levels(sub.size());
  for (std::size_t i = 0; i < sub.size(); ++i) {
    int full_idx = dom.universe()->index_of(sub.universe()->id_of(static_cast<int>(i)));
    levels[i] = f.codomain().rank_of_index(f.image_index(full_idx));
  }
  auto pre = total_preorder::from_levels(sub.universe(), std::move(levels));
  try {
    auto result = decompose_preorder(sub, pre);
    if (!result) return std::nullopt;
    std::vector<int> sub_members(sub.size());
    for (std::size_t i = 0; i < sub.size(); ++i)
      sub_members[i] = dom.universe()->index_of(sub.universe()->id_of(static_cast<int>(i)));
    std::vector<convex_partition> result_levels(result->chain.levels().begin(),
                                                result->chain.levels().end());
    return piece_decomposition{std::move(result_levels), std::move(sub_members)};
  } catch (const error& e) {
    if (e.code() == errc::non_convex_kernel) return std::nullopt;
    throw;
  }
}

}  // namespace

piecewise_result piecewise_decompose(const ordered_fn& f) {
  const lin_order& dom = f.domain();
  const int n = static_cast<int>(dom.size());
  if (n == 0 || f.is_constant()) {
    return piecewise_result{convex_partition::one_block(dom.universe()), equiv_chain{}};
  }

  std::vector<std::pair<int, int>> intervals;
  std::vector<piece_decomposition> pieces;
  int start = 0;
  auto current = decompose_piece(f, 0, 0);
  for (int e = 1; e < n; ++e) {
    if (auto extended = decompose_piece(f, start, e)) {
      current = std::move(extended);
      continue;
    }
    intervals.emplace_back(start, e - 1);
    pieces.push_back(std::move(*current));
    start = e;
    current = decompose_piece(f, e, e);
  }
  intervals.emplace_back(start, n - 1);
  pieces.push_back(std::move(*current));

  std::vector<int> piece_of(n);
  for (std::size_t p = 0; p < intervals.size(); ++p)
    for (int r = intervals[p].first; r <= intervals[p].second; ++r)
      piece_of[dom.index_at_rank(r)] = static_cast<int>(p);
  auto piece_partition = convex_partition::from_block_ids(dom.universe(), piece_of);

  // Front-pad the shorter chains with discrete levels, then unite level by
  // level; blocks never cross pieces.
  std::size_t depth = 0;
  for (const auto& piece : pieces) depth = std::max(depth, piece.levels.size());
  std::vector<convex_partition> global_levels;
  for (std::size_t j = 0; j < depth; ++j) {
    std::vector<int> block_of(n);
    int offset = 0;
    for (const auto& piece : pieces) {
      const int pad = static_cast<int>(depth - piece.levels.size());
      const int local = static_cast<int>(j) - pad;
      int used = 0;
      if (local < 0) {
        for (int i = 0; i < static_cast<int>(piece.members.size()); ++i)
          block_of[piece.members[i]] = offset + i;
        used = static_cast<int>(piece.members.size());
      } else {
        const auto& level = piece.levels[local];
        for (std::size_t i = 0; i < piece.members.size(); ++i)
          block_of[piece.members[i]] = offset + level.block_of_index(static_cast<int>(i));
        used = static_cast<int>(level.block_count());
      }
      offset += used;
    }
    global_levels.push_back(convex_partition::from_block_ids(dom.universe(), block_of));
  }
  return piecewise_result{std::move(piece_partition),
                          equiv_chain::from_levels(std::move(global_levels))};
}

std::optional<int> min_piece_count(const ordered_fn& f, int max_n) {
  const int n = static_cast<int>(f.domain().size());
  if (n > max_n) return std::nullopt;
  if (n == 0) return 0;
  std::vector<std::vector<bool>> feasible(n, std::vector<bool>(n, false));
  for (int lo = 0; lo < n; ++lo)
    for (int hi = lo; hi < n; ++hi)
      feasible[lo][hi] = decompose_piece(f, lo, hi).has_value();
  std::vector<int> best(n + 1, n + 1);
  best[0] = 0;
  for (int end = 1; end <= n; ++end)
    for (int start = 0; start < end; ++start)
      if (feasible[start][end - 1])
        best[end] = std::min(best[end], best[start] + 1);
  return best[n];
}

namespace {

convex_partition partition_from_cuts(const lin_order& base, unsigned mask) {
  std::vector<int> block_of(base.size());
  int block = 0;
  for (int r = 0; r < static_cast<int>(base.size()); ++r) {
    if (r > 0 && (mask & (1u << (r - 1)))) ++block;
    block_of[base.index_at_rank(r)] = block;
  }
  return convex_partition::from_block_ids(base.universe(), std::move(block_of));
}

void chain_dfs(const std::vector<convex_partition>& by_mask, unsigned mask,
               std::vector<convex_partition>& levels,
               const std::function<void(const equiv_chain&)>& yield) {
  yield(equiv_chain::from_levels(levels));
  if (mask == 0) return;
  // Proper submasks, descending: dropping cuts coarsens the partition.
  for (unsigned sub = (mask - 1) & mask;; sub = (sub - 1) & mask) {
    levels.push_back(by_mask[sub]);
    chain_dfs(by_mask, sub, levels, yield);
    levels.pop_back();
    if (sub == 0) break;
  }
}

}  // namespace

void enumerate_chains(const lin_order& base, int bound,
                      const std::function<void(const equiv_chain&)>& yield) {
  const int n = static_cast<int>(base.size());
  if (n > bound)
    fail(errc::oracle_bound_exceeded,
         "carrier of " + std::to_string(n) + " exceeds bound " + std::to_string(bound));
  if (n == 0) {
    yield(equiv_chain::from_levels({convex_partition::discrete(base.universe())}));
    return;
  }
  const unsigned full = n >= 1 ? ((1u << (n - 1)) - 1u) : 0u;
  std::vector<convex_partition> by_mask;
  by_mask.reserve(full + 1);
  for (unsigned mask = 0; mask <= full; ++mask)
    by_mask.push_back(partition_from_cuts(base, mask));
  std::vector<convex_partition> levels{by_mask[full]};  // the discrete partition
  chain_dfs(by_mask, full, levels, yield);
}

std::vector<equiv_chain> enumerate_chains(const lin_order& base, int bound) {
  std::vector<equiv_chain> chains;
  enumerate_chains(base, bound, [&](const equiv_chain& chain) { chains.push_back(chain); });
  return chains;
}

}  // namespace cok
