#include "cok/generate.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <string>

#include "cok/block_reversal.hpp"

namespace cok {

std::uint64_t rng::next() {
  state_ += 0x9E3779B97F4A7C15ull;
  std::uint64_t z = state_;
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
  return z ^ (z >> 31);
}

std::uint64_t rng::below(std::uint64_t n) { return next() % n; }

int rng::range(int lo, int hi) {
  return lo + static_cast<int>(below(static_cast<std::uint64_t>(hi - lo + 1)));
}

bool rng::chance(int numerator, int denominator) {
  return below(static_cast<std::uint64_t>(denominator)) <
         static_cast<std::uint64_t>(numerator);
}

namespace {

std::string padded(int value) {
  return value < 10 ? "0" + std::to_string(value) : std::to_string(value);
}

std::vector<int> random_permutation(rng& gen, int n) {
  std::vector<int> perm(n);
  for (int i = 0; i < n; ++i) perm[i] = i;
  for (int i = n - 1; i > 0; --i)
    std::swap(perm[i], perm[static_cast<int>(gen.below(i + 1))]);
  return perm;
}

convex_partition partition_from_cut_mask(const lin_order& base, unsigned mask) {
  std::vector<int> block_of(base.size());
  int block = 0;
  for (int r = 0; r < static_cast<int>(base.size()); ++r) {
    if (r > 0 && (mask & (1u << (r - 1)))) ++block;
    block_of[base.index_at_rank(r)] = block;
  }
  return convex_partition::from_block_ids(base.universe(), std::move(block_of));
}

}  // namespace

carrier_ref random_carrier(rng& gen, int n) {
  const char prefix = static_cast<char>('a' + gen.below(26));
  std::vector<element_id> ids;
  ids.reserve(n);
  for (int i = 0; i < n; ++i) ids.push_back(std::string(1, prefix) + padded(i));
  return carrier::make(std::move(ids));
}

lin_order random_order(rng& gen, int n) {
  return random_order_on(gen, random_carrier(gen, n));
}

lin_order random_order_on(rng& gen, carrier_ref universe) {
  return lin_order::from_ranks(universe,
                               random_permutation(gen, static_cast<int>(universe->size())));
}

std::vector<convex_partition> random_comparable_chain(rng& gen,
                                                      const lin_order& base,
                                                      int max_len) {
  const int n = static_cast<int>(base.size());
  std::vector<convex_partition> levels;
  if (n <= 1) return levels;
  const unsigned full = (1u << (n - 1)) - 1u;
  const int target = gen.range(0, max_len);
  unsigned mask = static_cast<unsigned>(gen.below(full + 1));
  if (mask == full) mask = full & (full >> 1);  // keep level 0 above discrete
  while (static_cast<int>(levels.size()) < target) {
    levels.push_back(partition_from_cut_mask(base, mask));
    if (mask == 0) break;
    unsigned sub = mask;
    while (sub == mask) sub = mask & static_cast<unsigned>(gen.next());
    mask = sub;
  }
  return levels;
}

ordered_fn random_fn(rng& gen, int domain_n, int codomain_n) {
  lin_order domain = random_order(gen, domain_n);
  lin_order codomain = random_order(gen, codomain_n);
  std::vector<int> image(domain_n);
  for (int i = 0; i < domain_n; ++i) image[i] = static_cast<int>(gen.below(codomain_n));
  return ordered_fn::from_indices(std::move(domain), std::move(codomain),
                                  std::move(image));
}

ordered_fn random_decomposable_fn(rng& gen, int domain_n, int codomain_n) {
  lin_order domain = random_order(gen, domain_n);
  lin_order codomain = random_order(gen, codomain_n);
  // A convex kernel, a reversal chain on its quotient, and strictly
  // increasing class values: the lifted function has the kernel as its tie
  // relation and is weakly increasing after the lifted chain is applied.
  const int classes = gen.range(1, std::min(domain_n, codomain_n));
  std::vector<int> cut_order = random_permutation(gen, domain_n - 1);
  std::vector<bool> cut(std::max(domain_n - 1, 0), false);
  for (int c = 0; c < classes - 1; ++c) cut[cut_order[c]] = true;
  std::vector<int> block_of(domain_n);
  int block = 0;
  for (int r = 0; r < domain_n; ++r) {
    if (r > 0 && cut[r - 1]) ++block;
    block_of[domain.index_at_rank(r)] = block;
  }
  auto kernel = convex_partition::from_block_ids(domain.universe(), block_of);

  lin_order q_base = quotient(domain, kernel);
  std::vector<convex_partition> q_chain = random_comparable_chain(gen, q_base, 3);
  lin_order q_applied = apply_chain(q_base, std::span<const convex_partition>(q_chain));

  std::vector<int> value_ranks = random_permutation(gen, codomain_n);
  value_ranks.resize(classes);
  std::sort(value_ranks.begin(), value_ranks.end());

  std::vector<int> q_index_of_class(kernel.block_count());
  for (std::size_t b = 0; b < kernel.block_count(); ++b) {
    int rep = kernel.blocks()[b].front();  // least carrier id names the class
    q_index_of_class[b] = q_base.universe()->index_of(domain.universe()->id_of(rep));
  }
  std::vector<int> image(domain_n);
  for (int i = 0; i < domain_n; ++i) {
    int rank = q_applied.rank_of_index(q_index_of_class[kernel.block_of_index(i)]);
    image[i] = codomain.index_at_rank(value_ranks[rank]);
  }
  return ordered_fn::from_indices(std::move(domain), std::move(codomain),
                                  std::move(image));
}

set_family random_intersecting_family(rng& gen, int carrier_n, int family_n,
                                      int component_bound) {
  lin_order order = random_order(gen, carrier_n);
  std::vector<std::vector<bool>> picked;  // rank membership per set
  for (int member = 0; member < family_n; ++member) {
    bool placed = false;
    for (int attempt = 0; attempt < 60 && !placed; ++attempt) {
      std::vector<bool> ranks(carrier_n, false);
      const int pieces = gen.range(1, component_bound);
      for (int p = 0; p < pieces; ++p) {
        int lo = static_cast<int>(gen.below(carrier_n));
        int hi = std::min(carrier_n - 1, lo + gen.range(0, std::max(1, carrier_n / 3)));
        for (int r = lo; r <= hi; ++r) ranks[r] = true;
      }
      bool meets_all = true;
      for (const auto& other : picked) {
        bool meets = false;
        for (int r = 0; r < carrier_n && !meets; ++r) meets = ranks[r] && other[r];
        if (!meets) {
          meets_all = false;
          break;
        }
      }
      if (meets_all) {
        picked.push_back(std::move(ranks));
        placed = true;
      }
    }
    // A copy of an earlier member still meets everything pairwise.
    if (!placed) picked.push_back(picked.front());
  }
  std::vector<std::vector<element_id>> sets;
  sets.reserve(picked.size());
  for (const auto& ranks : picked) {
    std::vector<element_id> ids;
    for (int r = 0; r < carrier_n; ++r)
      if (ranks[r]) ids.push_back(order.universe()->id_of(order.index_at_rank(r)));
    sets.push_back(std::move(ids));
  }
  return set_family::make(std::move(order), std::move(sets));
}

block_order random_block_order(rng& gen, int max_blocks, int max_elements,
                               int max_tag) {
  const int blocks_n = gen.range(1, max_blocks);
  const int total = gen.range(blocks_n, std::max(blocks_n, max_elements));
  std::vector<block_spec> blocks(blocks_n);
  rational index(gen.range(-8, 8));
  for (int b = 0; b < blocks_n; ++b) {
    blocks[b].index = index;
    index += rational(gen.range(1, 6), gen.range(1, 3));
  }
  std::map<std::pair<int, int>, int> next_rank;  // (block, tag) -> next free rank
  for (int e = 0; e < total; ++e) {
    const int b = e < blocks_n ? e : static_cast<int>(gen.below(blocks_n));
    const int tag = gen.range(0, max_tag - 1);
    int& rank = next_rank[{b, tag}];
    blocks[b].members.push_back(block_element{"b" + padded(e), tag, rank});
    rank += gen.range(1, 3);
  }
  return block_order::make(std::move(blocks));
}

weighted_chain random_weighted_chain(rng& gen, int carrier_n) {
  lin_order base = lin_order::identity(random_carrier(gen, carrier_n));
  std::vector<convex_partition> levels{convex_partition::discrete(base.universe())};
  if (carrier_n > 1) {
    const unsigned full = (1u << (carrier_n - 1)) - 1u;
    unsigned mask = full;
    const int extra = gen.range(0, 4);
    for (int k = 0; k < extra && mask != 0; ++k) {
      unsigned sub = mask;
      while (sub == mask) sub = mask & static_cast<unsigned>(gen.next());
      mask = sub;
      levels.push_back(partition_from_cut_mask(base, mask));
    }
  }
  equiv_chain chain = equiv_chain::from_levels(std::move(levels));
  const std::size_t count = chain.size() + (chain.ends_one_block() ? 0 : 1);
  std::vector<rational> weights;
  if (count == 1) {
    weights.emplace_back(0);
  } else {
    const std::int64_t denominator = 60;
    std::set<std::int64_t> numerators;
    while (numerators.size() < count - 2)
      numerators.insert(1 + static_cast<std::int64_t>(gen.below(denominator - 1)));
    weights.emplace_back(0);
    for (std::int64_t numerator : numerators)
      weights.emplace_back(numerator, denominator);
    weights.emplace_back(1);
  }
  return weighted_chain::make(std::move(chain), std::move(weights));
}

}  // namespace cok
