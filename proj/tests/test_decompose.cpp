#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <optional>
#include <string>
#include <vector>

#include "cok/block_reversal.hpp"
#include "cok/decompose.hpp"
#include "cok/errors.hpp"
#include "cok/ordered_fn.hpp"
#include "cok/preorder.hpp"
#include "support/oracles.hpp"

using cok::convex_partition;
using cok::element_id;
using cok::equiv_chain;
using cok::lin_order;
using cok::ordered_fn;
using oracle::blocks_of;
using oracle::order_of;

namespace {

std::vector<element_id> ids(std::initializer_list<const char*> names) {
  return {names.begin(), names.end()};
}

lin_order letters(int n) {
  std::vector<element_id> names;
  for (int i = 0; i < n; ++i) names.push_back(std::string(1, char('a' + i)));
  return order_of(names);
}

ordered_fn fn_of(lin_order domain, lin_order codomain,
                 std::initializer_list<std::pair<const char*, const char*>> map) {
  std::vector<std::pair<element_id, element_id>> pairs;
  for (const auto& [x, y] : map) pairs.emplace_back(x, y);
  return ordered_fn::make(std::move(domain), std::move(codomain), pairs);
}

bool weakly_increasing(const ordered_fn& f, const lin_order& domain_order) {
  for (std::size_t r = 0; r + 1 < domain_order.size(); ++r) {
    const int x = domain_order.index_at_rank(static_cast<int>(r));
    const int y = domain_order.index_at_rank(static_cast<int>(r) + 1);
    if (f.codomain().less_idx(f.image_index(y), f.image_index(x))) return false;
  }
  return true;
}

}  // namespace

TEST_CASE("decompose_order recovers the chain between two orders") {
  lin_order base = letters(4);
  const auto& universe = base.universe();

  auto identity = cok::decompose_order(base, base);
  REQUIRE(identity.has_value());
  CHECK(identity->chain.size() == 1);
  CHECK(identity->chain.levels()[0].is_discrete());
  CHECK(identity->direction == cok::orientation::same);

  auto full = cok::decompose_order(base, base.reversed());
  REQUIRE(full.has_value());
  CHECK(full->chain.size() == 2);
  CHECK(full->chain.ends_one_block());
  CHECK(full->direction == cok::orientation::opposite);

  auto swapped = cok::decompose_order(base, order_of(ids({"b", "a", "d", "c"})));
  REQUIRE(swapped.has_value());
  REQUIRE(swapped->chain.size() == 2);
  CHECK(swapped->chain.levels()[1] == blocks_of(universe, {{"a", "b"}, {"c", "d"}}));
  CHECK(swapped->direction == cok::orientation::same);

  // The interleaving b d a c admits no nested reversal chain.
  CHECK_FALSE(cok::decompose_order(base, order_of(ids({"b", "d", "a", "c"}))).has_value());
}

TEST_CASE("decompose_order requires a shared carrier") {
  CHECK_THROWS_AS(cok::decompose_order(letters(3), order_of(ids({"x", "y", "z"}))),
                  cok::error);
}

TEST_CASE("decompose_order succeeds exactly on targets some chain reaches") {
  for (int n = 1; n <= 5; ++n) {
    lin_order base = letters(n);
    std::vector<element_id> ranking = base.ranking_ids();
    std::sort(ranking.begin(), ranking.end());
    do {
      lin_order target = lin_order::from_ranking(base.ranking_ids(), ranking);
      auto matches = oracle::matching_chains(base, target);
      auto result = cok::decompose_order(base, target);
      CHECK(result.has_value() == !matches.empty());
      if (result) {
        // The chain replays to the target and is one the oracle found.
        CHECK(cok::apply_chain(base, result->chain) == target);
        auto masks = oracle::cuts_of_chain(base, result->chain);
        CHECK(std::find(matches.begin(), matches.end(), masks) != matches.end());
        if (matches.size() == 1) CHECK(masks == matches.front());
        // Orientation reads off the final level.
        CHECK((result->direction == cok::orientation::same) ==
              !result->chain.ends_one_block());
      }
    } while (std::next_permutation(ranking.begin(), ranking.end()));
  }
}

TEST_CASE("round trips return the canonical chain") {
  lin_order base = letters(5);
  for (const auto& masks : oracle::enumerate_cut_chains(5)) {
    auto levels = oracle::partitions_of_cuts(base, masks);
    lin_order target = cok::apply_chain(base, levels);
    auto result = cok::decompose_order(base, target);
    REQUIRE(result.has_value());
    CHECK(cok::apply_chain(base, result->chain) == target);
  }
}

TEST_CASE("distinct chains can collide only when their union is not nested") {
  lin_order base = letters(4);
  const auto& universe = base.universe();

  // Two different chains landing on the same order: their levels do not all
  // nest with one another.
  std::vector<convex_partition> long_way{blocks_of(universe, {{"a"}, {"b"}, {"c", "d"}}),
                                         blocks_of(universe, {{"a", "b"}, {"c", "d"}})};
  std::vector<convex_partition> short_way{blocks_of(universe, {{"a", "b"}, {"c"}, {"d"}})};
  lin_order via_long = cok::apply_chain(base, long_way);
  lin_order via_short = cok::apply_chain(base, short_way);
  CHECK(via_long == via_short);
  CHECK(via_long.ranking_ids() == ids({"b", "a", "c", "d"}));
  CHECK_FALSE(cok::comparable(long_way[0], short_way[0]));

  // The decomposition engine picks the shorter of the two.
  auto result = cok::decompose_order(base, via_long);
  REQUIRE(result.has_value());
  REQUIRE(result->chain.size() == 2);
  CHECK(result->chain.levels()[1] == short_way[0]);

  // Within a commonly nested family the map is injective: exhaust all chain
  // pairs on four elements whose union is still pairwise comparable.
  auto chains = oracle::enumerate_cut_chains(4);
  for (std::size_t i = 0; i < chains.size(); ++i) {
    for (std::size_t j = i + 1; j < chains.size(); ++j) {
      bool nested_union = true;
      for (unsigned a : chains[i])
        for (unsigned b : chains[j])
          if ((a & b) != a && (a & b) != b) nested_union = false;
      if (!nested_union) continue;
      lin_order left = cok::apply_chain(base, oracle::partitions_of_cuts(base, chains[i]));
      lin_order right = cok::apply_chain(base, oracle::partitions_of_cuts(base, chains[j]));
      CHECK_FALSE(left == right);
    }
  }
}

TEST_CASE("a nonempty chain never reproduces the base order") {
  for (int n = 2; n <= 5; ++n) {
    lin_order base = letters(n);
    for (const auto& masks : oracle::enumerate_cut_chains(n)) {
      if (masks.empty()) continue;
      auto levels = oracle::partitions_of_cuts(base, masks);
      CHECK_FALSE(cok::apply_chain(base, levels) == base);
    }
  }
}

TEST_CASE("decompose_preorder starts the chain at the tie kernel") {
  lin_order base = letters(4);
  const auto& universe = base.universe();

  // b and c tie, below a, below d: levels indexed by carrier position a,b,c,d.
  cok::total_preorder ties = cok::total_preorder::from_levels(universe, {1, 0, 0, 2});
  auto result = cok::decompose_preorder(base, ties);
  REQUIRE(result.has_value());
  CHECK(result->kernel == blocks_of(universe, {{"a"}, {"b", "c"}, {"d"}}));
  REQUIRE(result->chain.size() == 2);
  CHECK(result->chain.levels()[0] == result->kernel);
  CHECK(result->chain.levels()[1] == blocks_of(universe, {{"a", "b", "c"}, {"d"}}));
  // Replay: reversing within the chain realizes the preorder's strict part.
  lin_order realized = cok::apply_chain(base, result->chain);
  CHECK(realized.ranking_ids() == ids({"b", "c", "a", "d"}));
  for (int x = 0; x < 4; ++x)
    for (int y = 0; y < 4; ++y) {
      const bool stated = ties.leq_idx(x, y);
      const bool replayed = ties.ties_idx(x, y) || realized.less_idx(x, y);
      CHECK(stated == replayed);
    }

  // No ties: the kernel is discrete and the base order already matches.
  lin_order three = letters(3);
  cok::total_preorder plain = cok::total_preorder::from_levels(three.universe(), {0, 1, 2});
  auto simple = cok::decompose_preorder(three, plain);
  REQUIRE(simple.has_value());
  CHECK(simple->kernel.is_discrete());
  CHECK(simple->chain.size() == 1);

  // A kernel class that skips elements is rejected.
  cok::total_preorder skewed = cok::total_preorder::from_levels(universe, {0, 1, 2, 0});
  CHECK_THROWS_AS(cok::decompose_preorder(base, skewed), cok::error);
  try {
    cok::decompose_preorder(base, skewed);
  } catch (const cok::error& e) {
    CHECK(e.code() == cok::errc::non_convex_kernel);
  }
}

TEST_CASE("monotone_decompose straightens a function out") {
  lin_order domain = letters(4);
  lin_order codomain = order_of(ids({"1", "2", "3"}));
  ordered_fn f = fn_of(domain, codomain, {{"a", "2"}, {"b", "1"}, {"c", "1"}, {"d", "3"}});

  auto result = cok::monotone_decompose(f);
  REQUIRE(result.has_value());
  REQUIRE(result->domain_chain.size() == 2);
  CHECK(result->domain_chain.levels()[0] ==
        blocks_of(domain.universe(), {{"a"}, {"b", "c"}, {"d"}}));
  CHECK(result->domain_chain.levels()[0] == f.kernel());
  CHECK(result->domain_chain.levels()[1] ==
        blocks_of(domain.universe(), {{"a", "b", "c"}, {"d"}}));
  CHECK(result->direction == cok::orientation::same);

  // Replay on the domain side: after the reversals f is weakly increasing.
  lin_order rearranged = cok::apply_chain(domain, result->domain_chain);
  CHECK(rearranged.ranking_ids() == ids({"b", "c", "a", "d"}));
  CHECK(weakly_increasing(f, rearranged));

  // Codomain side: one pushforward level merging the images 1 and 2.
  REQUIRE(result->codomain_chain.size() == 1);
  CHECK(result->codomain_chain[0] == blocks_of(codomain.universe(), {{"1", "2"}, {"3"}}));

  // Equivalent codomain reading: reverse the codomain within the pushforward
  // chain and f is weakly increasing against the original domain order.
  lin_order bent = codomain;
  for (const auto& level : result->codomain_chain) bent = cok::reverse_within(bent, level);
  CHECK(bent.ranking_ids() == ids({"2", "1", "3"}));
  for (int x = 0; x < 4; ++x)
    for (int y = 0; y < 4; ++y)
      if (domain.less_idx(x, y))
        CHECK_FALSE(bent.less_idx(f.image_index(y), f.image_index(x)));
}

TEST_CASE("strictly monotone functions decompose trivially") {
  lin_order domain = letters(3);
  lin_order codomain = order_of(ids({"1", "2", "3"}));

  ordered_fn up = fn_of(domain, codomain, {{"a", "1"}, {"b", "2"}, {"c", "3"}});
  auto increasing = cok::monotone_decompose(up);
  REQUIRE(increasing.has_value());
  CHECK(increasing->domain_chain.size() == 1);
  CHECK(increasing->domain_chain.levels()[0].is_discrete());
  CHECK(increasing->direction == cok::orientation::same);
  CHECK(increasing->codomain_chain.empty());

  ordered_fn down = fn_of(domain, codomain, {{"a", "3"}, {"b", "2"}, {"c", "1"}});
  auto decreasing = cok::monotone_decompose(down);
  REQUIRE(decreasing.has_value());
  REQUIRE(decreasing->domain_chain.size() == 2);
  CHECK(decreasing->domain_chain.levels()[0].is_discrete());
  CHECK(decreasing->domain_chain.levels()[1].is_one_block());
  CHECK(decreasing->direction == cok::orientation::opposite);
}

TEST_CASE("monotone_decompose rejects constant functions") {
  lin_order domain = letters(3);
  lin_order codomain = order_of(ids({"1", "2"}));
  ordered_fn flat = fn_of(domain, codomain, {{"a", "1"}, {"b", "1"}, {"c", "1"}});
  CHECK_THROWS_AS(cok::monotone_decompose(flat), cok::error);
  try {
    cok::monotone_decompose(flat);
  } catch (const cok::error& e) {
    CHECK(e.code() == cok::errc::constant_function);
  }
}

TEST_CASE("codomain levels extend beyond the image") {
  lin_order domain = letters(4);

  // A codomain point above every image point becomes its own block.
  lin_order spare_top = order_of(ids({"1", "2", "3", "4"}));
  ordered_fn f =
      fn_of(domain, spare_top, {{"a", "2"}, {"b", "1"}, {"c", "1"}, {"d", "3"}});
  auto result = cok::monotone_decompose(f);
  REQUIRE(result.has_value());
  REQUIRE(result->codomain_chain.size() == 1);
  CHECK(result->codomain_chain[0] ==
        blocks_of(spare_top.universe(), {{"1", "2"}, {"3"}, {"4"}}));

  // An interior gap point joins the image block on its left.
  lin_order gapped = lin_order::from_ranking(ids({"1", "2", "3", "5"}),
                                             ids({"1", "2", "3", "5"}));
  ordered_fn g = fn_of(domain, gapped, {{"a", "2"}, {"b", "1"}, {"c", "1"}, {"d", "5"}});
  auto widened = cok::monotone_decompose(g);
  REQUIRE(widened.has_value());
  REQUIRE(widened->codomain_chain.size() == 1);
  CHECK(widened->codomain_chain[0] ==
        blocks_of(gapped.universe(), {{"1", "2", "3"}, {"5"}}));
}

TEST_CASE("local_monotonicity returns a nontrivial partition f respects") {
  lin_order domain = letters(4);
  lin_order codomain = order_of(ids({"1", "2", "3", "4"}));

  // Nontrivial fibers: the kernel itself qualifies.
  ordered_fn tied =
      fn_of(domain, order_of(ids({"1", "2", "3"})),
            {{"a", "2"}, {"b", "1"}, {"c", "1"}, {"d", "3"}});
  auto kernel_level = cok::local_monotonicity(tied);
  REQUIRE(kernel_level.has_value());
  CHECK(*kernel_level == blocks_of(domain.universe(), {{"a"}, {"b", "c"}, {"d"}}));

  // Injective and strictly monotone: the whole domain in one class.
  ordered_fn up = fn_of(letters(3), order_of(ids({"1", "2", "3"})),
                        {{"a", "1"}, {"b", "2"}, {"c", "3"}});
  auto whole = cok::local_monotonicity(up);
  REQUIRE(whole.has_value());
  CHECK(whole->is_one_block());

  // Injective but bent: the first chain level above the kernel.
  ordered_fn bent =
      fn_of(domain, codomain, {{"a", "2"}, {"b", "1"}, {"c", "3"}, {"d", "4"}});
  auto level = cok::local_monotonicity(bent);
  REQUIRE(level.has_value());
  CHECK(*level == blocks_of(domain.universe(), {{"a", "b"}, {"c"}, {"d"}}));

  // Per-class behavior: constant or strictly monotone on every class.
  for (const auto& block : level->blocks()) {
    bool all_equal = true;
    bool strictly_up = true;
    bool strictly_down = true;
    for (std::size_t i = 0; i + 1 < block.size(); ++i) {
      const int fx = bent.image_index(block[i]);
      const int fy = bent.image_index(block[i + 1]);
      all_equal = all_equal && fx == fy;
      strictly_up = strictly_up && bent.codomain().less_idx(fx, fy);
      strictly_down = strictly_down && bent.codomain().less_idx(fy, fx);
    }
    CHECK((all_equal || strictly_up || strictly_down));
  }

  ordered_fn flat = fn_of(letters(2), order_of(ids({"1", "2"})),
                          {{"a", "1"}, {"b", "1"}});
  CHECK_THROWS_AS(cok::local_monotonicity(flat), cok::error);
}

TEST_CASE("upper_monotonicity finds the coarsest strict level") {
  lin_order domain = letters(4);
  lin_order codomain = order_of(ids({"1", "2", "3", "4"}));

  ordered_fn bent =
      fn_of(domain, codomain, {{"a", "2"}, {"b", "1"}, {"c", "3"}, {"d", "4"}});
  auto upward = cok::upper_monotonicity(bent);
  REQUIRE(upward.has_value());
  CHECK(upward->equiv == blocks_of(domain.universe(), {{"a", "b"}, {"c"}, {"d"}}));
  CHECK(upward->direction == cok::monotone_direction::increasing);

  ordered_fn arched =
      fn_of(domain, codomain, {{"a", "3"}, {"b", "4"}, {"c", "2"}, {"d", "1"}});
  auto downward = cok::upper_monotonicity(arched);
  REQUIRE(downward.has_value());
  CHECK(downward->equiv == blocks_of(domain.universe(), {{"a", "b"}, {"c"}, {"d"}}));
  CHECK(downward->direction == cok::monotone_direction::decreasing);

  ordered_fn up = fn_of(letters(3), order_of(ids({"1", "2", "3"})),
                        {{"a", "1"}, {"b", "2"}, {"c", "3"}});
  auto plain = cok::upper_monotonicity(up);
  REQUIRE(plain.has_value());
  CHECK(plain->equiv.is_discrete());
  CHECK(plain->direction == cok::monotone_direction::increasing);

  // Defining implication, across every pair of distinct classes.
  for (const auto* probe : {&bent, &arched}) {
    auto result = cok::upper_monotonicity(*probe);
    REQUIRE(result.has_value());
    const auto& f = *probe;
    const int n = static_cast<int>(f.domain().size());
    for (int x = 0; x < n; ++x)
      for (int y = 0; y < n; ++y) {
        if (result->equiv.same_block_idx(x, y) || !f.domain().less_idx(x, y)) continue;
        const bool image_up = f.codomain().less_idx(f.image_index(x), f.image_index(y));
        CHECK(image_up == (result->direction == cok::monotone_direction::increasing));
      }
  }
}

TEST_CASE("piecewise_decompose splits at monotonicity obstructions") {
  lin_order domain = order_of(ids({"x1", "x2", "x3", "x4"}));
  lin_order codomain = lin_order::from_ranking(ids({"10", "15", "20", "5"}),
                                               ids({"5", "10", "15", "20"}));
  ordered_fn f = fn_of(domain, codomain,
                       {{"x1", "10"}, {"x2", "20"}, {"x3", "5"}, {"x4", "15"}});

  cok::piecewise_result result = cok::piecewise_decompose(f);
  CHECK(result.pieces ==
        blocks_of(domain.universe(), {{"x1", "x2", "x3"}, {"x4"}}));
  REQUIRE(result.chain.size() == 3);
  CHECK(result.chain.levels()[0].is_discrete());
  CHECK(result.chain.levels()[1] ==
        blocks_of(domain.universe(), {{"x1", "x2"}, {"x3"}, {"x4"}}));
  CHECK(result.chain.levels()[2] ==
        blocks_of(domain.universe(), {{"x1", "x2", "x3"}, {"x4"}}));

  // Every chain block stays inside one piece, and each piece replays to a
  // weakly increasing restriction.
  CHECK(result.chain.levels().back().refines(result.pieces));
  lin_order rearranged = cok::apply_chain(domain, result.chain);
  for (const auto& piece : result.pieces.blocks()) {
    std::vector<int> members(piece.begin(), piece.end());
    std::sort(members.begin(), members.end(), [&](int lhs, int rhs) {
      return rearranged.less_idx(lhs, rhs);
    });
    for (std::size_t i = 0; i + 1 < members.size(); ++i)
      CHECK_FALSE(codomain.less_idx(f.image_index(members[i + 1]),
                                    f.image_index(members[i])));
  }

  // Two pieces is also the minimum.
  auto minimum = cok::min_piece_count(f);
  REQUIRE(minimum.has_value());
  CHECK(*minimum == 2);
}

TEST_CASE("piecewise_decompose handles the trivial shapes") {
  lin_order domain = letters(3);
  lin_order codomain = order_of(ids({"1", "2", "3"}));

  ordered_fn up = fn_of(domain, codomain, {{"a", "1"}, {"b", "2"}, {"c", "3"}});
  cok::piecewise_result increasing = cok::piecewise_decompose(up);
  CHECK(increasing.pieces.is_one_block());
  CHECK(increasing.chain.size() == 1);
  CHECK(increasing.chain.levels()[0].is_discrete());

  ordered_fn flat = fn_of(domain, codomain, {{"a", "2"}, {"b", "2"}, {"c", "2"}});
  cok::piecewise_result constant = cok::piecewise_decompose(flat);
  CHECK(constant.pieces.is_one_block());
  CHECK(constant.chain.empty());
}

TEST_CASE("enumerate_chains yields each nested chain exactly once") {
  // Totals for carriers of size 1 through 7, pinned against an independent
  // binomial recurrence.
  const std::vector<long long> expected{1, 2, 6, 26, 150, 1082, 9366};
  for (int n = 1; n <= 7; ++n) {
    CHECK(oracle::cut_chain_count(n) == expected[n - 1]);
    lin_order base = letters(n);
    long long count = 0;
    cok::enumerate_chains(base, 8, [&](const equiv_chain&) { ++count; });
    CHECK(count == expected[n - 1]);
  }

  // Same chains as the mask enumerator, not just the same number.
  for (int n = 1; n <= 5; ++n) {
    lin_order base = letters(n);
    std::vector<std::vector<unsigned>> seen;
    for (const auto& chain : cok::enumerate_chains(base, 8)) {
      CHECK(chain.starts_discrete());
      seen.push_back(oracle::cuts_of_chain(base, chain));
    }
    auto wanted = oracle::enumerate_cut_chains(n);
    std::sort(seen.begin(), seen.end());
    std::sort(wanted.begin(), wanted.end());
    CHECK(seen == wanted);
  }
}

TEST_CASE("enumerate_chains enforces its carrier bound") {
  std::vector<element_id> names;
  for (int i = 0; i < 9; ++i) names.push_back(std::string(1, char('a' + i)));
  lin_order big = order_of(names);
  CHECK_THROWS_AS(cok::enumerate_chains(big, 8), cok::error);
  try {
    cok::enumerate_chains(big, 8);
  } catch (const cok::error& e) {
    CHECK(e.code() == cok::errc::oracle_bound_exceeded);
  }

  // The bound is exact: five elements pass at 5 and fail at 4.
  lin_order five = letters(5);
  CHECK_THROWS_AS(cok::enumerate_chains(five, 4), cok::error);
  CHECK(cok::enumerate_chains(five, 5).size() == 150);
}
