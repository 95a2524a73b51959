#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <optional>
#include <string>
#include <vector>

#include "cok/block_order.hpp"
#include "cok/decompose.hpp"
#include "cok/errors.hpp"
#include "cok/rational.hpp"
#include "cok/weighted_chain.hpp"
#include "support/oracles.hpp"

using cok::block_element;
using cok::block_order;
using cok::block_spec;
using cok::element_id;
using cok::genericity;
using cok::rational;

namespace {

std::vector<element_id> ids(std::initializer_list<const char*> names) {
  return {names.begin(), names.end()};
}

// Three blocks at 0 < 1 < 2, two tags, staggered intra ranks.
block_order sample() {
  return block_order::make({
      {rational(0), {{"a0", 0, 0}, {"a1", 0, 1}, {"b0", 1, 0}}},
      {rational(1), {{"c0", 0, 0}, {"d0", 1, 0}, {"d1", 1, 1}}},
      {rational(2), {{"e0", 0, 0}}},
  });
}

}  // namespace

TEST_CASE("rel_generic reads off block positions") {
  block_order order = sample();
  CHECK(order.rel_generic("a0", "c0") == genericity::right_generic);
  CHECK(order.rel_generic("c0", "a0") == genericity::left_generic);
  CHECK(order.rel_generic("a0", "b0") == genericity::dependent);
  CHECK(order.rel_generic("a0", "a0") == genericity::dependent);
  CHECK_THROWS_AS(order.rel_generic("a0", "zz"), cok::error);
}

TEST_CASE("insert_block_between lands at the midpoint or one past the ends") {
  block_order order = sample();

  block_order middle = order.insert_block_between(rational(0), rational(1),
                                                  {{"m0", 0, 0}});
  CHECK(middle.block_position("m0") == 1);
  CHECK(middle.block_at(1).index == rational(1, 2));
  CHECK(middle.rel_generic("a0", "m0") == genericity::right_generic);
  CHECK(middle.rel_generic("m0", "c0") == genericity::right_generic);

  block_order below = order.insert_block_between(std::nullopt, rational(0),
                                                 {{"low", 0, 0}});
  CHECK(below.block_at(0).index == rational(-1));
  CHECK(below.rel_generic("low", "a0") == genericity::right_generic);

  block_order above = order.insert_block_between(rational(2), std::nullopt,
                                                 {{"top", 0, 0}});
  CHECK(above.block_at(static_cast<int>(above.block_count()) - 1).index == rational(3));

  // Existing relations survive every insertion.
  for (const auto* grown : {&middle, &below, &above})
    for (const auto& x : ids({"a0", "b0", "c0", "d0", "e0"}))
      for (const auto& y : ids({"a0", "b0", "c0", "d0", "e0"}))
        CHECK(grown->rel_generic(x, y) == order.rel_generic(x, y));
}

TEST_CASE("insert_block_between rejects empty or unknown gaps") {
  block_order order = sample();
  CHECK_THROWS_AS(order.insert_block_between(rational(0), rational(0), {{"x", 0, 0}}),
                  cok::error);
  try {
    order.insert_block_between(rational(0), rational(0), {{"x", 0, 0}});
  } catch (const cok::error& e) {
    CHECK(e.code() == cok::errc::bad_interval);
  }
  CHECK_THROWS_AS(order.insert_block_between(rational(1), rational(0), {{"x", 0, 0}}),
                  cok::error);
  CHECK_THROWS_AS(
      order.insert_block_between(rational(1, 3), rational(1), {{"x", 0, 0}}),
      cok::error);
}

TEST_CASE("is_morley means strictly climbing blocks") {
  block_order order = sample();
  std::vector<element_id> climbing = ids({"a0", "c0", "e0"});
  std::vector<element_id> repeating = ids({"a0", "b0", "e0"});
  std::vector<element_id> dipping = ids({"c0", "a0", "e0"});
  CHECK(order.is_morley(climbing));
  CHECK_FALSE(order.is_morley(repeating));
  CHECK_FALSE(order.is_morley(dipping));
  CHECK(order.is_morley(std::vector<element_id>{}));
}

TEST_CASE("same-block replacement preserves the Morley reading") {
  block_order order = sample();
  std::vector<element_id> climbing = ids({"a0", "c0", "e0"});

  auto swapped = order.replace_in_blocks(climbing, {{1, "d1"}});
  CHECK(swapped == ids({"a0", "d1", "e0"}));
  CHECK(order.is_morley(swapped) == order.is_morley(climbing));

  std::vector<element_id> repeating = ids({"a0", "b0", "e0"});
  auto still_flat = order.replace_in_blocks(repeating, {{0, "a1"}});
  CHECK(order.is_morley(still_flat) == order.is_morley(repeating));

  CHECK_THROWS_AS(order.replace_in_blocks(climbing, {{1, "e0"}}), cok::error);
  try {
    order.replace_in_blocks(climbing, {{1, "e0"}});
  } catch (const cok::error& e) {
    CHECK(e.code() == cok::errc::cross_block_replacement);
  }
}

TEST_CASE("a fresh intermediate block extends a Morley sequence") {
  block_order order = sample();
  block_order grown = order.insert_block_between(rational(0), rational(1),
                                                 {{"m0", 0, 0}});
  CHECK(grown.is_morley(ids({"a0", "m0", "c0", "e0"})));
  // Landing in an occupied block instead breaks it until the occupant goes.
  CHECK_FALSE(grown.is_morley(ids({"a0", "m0", "c0", "d0", "e0"})));
  CHECK(grown.is_morley(ids({"a0", "m0", "d0", "e0"})));
}

TEST_CASE("linearize_family orders by block, then tag, then intra rank") {
  CHECK(cok::linearize_family(sample()).ranking_ids() ==
        ids({"a0", "a1", "b0", "c0", "d0", "d1", "e0"}));

  block_order single = block_order::make(
      {{rational(0), {{"m0", 0, 2}, {"m1", 0, 0}, {"m2", 0, 1}}}});
  CHECK(cok::linearize_family(single).ranking_ids() == ids({"m1", "m2", "m0"}));

  CHECK(cok::linearize_family(block_order::make({})).size() == 0);
}

TEST_CASE("linearization extends the generic relation") {
  block_order order = sample();
  cok::lin_order linear = cok::linearize_family(order);
  for (const auto& x : linear.ranking_ids())
    for (const auto& y : linear.ranking_ids())
      if (order.rel_generic(x, y) == genericity::right_generic)
        CHECK(linear.less(x, y));
}

TEST_CASE("one tag's restriction follows block then intra rank") {
  block_order order = sample();
  cok::lin_order linear = cok::linearize_family(order);
  // Tag 1 lives in blocks 0 and 1: b0 then d0 then d1.
  std::vector<element_id> tagged;
  for (const auto& id : linear.ranking_ids()) {
    const auto& block = order.block_at(order.block_position(id));
    for (const auto& member : block.members)
      if (member.id == id && member.tag == 1) tagged.push_back(id);
  }
  CHECK(tagged == ids({"b0", "d0", "d1"}));

  // Against the same ids in their stated order, the decomposition is the
  // trivial chain pointing the same way.
  cok::lin_order restriction = cok::lin_order::from_ranking(tagged, tagged);
  auto result = cok::decompose_order(restriction, restriction);
  REQUIRE(result.has_value());
  CHECK(result->chain.size() == 1);
  CHECK(result->direction == cok::orientation::same);
}

TEST_CASE("verify_block_structure passes well-formed data and flags corruption") {
  cok::structure_report healthy = cok::verify_block_structure(sample());
  CHECK(healthy.all_passed());
  for (const auto& check : healthy.checks) {
    CHECK(check.passed);
    CHECK(check.violations.empty());
  }

  // Route one element's membership lookup to the wrong block: dependence
  // stops matching block co-membership and the report says so.
  block_order corrupt = block_order::unchecked(
      {
          {rational(0), {{"a0", 0, 0}}},
          {rational(1), {{"b0", 0, 0}, {"x2", 0, 1}}},
          {rational(2), {{"c0", 0, 0}}},
      },
      {{"x2", 0}});
  cok::structure_report report = cok::verify_block_structure(corrupt);
  CHECK_FALSE(report.all_passed());
  bool some_violation = false;
  for (const auto& check : report.checks) some_violation |= !check.violations.empty();
  CHECK(some_violation);
}

TEST_CASE("block_order::make validates its input") {
  // Duplicate id across blocks.
  CHECK_THROWS_AS(block_order::make({{rational(0), {{"a", 0, 0}}},
                                     {rational(1), {{"a", 0, 0}}}}),
                  cok::error);
  // Repeated (tag, intra rank) inside a block.
  CHECK_THROWS_AS(block_order::make({{rational(0), {{"a", 0, 0}, {"b", 0, 0}}}}),
                  cok::error);
  // Repeated block index.
  CHECK_THROWS_AS(block_order::make({{rational(0), {{"a", 0, 0}}},
                                     {rational(0), {{"b", 0, 0}}}}),
                  cok::error);
  // Empty block.
  CHECK_THROWS_AS(block_order::make({{rational(0), {}}}), cok::error);
}

TEST_CASE("weighted chains measure the first level relating a pair") {
  cok::lin_order base = oracle::order_of(ids({"a", "b", "c", "d"}));
  const auto& universe = base.universe();
  cok::equiv_chain chain = cok::equiv_chain::from_levels(
      {cok::convex_partition::discrete(universe),
       oracle::blocks_of(universe, {{"a", "b"}, {"c", "d"}})});
  cok::weighted_chain metric =
      cok::weighted_chain::make(chain, {rational(0), rational(1, 2), rational(1)});

  CHECK(metric.distance("a", "b") == rational(1, 2));
  CHECK(metric.distance("a", "a") == rational(0));
  CHECK(metric.distance("a", "c") == rational(1));

  const auto& names = universe->ids();
  for (const auto& x : names)
    for (const auto& y : names) {
      CHECK(metric.distance(x, y) == metric.distance(y, x));
      CHECK((metric.distance(x, y) == rational(0)) == (x == y));
      for (const auto& z : names) {
        const rational direct = metric.distance(x, z);
        const rational detour =
            std::max(metric.distance(x, y), metric.distance(y, z));
        CHECK(direct <= detour);
      }
    }

  CHECK_THROWS_AS(metric.distance("a", "zz"), cok::error);
}

TEST_CASE("weighted_chain::make rejects malformed weights") {
  cok::lin_order base = oracle::order_of(ids({"a", "b"}));
  const auto& universe = base.universe();
  cok::convex_partition discrete = cok::convex_partition::discrete(universe);
  cok::convex_partition whole = cok::convex_partition::one_block(universe);

  auto expect_invalid = [](auto&& build) {
    try {
      build();
      FAIL("expected invalid_weights");
    } catch (const cok::error& e) {
      CHECK(e.code() == cok::errc::invalid_weights);
    }
  };

  expect_invalid([&] {
    return cok::weighted_chain::make(cok::equiv_chain(), {rational(0)});
  });
  expect_invalid([&] {  // missing the implicit one-block weight
    return cok::weighted_chain::make(cok::equiv_chain::from_levels({discrete}),
                                     {rational(0)});
  });
  expect_invalid([&] {  // discrete level must weigh zero
    return cok::weighted_chain::make(
        cok::equiv_chain::from_levels({discrete, whole}),
        {rational(1, 4), rational(1)});
  });
  expect_invalid([&] {  // not strictly increasing
    return cok::weighted_chain::make(
        cok::equiv_chain::from_levels({discrete, whole}),
        {rational(0), rational(0)});
  });
  expect_invalid([&] {  // top weight must be one
    return cok::weighted_chain::make(
        cok::equiv_chain::from_levels({discrete, whole}),
        {rational(0), rational(1, 2)});
  });
  expect_invalid([&] {  // out of range
    return cok::weighted_chain::make(cok::equiv_chain::from_levels({discrete}),
                                     {rational(0), rational(2)});
  });

  // The boundary shapes that are legal.
  cok::weighted_chain open_top = cok::weighted_chain::make(
      cok::equiv_chain::from_levels({discrete}), {rational(0), rational(1)});
  CHECK(open_top.distance("a", "b") == rational(1));
  cok::weighted_chain closed = cok::weighted_chain::make(
      cok::equiv_chain::from_levels({discrete, whole}), {rational(0), rational(1)});
  CHECK(closed.distance("a", "b") == rational(1));
}

TEST_CASE("rationals parse and print in lowest terms") {
  CHECK(cok::parse_rational("1/2") == rational(1, 2));
  CHECK(cok::parse_rational("-3") == rational(-3));
  CHECK(cok::parse_rational("4/6") == rational(2, 3));
  CHECK(cok::format_rational(rational(1, 2)) == "1/2");
  CHECK(cok::format_rational(rational(-1)) == "-1/1");
  CHECK(cok::format_rational(rational(6, 3)) == "2/1");
  CHECK_THROWS_AS(cok::parse_rational("1/0"), cok::error);
  CHECK_THROWS_AS(cok::parse_rational("x"), cok::error);
}
