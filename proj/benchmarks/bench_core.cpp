// Microbenchmarks for the hot paths: chain application, chain recovery,
// exhaustive enumeration, subfamily extraction, and block-order checks.
#include <benchmark/benchmark.h>

#include <vector>

#include "cok/block_order.hpp"
#include "cok/block_reversal.hpp"
#include "cok/decompose.hpp"
#include "cok/generate.hpp"
#include "cok/helly.hpp"
#include "cok/lin_order.hpp"

namespace {

struct chain_fixture {
  cok::lin_order base;
  std::vector<cok::convex_partition> chain;
  cok::lin_order target;
};

chain_fixture make_chain_fixture(int n) {
  cok::rng gen(2024);
  cok::lin_order base = cok::random_order(gen, n);
  std::vector<cok::convex_partition> chain;
  while (chain.empty()) chain = cok::random_comparable_chain(gen, base, 4);
  cok::lin_order target = cok::apply_chain(base, chain);
  return {std::move(base), std::move(chain), std::move(target)};
}

void BM_apply_chain(benchmark::State& state) {
  chain_fixture fixture = make_chain_fixture(static_cast<int>(state.range(0)));
  for (auto _ : state)
    benchmark::DoNotOptimize(cok::apply_chain(fixture.base, fixture.chain));
}
BENCHMARK(BM_apply_chain)->Arg(8)->Arg(12)->Arg(14);

void BM_decompose_order(benchmark::State& state) {
  chain_fixture fixture = make_chain_fixture(static_cast<int>(state.range(0)));
  for (auto _ : state)
    benchmark::DoNotOptimize(cok::decompose_order(fixture.base, fixture.target));
}
BENCHMARK(BM_decompose_order)->Arg(8)->Arg(12)->Arg(14);

void BM_enumerate_chains(benchmark::State& state) {
  cok::rng gen(7);
  cok::lin_order base = cok::random_order(gen, static_cast<int>(state.range(0)));
  for (auto _ : state) {
    long long count = 0;
    cok::enumerate_chains(base, 8, [&](const cok::equiv_chain&) { ++count; });
    benchmark::DoNotOptimize(count);
  }
}
BENCHMARK(BM_enumerate_chains)->Arg(5)->Arg(6)->Arg(7);

void BM_extract_subfamily(benchmark::State& state) {
  cok::rng gen(11);
  cok::set_family family = cok::random_intersecting_family(
      gen, 20, static_cast<int>(state.range(0)), 2);
  for (auto _ : state)
    benchmark::DoNotOptimize(cok::extract_consistent_subfamily(family, 2));
}
BENCHMARK(BM_extract_subfamily)->Arg(6)->Arg(12);

void BM_verify_block_structure(benchmark::State& state) {
  cok::rng gen(5);
  cok::block_order order =
      cok::random_block_order(gen, static_cast<int>(state.range(0)), 50, 4);
  for (auto _ : state)
    benchmark::DoNotOptimize(cok::verify_block_structure(order));
}
BENCHMARK(BM_verify_block_structure)->Arg(4)->Arg(8);

}  // namespace

BENCHMARK_MAIN();
