#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace cok {

struct suite_result {
  std::string name;
  long long cases = 0;
  long long failures = 0;
  std::vector<std::string> notes;  // first few failure descriptions

  bool passed() const { return failures == 0; }
};

// Randomized and exhaustive invariant suites shared by the verify command
// and the acceptance runner. Every suite is deterministic in its arguments.
suite_result run_involution_suite(std::uint64_t seed, int instances, int max_n);
suite_result run_permutation_invariance_suite(std::uint64_t seed, int instances,
                                              int max_n, int max_len);
suite_result run_injectivity_suite(int max_n);
suite_result run_decompose_completeness_suite(int max_n);
suite_result run_decompose_roundtrip_suite(std::uint64_t seed, int instances,
                                           int max_n);
suite_result run_component_bound_suite(std::uint64_t seed, int exhaustive_max_n,
                                       int instances, int random_max_n);
suite_result run_monotonicity_suite(std::uint64_t seed, int instances,
                                    int max_domain, int max_codomain);
suite_result run_helly_suite(std::uint64_t seed, int exhaustive_carrier,
                             int oracle_instances);
suite_result run_block_order_suite(std::uint64_t seed, int instances);
suite_result run_ultrametric_suite(std::uint64_t seed, int instances);

struct verify_options {
  std::uint64_t seed = 0;
  bool quick = false;  // smaller instance counts
};

std::vector<suite_result> run_all_suites(const verify_options& options);

}  // namespace cok
