#pragma once

#include <stdexcept>
#include <string>

namespace cok {

// Precondition and input violations. Domain-level "no result" outcomes are not
// errors; operations that can legitimately fail return std::optional instead.
enum class errc {
  duplicate_element,
  ranking_mismatch,
  unknown_element,
  carrier_mismatch,
  not_a_partition,
  non_convex_partition,
  incomparable_partitions,
  not_an_equiv_chain,
  not_total_preorder,
  non_convex_kernel,
  constant_function,
  not_a_function,
  non_convex_set,
  two_intersection_violated,
  oracle_bound_exceeded,
  bad_interval,
  cross_block_replacement,
  invalid_block_order,
  invalid_weights,
  bad_rational,
  parse_error,
};

const char* errc_name(errc code);

class error : public std::runtime_error {
 public:
  error(errc code, const std::string& message)
      : std::runtime_error(std::string(errc_name(code)) + ": " + message),
        code_(code) {}

  errc code() const { return code_; }

 private:
  errc code_;
};

[[noreturn]] inline void fail(errc code, const std::string& message) {
  throw error(code, message);
}

}  // namespace cok
