#include "cok/errors.hpp"

namespace cok {

const char* errc_name(errc code) {
  switch (code) {
    case errc::duplicate_element: return "DuplicateElement";
    case errc::ranking_mismatch: return "RankingMismatch";
    case errc::unknown_element: return "UnknownElement";
    case errc::carrier_mismatch: return "CarrierMismatch";
    case errc::not_a_partition: return "NotAPartition";
    case errc::non_convex_partition: return "NonConvexPartition";
    case errc::incomparable_partitions: return "IncomparablePartitions";
    case errc::not_an_equiv_chain: return "NotAnEquivChain";
    case errc::not_total_preorder: return "NotTotalPreorder";
    case errc::non_convex_kernel: return "NonConvexKernel";
    case errc::constant_function: return "ConstantFunction";
    case errc::not_a_function: return "NotAFunction";
    case errc::non_convex_set: return "NonConvexSet";
    case errc::two_intersection_violated: return "TwoIntersectionViolated";
    case errc::oracle_bound_exceeded: return "OracleBoundExceeded";
    case errc::bad_interval: return "BadInterval";
    case errc::cross_block_replacement: return "CrossBlockReplacement";
    case errc::invalid_block_order: return "InvalidBlockOrder";
    case errc::invalid_weights: return "InvalidWeights";
    case errc::bad_rational: return "BadRational";
    case errc::parse_error: return "ParseError";
  }
  return "UnknownError";
}

}  // namespace cok
