#pragma once

#include <string>

#include <json.hpp>

#include "cok/block_order.hpp"
#include "cok/convexity.hpp"
#include "cok/decompose.hpp"
#include "cok/helly.hpp"
#include "cok/weighted_chain.hpp"

namespace cok {

// Field order is fixed, so serialization is byte-deterministic.
using json = nlohmann::ordered_json;

json to_json(const lin_order& order);
json to_json(const convex_partition& partition);
json to_json(const equiv_chain& chain);
json to_json(const ordered_fn& f);
json to_json(const set_family& family);
json to_json(const block_order& order);
json to_json(const weighted_chain& chain);
json to_json(const region_report& report);
json to_json(const decomposition_result& result);
json to_json(const monotone_decomposition& result);
json to_json(const piecewise_result& result);
json to_json(const subfamily_extraction& extraction);
json to_json(const structure_report& report);

lin_order lin_order_from_json(const json& value);
convex_partition partition_from_json(const json& value, const carrier_ref& universe);
equiv_chain chain_from_json(const json& value, const carrier_ref& universe);
ordered_fn fn_from_json(const json& value);
set_family family_from_json(const json& value);
block_order block_order_from_json(const json& value);
weighted_chain weighted_chain_from_json(const json& value);

// Wraps nlohmann parse errors into error(parse_error) with location info.
json parse_document(const std::string& text);

std::string dump_document(const json& value);

}  // namespace cok
