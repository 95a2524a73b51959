#include "cok/json_io.hpp"

#include <algorithm>
#include <set>

#include "cok/errors.hpp"

namespace cok {

namespace {

const json& field(const json& value, const char* key) {
  if (!value.is_object())
    fail(errc::parse_error, std::string("expected an object with '") + key + "'");
  auto found = value.find(key);
  if (found == value.end())
    fail(errc::parse_error, std::string("missing field '") + key + "'");
  return *found;
}

const json* optional_field(const json& value, const char* key) {
  if (!value.is_object()) return nullptr;
  auto found = value.find(key);
  return found == value.end() ? nullptr : &*found;
}

const json& as_array(const json& value, const char* what) {
  if (!value.is_array())
    fail(errc::parse_error, std::string(what) + " must be an array");
  return value;
}

element_id id_from_json(const json& value) {
  if (value.is_string()) return value.get<element_id>();
  if (value.is_number_integer())
    return std::to_string(value.get<long long>());
  if (value.is_number_unsigned())
    return std::to_string(value.get<unsigned long long>());
  fail(errc::parse_error, "element ids must be strings or integers");
}

std::vector<element_id> ids_from_json(const json& value, const char* what) {
  std::vector<element_id> ids;
  for (const auto& entry : as_array(value, what)) ids.push_back(id_from_json(entry));
  return ids;
}

int int_from_json(const json& value, const char* what) {
  if (!value.is_number_integer() && !value.is_number_unsigned())
    fail(errc::parse_error, std::string(what) + " must be an integer");
  return value.get<int>();
}

rational rational_from_json(const json& value, const char* what) {
  if (value.is_string()) return parse_rational(value.get<std::string>());
  if (value.is_number_integer())
    return rational(value.get<std::int64_t>());
  fail(errc::parse_error, std::string(what) + " must be \"p/q\" or an integer");
}

json ids_to_json(const std::vector<element_id>& ids) {
  json out = json::array();
  for (const auto& id : ids) out.push_back(id);
  return out;
}

}  // namespace

json to_json(const lin_order& order) {
  json out = json::object();
  out["elements"] = ids_to_json(order.universe()->ids());
  out["ranking"] = ids_to_json(order.ranking_ids());
  return out;
}

json to_json(const convex_partition& partition) {
  json blocks = json::array();
  for (const auto& block : partition.block_ids()) blocks.push_back(ids_to_json(block));
  json out = json::object();
  out["blocks"] = std::move(blocks);
  return out;
}

json to_json(const equiv_chain& chain) {
  json levels = json::array();
  for (const auto& level : chain.levels()) levels.push_back(to_json(level));
  json out = json::object();
  out["levels"] = std::move(levels);
  return out;
}

json to_json(const ordered_fn& f) {
  json out = json::object();
  out["domain"] = to_json(f.domain());
  out["codomain"] = to_json(f.codomain());
  json map = json::array();
  for (std::size_t i = 0; i < f.domain().size(); ++i) {
    json pair = json::array();
    pair.push_back(f.domain().universe()->id_of(static_cast<int>(i)));
    pair.push_back(f.codomain().universe()->id_of(f.image_index(static_cast<int>(i))));
    map.push_back(std::move(pair));
  }
  out["map"] = std::move(map);
  return out;
}

json to_json(const set_family& family) {
  json out = json::object();
  out["order"] = to_json(family.order());
  json sets = json::array();
  for (std::size_t n = 0; n < family.size(); ++n)
    sets.push_back(ids_to_json(family.set_ids(static_cast<int>(n))));
  out["sets"] = std::move(sets);
  return out;
}

json to_json(const block_order& order) {
  json blocks = json::array();
  for (std::size_t p = 0; p < order.block_count(); ++p) {
    const auto& block = order.block_at(static_cast<int>(p));
    json members = json::array();
    for (const auto& member : block.members) {
      json entry = json::object();
      entry["id"] = member.id;
      entry["tag"] = member.tag;
      entry["rank"] = member.intra_rank;
      members.push_back(std::move(entry));
    }
    json spec = json::object();
    spec["index"] = format_rational(block.index);
    spec["elements"] = std::move(members);
    blocks.push_back(std::move(spec));
  }
  json out = json::object();
  out["blocks"] = std::move(blocks);
  return out;
}

json to_json(const weighted_chain& chain) {
  json out = json::object();
  json levels = json::array();
  for (const auto& level : chain.chain().levels()) levels.push_back(to_json(level));
  out["levels"] = std::move(levels);
  json weights = json::array();
  for (const auto& weight : chain.weights()) weights.push_back(format_rational(weight));
  out["weights"] = std::move(weights);
  return out;
}

json to_json(const region_report& report) {
  json out = json::object();
  json components = json::array();
  for (const auto& component : report.components)
    components.push_back(ids_to_json(component));
  out["components"] = std::move(components);
  out["is_convex"] = report.is_convex;
  out["is_initial"] = report.is_initial;
  out["is_final"] = report.is_final;
  out["is_bounded"] = report.is_bounded;
  return out;
}

namespace {

const char* orientation_name(orientation direction) {
  return direction == orientation::same ? "same" : "opposite";
}

}  // namespace

json to_json(const decomposition_result& result) {
  json out = json::object();
  out["chain"] = to_json(result.chain);
  out["orientation"] = orientation_name(result.direction);
  return out;
}

json to_json(const monotone_decomposition& result) {
  json out = json::object();
  out["chain"] = to_json(result.domain_chain);
  out["orientation"] = orientation_name(result.direction);
  json levels = json::array();
  for (const auto& level : result.codomain_chain) levels.push_back(to_json(level));
  out["codomain_chain"] = std::move(levels);
  return out;
}

json to_json(const piecewise_result& result) {
  json out = json::object();
  json pieces = json::array();
  for (const auto& piece : result.pieces.block_ids()) pieces.push_back(ids_to_json(piece));
  out["pieces"] = std::move(pieces);
  out["chain"] = to_json(result.chain);
  return out;
}

json to_json(const subfamily_extraction& extraction) {
  json out = json::object();
  json indices = json::array();
  for (int index : extraction.indices) indices.push_back(index);
  out["indices"] = std::move(indices);
  out["witness"] = extraction.witness;
  out["route"] = extraction.route;
  out["search_mode"] = extraction.search_mode;
  if (extraction.color.first >= 0) {
    json color = json::array();
    color.push_back(extraction.color.first);
    color.push_back(extraction.color.second);
    out["color"] = std::move(color);
  } else {
    out["color"] = nullptr;
  }
  return out;
}

json to_json(const structure_report& report) {
  json out = json::object();
  json checks = json::array();
  for (const auto& check : report.checks) {
    json entry = json::object();
    entry["name"] = check.name;
    entry["passed"] = check.passed;
    json violations = json::array();
    for (const auto& violation : check.violations) violations.push_back(violation);
    entry["violations"] = std::move(violations);
    checks.push_back(std::move(entry));
  }
  out["checks"] = std::move(checks);
  out["all_passed"] = report.all_passed();
  return out;
}

lin_order lin_order_from_json(const json& value) {
  std::vector<element_id> ranking = ids_from_json(field(value, "ranking"), "ranking");
  std::vector<element_id> elements =
      optional_field(value, "elements")
          ? ids_from_json(*optional_field(value, "elements"), "elements")
          : ranking;
  return lin_order::from_ranking(std::move(elements), std::move(ranking));
}

convex_partition partition_from_json(const json& value, const carrier_ref& universe) {
  const json& blocks_json =
      value.is_array() ? value : field(value, "blocks");
  std::vector<std::vector<element_id>> blocks;
  for (const auto& block : as_array(blocks_json, "blocks"))
    blocks.push_back(ids_from_json(block, "block"));
  return convex_partition::from_blocks(universe, blocks);
}

equiv_chain chain_from_json(const json& value, const carrier_ref& universe) {
  const json& levels_json = value.is_array() ? value : field(value, "levels");
  std::vector<convex_partition> levels;
  for (const auto& level : as_array(levels_json, "levels"))
    levels.push_back(partition_from_json(level, universe));
  return equiv_chain::from_levels(std::move(levels));
}

ordered_fn fn_from_json(const json& value) {
  lin_order domain = lin_order_from_json(field(value, "domain"));
  lin_order codomain = lin_order_from_json(field(value, "codomain"));
  const json& map = field(value, "map");
  std::vector<std::pair<element_id, element_id>> pairs;
  if (map.is_object()) {
    for (const auto& [key, target] : map.items())
      pairs.emplace_back(key, id_from_json(target));
  } else {
    for (const auto& entry : as_array(map, "map")) {
      const auto& pair = as_array(entry, "map entry");
      if (pair.size() != 2)
        fail(errc::parse_error, "map entries must be [source, target] pairs");
      pairs.emplace_back(id_from_json(pair[0]), id_from_json(pair[1]));
    }
  }
  return ordered_fn::make(std::move(domain), std::move(codomain), pairs);
}

set_family family_from_json(const json& value) {
  lin_order order = lin_order_from_json(field(value, "order"));
  std::vector<std::vector<element_id>> sets;
  for (const auto& set : as_array(field(value, "sets"), "sets"))
    sets.push_back(ids_from_json(set, "set"));
  return set_family::make(std::move(order), std::move(sets));
}

block_order block_order_from_json(const json& value) {
  std::vector<block_spec> blocks;
  for (const auto& spec : as_array(field(value, "blocks"), "blocks")) {
    block_spec block;
    block.index = rational_from_json(field(spec, "index"), "block index");
    const auto& members = as_array(field(spec, "elements"), "elements");
    for (std::size_t i = 0; i < members.size(); ++i) {
      const auto& member = members[i];
      block_element entry;
      entry.id = id_from_json(field(member, "id"));
      entry.tag = optional_field(member, "tag")
                      ? int_from_json(*optional_field(member, "tag"), "tag")
                      : 0;
      entry.intra_rank = optional_field(member, "rank")
                             ? int_from_json(*optional_field(member, "rank"), "rank")
                             : static_cast<int>(i);
      block.members.push_back(std::move(entry));
    }
    blocks.push_back(std::move(block));
  }
  return block_order::make(std::move(blocks));
}

weighted_chain weighted_chain_from_json(const json& value) {
  const json& levels = as_array(field(value, "levels"), "levels");
  equiv_chain chain;
  if (!levels.empty()) {
    // The carrier is the union of the first level's blocks.
    std::set<element_id> ids;
    const json& first = levels[0].is_array() ? levels[0] : field(levels[0], "blocks");
    for (const auto& block : as_array(first, "blocks"))
      for (const auto& id : as_array(block, "block")) ids.insert(id_from_json(id));
    carrier_ref universe = carrier::make({ids.begin(), ids.end()});
    chain = chain_from_json(levels, universe);
  }
  std::vector<rational> weights;
  for (const auto& weight : as_array(field(value, "weights"), "weights"))
    weights.push_back(rational_from_json(weight, "weight"));
  return weighted_chain::make(std::move(chain), std::move(weights));
}

json parse_document(const std::string& text) {
  try {
    return json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    fail(errc::parse_error, e.what());
  }
}

std::string dump_document(const json& value) {
  return value.dump(2) + "\n";
}

}  // namespace cok
