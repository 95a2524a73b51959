// Command-line front end: JSON in, JSON out, deterministic for a fixed
// (input, seed) pair. Exit codes: 0 success, 1 input or usage error,
// 2 domain failure (the operation itself reports no result).
#include <cstdint>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "cok/block_order.hpp"
#include "cok/block_reversal.hpp"
#include "cok/convexity.hpp"
#include "cok/decompose.hpp"
#include "cok/errors.hpp"
#include "cok/generate.hpp"
#include "cok/helly.hpp"
#include "cok/json_io.hpp"
#include "cok/verify.hpp"
#include "cok/weighted_chain.hpp"

namespace {

constexpr int exit_ok = 0;
constexpr int exit_input_error = 1;
constexpr int exit_domain_failure = 2;

struct run_config {
  std::string input_path;
  std::string output_path;
  std::uint64_t seed = 0;
  int oracle_bound = 8;
  bool force = false;
};

int emit(const run_config& config, const cok::json& value) {
  const std::string text = cok::dump_document(value);
  if (config.output_path.empty()) {
    std::cout << text;
    return exit_ok;
  }
  std::ofstream out(config.output_path, std::ios::binary);
  if (!out) {
    std::cerr << "cannot open output file: " << config.output_path << "\n";
    return exit_input_error;
  }
  out << text;
  return exit_ok;
}

int emit_failure(const run_config& config, const std::string& message) {
  cok::json failure;
  failure["failure"] = message;
  emit(config, failure);
  return exit_domain_failure;
}

cok::json load_input(const run_config& config) {
  std::ifstream in(config.input_path, std::ios::binary);
  if (!in) cok::fail(cok::errc::parse_error, "cannot open input file: " + config.input_path);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return cok::parse_document(buffer.str());
}

int int_field_or(const cok::json& value, const char* name, int fallback) {
  if (!value.contains(name)) return fallback;
  const cok::json& field = value.at(name);
  if (!field.is_number_integer())
    cok::fail(cok::errc::parse_error, std::string(name) + " must be an integer");
  return field.get<int>();
}

int run_decompose(const run_config& config) {
  const cok::json input = load_input(config);
  cok::lin_order base = cok::lin_order_from_json(input.at("base"));
  cok::lin_order target = cok::lin_order_from_json(input.at("target"));
  auto result = cok::decompose_order(base, target);
  if (!result)
    return emit_failure(config,
                        "target is not reachable from the base by a nested reversal chain");
  return emit(config, cok::to_json(*result));
}

int run_monotone(const run_config& config) {
  const cok::json input = load_input(config);
  cok::ordered_fn f = cok::fn_from_json(input);
  std::optional<cok::monotone_decomposition> result;
  try {
    result = cok::monotone_decompose(f);
  } catch (const cok::error& e) {
    return emit_failure(config, e.what());
  }
  if (!result)
    return emit_failure(config, "no reversal chain makes the function weakly increasing");
  return emit(config, cok::to_json(*result));
}

int run_piecewise(const run_config& config) {
  const cok::json input = load_input(config);
  cok::ordered_fn f = cok::fn_from_json(input);
  return emit(config, cok::to_json(cok::piecewise_decompose(f)));
}

int run_components(const run_config& config) {
  const cok::json input = load_input(config);
  cok::lin_order order = cok::lin_order_from_json(input.at("order"));
  std::vector<cok::element_id> subset;
  for (const auto& id : input.at("subset")) subset.push_back(id.get<std::string>());
  return emit(config, cok::to_json(cok::region_classify(order, subset)));
}

int run_helly(const run_config& config) {
  const cok::json input = load_input(config);
  cok::set_family family = cok::family_from_json(input);
  const int target = int_field_or(input, "target_size", 1);
  std::optional<cok::subfamily_extraction> result;
  try {
    result = cok::extract_consistent_subfamily(family, target);
  } catch (const cok::error& e) {
    return emit_failure(config, e.what());
  }
  if (!result)
    return emit_failure(config, "no subfamily of the requested size has a common element");
  return emit(config, cok::to_json(*result));
}

int run_simulate(const run_config& config) {
  const cok::json input = load_input(config);
  cok::block_order order = cok::block_order_from_json(input);
  return emit(config, cok::to_json(cok::verify_block_structure(order)));
}

int run_ultrametric(const run_config& config) {
  const cok::json input = load_input(config);
  cok::weighted_chain chain = cok::weighted_chain_from_json(input);
  const auto& ids = chain.universe()->ids();
  cok::json out;
  if (input.contains("pairs")) {
    cok::json pairs = cok::json::array();
    for (const auto& pair : input.at("pairs")) {
      if (!pair.is_array() || pair.size() != 2)
        cok::fail(cok::errc::parse_error, "each pair must be a two-element array");
      const std::string x = pair[0].get<std::string>();
      const std::string y = pair[1].get<std::string>();
      cok::json entry;
      entry["x"] = x;
      entry["y"] = y;
      entry["distance"] = cok::format_rational(chain.distance(x, y));
      pairs.push_back(std::move(entry));
    }
    out["pairs"] = std::move(pairs);
    return emit(config, out);
  }
  cok::json elements = cok::json::array();
  for (const auto& id : ids) elements.push_back(id);
  cok::json matrix = cok::json::array();
  for (const auto& x : ids) {
    cok::json row = cok::json::array();
    for (const auto& y : ids) row.push_back(cok::format_rational(chain.distance(x, y)));
    matrix.push_back(std::move(row));
  }
  out["elements"] = std::move(elements);
  out["matrix"] = std::move(matrix);
  return emit(config, out);
}

int run_oracle(const run_config& config) {
  const cok::json input = load_input(config);
  cok::lin_order order = cok::lin_order_from_json(
      input.contains("order") ? input.at("order") : input);
  cok::json chains = cok::json::array();
  long long count = 0;
  try {
    cok::enumerate_chains(order, config.oracle_bound,
                          [&](const cok::equiv_chain& chain) {
                            ++count;
                            chains.push_back(cok::to_json(chain));
                          });
  } catch (const cok::error& e) {
    return emit_failure(config, e.what());
  }
  cok::json out;
  out["carrier_size"] = order.size();
  out["chain_count"] = count;
  out["chains"] = std::move(chains);
  return emit(config, out);
}

int run_verify(const run_config& config) {
  cok::verify_options options;
  options.seed = config.seed;
  if (!config.input_path.empty()) {
    const cok::json input = load_input(config);
    if (input.contains("quick")) options.quick = input.at("quick").get<bool>();
  }
  const auto suites = cok::run_all_suites(options);
  cok::json report;
  report["seed"] = options.seed;
  report["quick"] = options.quick;
  cok::json entries = cok::json::array();
  bool all_passed = true;
  long long failures = 0;
  for (const auto& suite : suites) {
    cok::json entry;
    entry["name"] = suite.name;
    entry["cases"] = suite.cases;
    entry["failures"] = suite.failures;
    cok::json notes = cok::json::array();
    for (const auto& note : suite.notes) notes.push_back(note);
    entry["notes"] = std::move(notes);
    entry["passed"] = suite.passed();
    entries.push_back(std::move(entry));
    all_passed = all_passed && suite.passed();
    failures += suite.failures;
  }
  report["suites"] = std::move(entries);
  report["all_passed"] = all_passed;
  if (!all_passed) {
    report["failure"] = std::to_string(failures) + " property failures";
    emit(config, report);
    return exit_domain_failure;
  }
  return emit(config, report);
}

int run_generate(const run_config& config) {
  const cok::json input = load_input(config);
  if (!input.contains("kind"))
    cok::fail(cok::errc::parse_error, "generate input needs a \"kind\" field");
  const std::string kind = input.at("kind").get<std::string>();
  const int count = int_field_or(input, "count", 1);
  if (count < 1) cok::fail(cok::errc::parse_error, "count must be positive");
  const int size = int_field_or(input, "size", 6);
  if (size < 1) cok::fail(cok::errc::parse_error, "size must be positive");

  cok::rng gen(config.seed);
  cok::json instances = cok::json::array();
  for (int i = 0; i < count; ++i) {
    if (kind == "order") {
      instances.push_back(cok::to_json(cok::random_order(gen, size)));
    } else if (kind == "chain") {
      cok::lin_order base = cok::random_order(gen, size);
      auto levels = cok::random_comparable_chain(gen, base,
                                                 int_field_or(input, "max_len", 3));
      cok::json entry;
      entry["order"] = cok::to_json(base);
      entry["chain"] = cok::to_json(cok::equiv_chain::from_levels(std::move(levels)));
      instances.push_back(std::move(entry));
    } else if (kind == "function" || kind == "decomposable_function") {
      const int domain_n = int_field_or(input, "domain_size", size);
      const int codomain_n = int_field_or(input, "codomain_size", size);
      if (domain_n < 1 || codomain_n < 1)
        cok::fail(cok::errc::parse_error, "domain and codomain sizes must be positive");
      instances.push_back(cok::to_json(
          kind == "function" ? cok::random_fn(gen, domain_n, codomain_n)
                             : cok::random_decomposable_fn(gen, domain_n, codomain_n)));
    } else if (kind == "family") {
      instances.push_back(cok::to_json(cok::random_intersecting_family(
          gen, size, int_field_or(input, "family_size", 5),
          int_field_or(input, "component_bound", 2))));
    } else if (kind == "block_order") {
      instances.push_back(cok::to_json(cok::random_block_order(
          gen, int_field_or(input, "max_blocks", 6),
          int_field_or(input, "max_elements", 20),
          int_field_or(input, "max_tags", 3))));
    } else if (kind == "weighted_chain") {
      instances.push_back(cok::to_json(cok::random_weighted_chain(gen, size)));
    } else {
      cok::fail(cok::errc::parse_error, "unknown generate kind: " + kind);
    }
  }
  cok::json out;
  out["seed"] = config.seed;
  out["kind"] = kind;
  out["instances"] = std::move(instances);
  return emit(config, out);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Nested convex-block-reversal order toolkit"};
  app.require_subcommand(1);
  app.fallthrough();

  run_config config;
  if (const char* env_seed = std::getenv("CONVEX_ORDER_KIT_SEED")) {
    try {
      config.seed = std::stoull(env_seed);
    } catch (const std::exception&) {
      std::cerr << "CONVEX_ORDER_KIT_SEED is not a valid integer\n";
      return exit_input_error;
    }
  }
  app.add_option("--seed", config.seed, "Generator seed (env CONVEX_ORDER_KIT_SEED)");
  app.add_option("--oracle-bound", config.oracle_bound,
                 "Carrier-size cap for exhaustive enumeration");
  app.add_flag("--force", config.force, "Allow an oracle bound above 8");
  app.add_option("--out", config.output_path, "Write the report to a file");

  struct subcommand {
    const char* name;
    const char* description;
    int (*run)(const run_config&);
    bool needs_input;
  };
  const std::vector<subcommand> subcommands = {
      {"decompose", "Chain decomposition between two orders", run_decompose, true},
      {"monotone", "Monotonicity decomposition of a function", run_monotone, true},
      {"piecewise", "Piecewise monotone decomposition", run_piecewise, true},
      {"components", "Convex components and region classification", run_components, true},
      {"helly", "Consistent subfamily extraction", run_helly, true},
      {"simulate", "Block-order structure verification", run_simulate, true},
      {"ultrametric", "Distances of a weighted chain", run_ultrametric, true},
      {"oracle", "Exhaustive chain enumeration", run_oracle, true},
      {"verify", "Invariant suites over random instances", run_verify, false},
      {"generate", "Reproducible random instances", run_generate, true},
  };
  int status = exit_ok;
  for (const auto& sub : subcommands) {
    CLI::App* cmd = app.add_subcommand(sub.name, sub.description);
    auto* input = cmd->add_option("input", config.input_path, "Input JSON file");
    if (sub.needs_input) input->required();
    cmd->callback([&config, &sub, &status]() {
      if (config.oracle_bound > 8 && !config.force) {
        std::cerr << "oracle bound " << config.oracle_bound
                  << " exceeds 8; pass --force to confirm\n";
        status = exit_input_error;
        return;
      }
      try {
        status = sub.run(config);
      } catch (const std::exception& e) {
        // Anything thrown before the operation ran is an input problem.
        std::cerr << e.what() << "\n";
        status = exit_input_error;
      }
    });
  }

  CLI11_PARSE(app, argc, argv);
  return status;
}
