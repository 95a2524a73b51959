// Acceptance runner for the ten contract criteria. Prints one PASS/FAIL line
// per criterion with case counts and elapsed time against the runtime budget,
// and exits with the number of failed criteria. The final criterion drives
// the command-line tool on the canonical example inputs; its binary path and
// the examples directory come from argv[1] / argv[2] or the COK_CLI /
// COK_EXAMPLES_DIR environment variables.
#include <sys/wait.h>
#include <unistd.h>

#include <chrono>
#include <cstdint>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <sstream>
#include <string>
#include <vector>

#include "cok/verify.hpp"

namespace {

struct outcome {
  bool ok = true;
  long long cases = 0;
  std::vector<std::string> notes;
};

int criteria_failed = 0;

void run_criterion(int number, const std::string& name, double budget_seconds,
                   const std::function<outcome()>& body) {
  const auto start = std::chrono::steady_clock::now();
  outcome result = body();
  const double elapsed =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  const bool in_budget = elapsed < budget_seconds;
  const bool passed = result.ok && in_budget;
  if (!passed) ++criteria_failed;
  std::printf("[%2d/10] %s %s -- %lld cases in %.3fs (budget %.0fs)\n", number,
              passed ? "PASS" : "FAIL", name.c_str(), result.cases, elapsed,
              budget_seconds);
  if (!in_budget) std::printf("        over budget\n");
  for (const auto& note : result.notes) std::printf("        %s\n", note.c_str());
  std::fflush(stdout);
}

outcome from_suites(std::initializer_list<cok::suite_result> suites) {
  outcome result;
  for (const auto& suite : suites) {
    result.cases += suite.cases;
    result.ok = result.ok && suite.passed();
    for (const auto& note : suite.notes) {
      if (result.notes.size() >= 8) break;
      result.notes.push_back(suite.name + ": " + note);
    }
  }
  return result;
}

std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

// Runs the command with stdout captured; returns the exit code, or -1 when
// the process did not terminate normally.
int run_captured(const std::string& command, const std::filesystem::path& stdout_path) {
  const std::string full = command + " > \"" + stdout_path.string() + "\" 2> /dev/null";
  const int status = std::system(full.c_str());
  if (status == -1 || !WIFEXITED(status)) return -1;
  return WEXITSTATUS(status);
}

outcome cli_determinism(const std::string& cli, const std::filesystem::path& examples) {
  outcome result;
  struct cli_case {
    const char* label;
    const char* flags;
    const char* subcommand;
    const char* input;
    int expected_exit;
  };
  const std::vector<cli_case> cases = {
      {"decompose", "--seed 42", "decompose", "decompose.json", 0},
      {"decompose-unreachable", "--seed 42", "decompose", "decompose_unreachable.json", 2},
      {"malformed-input", "--seed 42", "decompose", "malformed.json", 1},
      {"monotone", "--seed 42", "monotone", "monotone.json", 0},
      {"piecewise", "--seed 42", "piecewise", "piecewise.json", 0},
      {"components", "--seed 42", "components", "components.json", 0},
      {"helly", "--seed 42", "helly", "helly.json", 0},
      {"simulate", "--seed 42", "simulate", "simulate.json", 0},
      {"ultrametric", "--seed 42", "ultrametric", "ultrametric.json", 0},
      {"oracle", "--seed 42", "oracle", "oracle.json", 0},
      {"verify", "--seed 42", "verify", "verify.json", 0},
      {"generate", "--seed 7", "generate", "generate.json", 0},
  };

  const auto scratch = std::filesystem::temp_directory_path();
  const std::string pid = std::to_string(static_cast<long long>(::getpid()));
  const auto first_out = scratch / ("cok_accept_" + pid + "_a.json");
  const auto second_out = scratch / ("cok_accept_" + pid + "_b.json");

  for (const auto& test : cases) {
    ++result.cases;
    const std::filesystem::path input = examples / test.input;
    if (!std::filesystem::exists(input)) {
      result.ok = false;
      result.notes.push_back(std::string(test.label) + ": missing input " + input.string());
      continue;
    }
    const std::string command = "\"" + cli + "\" " + test.flags + " " + test.subcommand +
                                " \"" + input.string() + "\"";
    const int first_exit = run_captured(command, first_out);
    const int second_exit = run_captured(command, second_out);
    if (first_exit != test.expected_exit || second_exit != test.expected_exit) {
      result.ok = false;
      result.notes.push_back(std::string(test.label) + ": exit " +
                             std::to_string(first_exit) + "/" + std::to_string(second_exit) +
                             ", expected " + std::to_string(test.expected_exit));
      continue;
    }
    const std::string first = read_file(first_out);
    const std::string second = read_file(second_out);
    if (first != second) {
      result.ok = false;
      result.notes.push_back(std::string(test.label) + ": reruns differ by " +
                             std::to_string(first.size()) + " vs " +
                             std::to_string(second.size()) + " bytes");
      continue;
    }
    if (test.expected_exit == 0 && first.empty()) {
      result.ok = false;
      result.notes.push_back(std::string(test.label) + ": empty report");
    }
  }
  std::error_code ignore;
  std::filesystem::remove(first_out, ignore);
  std::filesystem::remove(second_out, ignore);
  return result;
}

}  // namespace

int main(int argc, char** argv) {
  const std::uint64_t seed = 42;

  run_criterion(1, "involution: applying a chain twice restores the base order", 5.0,
                [&] { return from_suites({cok::run_involution_suite(seed, 1000, 12)}); });

  run_criterion(2, "permutation invariance: comparable chains apply in any order", 10.0,
                [&] {
                  return from_suites(
                      {cok::run_permutation_invariance_suite(seed + 1, 500, 10, 4)});
                });

  run_criterion(3, "injectivity of nested chains, exhaustive to six elements", 30.0,
                [&] { return from_suites({cok::run_injectivity_suite(6)}); });

  run_criterion(4, "decomposition completeness and round trips, exhaustive to seven",
                60.0, [&] {
                  return from_suites({cok::run_decompose_completeness_suite(7),
                                      cok::run_decompose_roundtrip_suite(seed + 2, 500, 10)});
                });

  run_criterion(5, "component growth bounded by three to the chain length", 20.0, [&] {
    return from_suites({cok::run_component_bound_suite(seed + 3, 7, 1000, 14)});
  });

  run_criterion(6, "monotone decompositions verify on 1000 random functions", 60.0,
                [&] {
                  return from_suites({cok::run_monotonicity_suite(seed + 4, 1000, 10, 10)});
                });

  run_criterion(7, "interval Helly core and subfamily extraction match the oracle",
                60.0,
                [&] { return from_suites({cok::run_helly_suite(seed + 5, 12, 400)}); });

  run_criterion(8, "block-order axioms, density, and sequence surgery", 30.0,
                [&] { return from_suites({cok::run_block_order_suite(seed + 6, 500)}); });

  run_criterion(9, "ultrametric axioms exact on 500 weighted chains", 10.0,
                [&] { return from_suites({cok::run_ultrametric_suite(seed + 7, 500)}); });

  const char* cli_arg = argc > 1 ? argv[1] : std::getenv("COK_CLI");
  const char* dir_arg = argc > 2 ? argv[2] : std::getenv("COK_EXAMPLES_DIR");
  run_criterion(10, "command-line determinism on every subcommand", 5.0, [&] {
    if (cli_arg == nullptr || dir_arg == nullptr) {
      outcome missing;
      missing.ok = false;
      missing.notes.push_back(
          "tool path or examples directory not provided (argv or COK_CLI/COK_EXAMPLES_DIR)");
      return missing;
    }
    return cli_determinism(cli_arg, dir_arg);
  });

  if (criteria_failed == 0)
    std::printf("all 10 acceptance criteria passed\n");
  else
    std::printf("%d acceptance criteria FAILED\n", criteria_failed);
  return criteria_failed;
}
