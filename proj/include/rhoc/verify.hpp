#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <string_view>
#include <vector>

// Named property checks grouped into suites, one suite per module plus the
// "acceptance" suite. Every check is deterministic given the master seed.
namespace rhoc::verify {

struct CheckResult {
  std::string suite;
  std::string name;
  bool passed = false;
  std::string detail;  // counts on success, first counterexample on failure
  double seconds = 0;
};

struct Check {
  std::string suite;
  std::string name;
  // Returns a summary; throws on failure.
  std::function<std::string(std::uint64_t seed)> body;
};

const std::vector<Check>& registry();
// Module suites in dependency order, then "acceptance".
std::vector<std::string> suite_names();

CheckResult run_check(const Check& check, std::uint64_t master_seed);
// "all" runs every suite. Throws std::invalid_argument for an unknown suite.
std::vector<CheckResult> run_suite(std::string_view suite, std::uint64_t master_seed,
                                   const std::function<void(const CheckResult&)>& on_result = {});

}  // namespace rhoc::verify
