#pragma once

#include <cstdint>
#include <optional>
#include <ostream>
#include <string>

#include "rhoc/sfm.hpp"

namespace rhoc::cli {

struct RunConfig {
  std::string command;  // rho | pit-r2 | pit-rk | rigidity | rand-rank | verify
  std::string input;
  std::string c = "1";
  std::optional<std::string> field;  // "q", "fp:<p>" or "<p>"
  SfmBackend backend = SfmBackend::automatic;
  std::uint64_t seed = 0;
  std::size_t trials = 5;
  std::uint64_t prime = kDefaultPrime;
  std::string output = "json";  // json | text
  std::size_t dim = 2;            // rigidity dimension t
  bool force_randomized = false;
  std::string suite = "all";
};

// Exit codes: 0 success, 1 input error, 2 internal invariant violation
// (including any failed verification check).
int run(const RunConfig& config, std::ostream& out, std::ostream& err);

// Parses argv into a config and runs it.
int main(int argc, char** argv, std::ostream& out, std::ostream& err);

}  // namespace rhoc::cli
