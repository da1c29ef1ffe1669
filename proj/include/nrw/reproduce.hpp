#pragma once

#include <chrono>
#include <iosfwd>
#include <string>
#include <vector>

namespace nrw::reproduce {

struct Config {
  std::size_t test_len = 8;
  std::size_t prefix_len = 10000;
  int threads = 0;
  bool no_prune = false;
};

struct ClaimResult {
  std::string name;
  bool pass = false;
  std::string detail;
  std::chrono::milliseconds elapsed{0};
};

// Names of all reproduction claims, in execution order.
std::vector<std::string> claim_names();

// Runs one claim by name; throws on unknown names.
ClaimResult run_claim(const std::string& name, const Config& cfg = {});

// Runs every claim, streaming one result line per claim to `progress` when
// given. Two bundled fixture checks are recorded as known-failing (see the
// README); everything else is expected to pass.
std::vector<ClaimResult> run_all(const Config& cfg = {}, std::ostream* progress = nullptr);

}  // namespace nrw::reproduce
