#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "torfold/json_io.hpp"

namespace torfold {

struct SuiteConfig {
  std::string suite;
  int n = 3;
  int depth = 3;
  int trials = 100;
  std::uint64_t seed = 42;
  std::optional<std::pair<int, int>> window;
  std::optional<IceQuiver> cycle;
  std::optional<PeriodicQuiver> periodic;
  bool timings = false;
};

struct SuiteResult {
  bool passed = false;
  io::json report;
  std::string summary;
};

const std::vector<std::string>& suite_names();

/// Throws InputError for unknown suites or out-of-range budgets.
SuiteResult run_suite(const SuiteConfig& cfg);

/// Ice quiver with at most max_vertices vertices, about a third frozen.
IceQuiver random_ice_quiver(std::uint64_t seed, int max_vertices = 12, int max_mult = 3);
/// Orbit-mutation sequence over the mutable sites, no immediate repeats.
std::vector<int> random_orbit_sequence(const PeriodicQuiver& pq, std::uint64_t seed, int max_length);

}  // namespace torfold
