#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "placesim/backends.hpp"
#include "placesim/workload.hpp"

namespace placesim {

// Scenario or CLI input problem; the message names the offending field path.
struct ScenarioError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// One declarative document describing a full run: workload, thresholds and
// all three platform models.
struct ScenarioConfig {
  std::string name;
  std::uint64_t seed = 0;
  double window_s = 1.0;
  Thresholds thresholds;
  std::vector<Phase> phases;
  FlaskModel flask;
  DockerModel docker;
  ServerlessModel serverless;

  bool operator==(const ScenarioConfig&) const = default;
};

// Throws ScenarioError naming the field path (e.g. "thresholds.size_threshold")
// when any invariant is violated.
void validate_scenario(const ScenarioConfig& cfg);

}  // namespace placesim
