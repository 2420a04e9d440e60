#pragma once

#include <cstdint>
#include <string>

#include "placesim/workload.hpp"

namespace placesim {

enum class PlatformKind { Flask, Docker, Serverless };

const char* to_string(PlatformKind kind);
// Parses "flask" | "docker" | "serverless"; throws std::invalid_argument otherwise.
PlatformKind platform_from_string(const std::string& name);

struct Thresholds {
  double frequency_threshold = 1.0;    // F, requests/second, > 0
  std::uint64_t size_threshold = 1;    // D, bytes, > 0

  bool operator==(const Thresholds&) const = default;
};

// Capacity snapshot at one instant; no history.
struct AvailabilityView {
  bool flask_has_capacity = true;
  bool docker_has_capacity = true;

  bool operator==(const AvailabilityView&) const = default;
};

struct PlacementDecision {
  std::uint64_t request_id = 0;
  PlatformKind platform = PlatformKind::Flask;
  double decided_at = 0.0;  // seconds

  bool operator==(const PlacementDecision&) const = default;
};

// Threshold-based dynamic placement, evaluated top-down with strict
// inequalities:
//   1. f_t > F and size < D        -> Serverless
//   2. size > D                    -> Docker
//   3. flask has capacity          -> Flask
//   4. docker has capacity         -> Docker
//   5. otherwise                   -> Serverless
// Total: every input yields exactly one platform.
PlatformKind place_dynamic_platform(double f_t, std::uint64_t data_size,
                                    const Thresholds& thresholds,
                                    const AvailabilityView& avail);

PlacementDecision place_dynamic(const Request& request, double f_t,
                                const Thresholds& thresholds,
                                const AvailabilityView& avail);

// Fixed-target baseline.
PlacementDecision place_static(const Request& request, PlatformKind target);

}  // namespace placesim
