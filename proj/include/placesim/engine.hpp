#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "placesim/backends.hpp"
#include "placesim/placer.hpp"
#include "placesim/scenario.hpp"
#include "placesim/workload.hpp"

namespace placesim {

// Simulation event. Events are processed in (time, seq) lexicographic order;
// seq is the insertion counter, unique per run.
struct Event {
  enum class Kind { Arrival, ServiceStart, Completion, Timeout };

  double time = 0.0;
  std::uint64_t seq = 0;
  Kind kind = Kind::Arrival;
  std::uint64_t request_id = 0;
  PlatformKind platform = PlatformKind::Flask;
};

// Which placement policy drives the run.
struct PlacerChoice {
  bool is_dynamic = true;
  PlatformKind target = PlatformKind::Flask;  // used when !is_dynamic

  static PlacerChoice dynamic() { return PlacerChoice{true, PlatformKind::Flask}; }
  static PlacerChoice fixed(PlatformKind target) { return PlacerChoice{false, target}; }

  std::string name() const { return is_dynamic ? "dynamic" : to_string(target); }
};

// State exposed to the audit hook after every processed event.
struct AuditSnapshot {
  double clock = 0.0;
  std::uint32_t flask_in_service = 0;
  std::uint32_t flask_backlog = 0;
  std::uint32_t docker_in_service = 0;
  std::uint32_t docker_backlog = 0;
  std::uint32_t serverless_in_flight = 0;
};

using AuditHook = std::function<void(const AuditSnapshot&)>;

struct EngineResult {
  std::vector<Request> requests;              // the arrival stream, id order
  std::vector<PlacementDecision> decisions;   // one per request, id order
  std::vector<ServiceOutcome> outcomes;       // one per request, id order
};

// Queue-headroom availability fed to the dynamic placer.
AvailabilityView availability_snapshot(const QueuedBackendState& flask,
                                       const QueuedBackendState& docker);

// Drains the given arrival stream through the event loop. Arrivals must have
// ids 0..n-1 in order and non-decreasing times. Deterministic: identical
// inputs produce identical logs. Internal invariant violations raise
// std::logic_error; they are bugs, not data.
EngineResult run_with_arrivals(std::vector<Request> arrivals, const ScenarioConfig& cfg,
                               PlacerChoice choice, const AuditHook& audit = {});

// Generates the arrival stream from cfg.phases with cfg.seed, then runs it.
EngineResult run_simulation(const ScenarioConfig& cfg, PlacerChoice choice,
                            const AuditHook& audit = {});

}  // namespace placesim
