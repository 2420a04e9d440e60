#pragma once

#include <cstdint>
#include <deque>
#include <set>

#include "placesim/placer.hpp"

namespace placesim {

// Single local web server: `workers` threads, FIFO queue of max_queue slots.
struct FlaskModel {
  std::uint32_t workers = 1;
  double base_service = 0.1094;  // seconds
  double per_byte = 0.0;         // seconds/byte
  double timeout = 50.0;         // seconds
  std::uint32_t max_queue = 0;

  bool operator==(const FlaskModel&) const = default;
};

// Container pool with activation overhead on cold dispatch.
struct DockerModel {
  std::uint32_t containers = 1;
  double cold_start = 0.0;  // seconds added when the container is cold
  double keep_warm = 0.0;   // seconds a container stays warm after finishing
  double base_service = 1.0;
  double per_byte = 0.0;
  double timeout = 50.0;
  std::uint32_t max_queue = 0;

  bool operator==(const DockerModel&) const = default;
};

// On-demand platform: no queue, hard concurrency limit, service time scaled
// by provisioned memory (more memory, faster service).
struct ServerlessModel {
  std::uint32_t concurrency_limit = 1;
  double cold_start = 0.0;
  double keep_warm = 0.0;
  double memory_mb = 3072.0;
  double ref_memory_mb = 3072.0;  // memory at which base_service was measured
  double base_service = 0.35;
  double per_byte = 0.0;
  double timeout = 50.0;

  bool operator==(const ServerlessModel&) const = default;
};

enum class ServiceStatus { Success, TimeoutFailure, ThrottleFailure, QueueRejectFailure };

const char* to_string(ServiceStatus status);

struct ServiceOutcome {
  std::uint64_t request_id = 0;
  PlatformKind platform = PlatformKind::Flask;
  double dispatch_time = 0.0;  // admission instant (failure instant for rejects)
  double end_time = 0.0;
  ServiceStatus status = ServiceStatus::Success;

  bool operator==(const ServiceOutcome&) const = default;
};

double service_time_flask(const FlaskModel& model, std::uint64_t data_size);
double service_time_docker(const DockerModel& model, std::uint64_t data_size, bool is_cold);
double service_time_serverless(const ServerlessModel& model, std::uint64_t data_size, bool is_cold);

enum class AdmitResult { Enqueued, QueueReject, Throttle };

// Idle, previously-used execution units keyed by the instant their warmth
// lapses. A unit is warm through warm_until inclusive, so keep_warm = 0
// still allows same-instant reuse.
class WarmPool {
 public:
  void release(double now, double keep_warm) { warm_until_.insert(now + keep_warm); }

  // Consumes the most recently warmed unit if one is still warm at `now`.
  bool take_warm(double now) {
    prune(now);
    if (warm_until_.empty()) return false;
    warm_until_.erase(std::prev(warm_until_.end()));
    return true;
  }

  void prune(double now) {
    while (!warm_until_.empty() && *warm_until_.begin() < now)
      warm_until_.erase(warm_until_.begin());
  }

  std::size_t size() const { return warm_until_.size(); }

 private:
  std::multiset<double> warm_until_;
};

// Shared state machine for the two queued platforms (Flask workers, Docker
// containers): `units` parallel servers ahead of a bounded FIFO queue.
struct QueuedBackendState {
  std::uint32_t units = 1;
  std::uint32_t max_queue = 0;
  std::deque<std::uint64_t> waiting;
  std::uint32_t in_service = 0;
  WarmPool warm;  // Docker only; Flask never consults it

  std::uint32_t backlog() const {
    return static_cast<std::uint32_t>(waiting.size()) + in_service;
  }
  // Headroom test shared by admission and the placer's availability view.
  bool has_capacity() const { return backlog() < units + max_queue; }
  bool unit_free() const { return in_service < units; }

  AdmitResult admit(std::uint64_t request_id) {
    if (!has_capacity()) return AdmitResult::QueueReject;
    waiting.push_back(request_id);
    return AdmitResult::Enqueued;
  }

  // Removes a waiting entry (timeout while queued). Returns false if absent.
  bool remove_waiting(std::uint64_t request_id);
};

struct ServerlessState {
  std::uint32_t concurrency_limit = 1;
  std::uint32_t in_flight = 0;
  WarmPool warm;

  AdmitResult admit() {
    if (in_flight >= concurrency_limit) return AdmitResult::Throttle;
    ++in_flight;
    return AdmitResult::Enqueued;
  }
};

}  // namespace placesim
