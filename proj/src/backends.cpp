#include "placesim/backends.hpp"

#include <algorithm>

namespace placesim {

const char* to_string(ServiceStatus status) {
  switch (status) {
    case ServiceStatus::Success: return "success";
    case ServiceStatus::TimeoutFailure: return "timeout_failure";
    case ServiceStatus::ThrottleFailure: return "throttle_failure";
    case ServiceStatus::QueueRejectFailure: return "queue_reject_failure";
  }
  return "?";
}

double service_time_flask(const FlaskModel& model, std::uint64_t data_size) {
  return model.base_service + model.per_byte * static_cast<double>(data_size);
}

double service_time_docker(const DockerModel& model, std::uint64_t data_size, bool is_cold) {
  double t = model.base_service + model.per_byte * static_cast<double>(data_size);
  if (is_cold) t += model.cold_start;
  return t;
}

double service_time_serverless(const ServerlessModel& model, std::uint64_t data_size,
                               bool is_cold) {
  double t = (model.base_service + model.per_byte * static_cast<double>(data_size)) *
             (model.ref_memory_mb / model.memory_mb);
  if (is_cold) t += model.cold_start;
  return t;
}

bool QueuedBackendState::remove_waiting(std::uint64_t request_id) {
  auto it = std::find(waiting.begin(), waiting.end(), request_id);
  if (it == waiting.end()) return false;
  waiting.erase(it);
  return true;
}

}  // namespace placesim
