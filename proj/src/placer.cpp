#include "placesim/placer.hpp"

#include <stdexcept>

namespace placesim {

const char* to_string(PlatformKind kind) {
  switch (kind) {
    case PlatformKind::Flask: return "flask";
    case PlatformKind::Docker: return "docker";
    case PlatformKind::Serverless: return "serverless";
  }
  return "?";
}

PlatformKind platform_from_string(const std::string& name) {
  if (name == "flask") return PlatformKind::Flask;
  if (name == "docker") return PlatformKind::Docker;
  if (name == "serverless") return PlatformKind::Serverless;
  throw std::invalid_argument("unknown platform: " + name);
}

PlatformKind place_dynamic_platform(double f_t, std::uint64_t data_size,
                                    const Thresholds& thresholds,
                                    const AvailabilityView& avail) {
  if (f_t > thresholds.frequency_threshold && data_size < thresholds.size_threshold)
    return PlatformKind::Serverless;
  if (data_size > thresholds.size_threshold) return PlatformKind::Docker;
  if (avail.flask_has_capacity) return PlatformKind::Flask;
  if (avail.docker_has_capacity) return PlatformKind::Docker;
  return PlatformKind::Serverless;
}

PlacementDecision place_dynamic(const Request& request, double f_t,
                                const Thresholds& thresholds,
                                const AvailabilityView& avail) {
  return PlacementDecision{request.id,
                           place_dynamic_platform(f_t, request.data_size, thresholds, avail),
                           request.arrival_time};
}

PlacementDecision place_static(const Request& request, PlatformKind target) {
  return PlacementDecision{request.id, target, request.arrival_time};
}

}  // namespace placesim
