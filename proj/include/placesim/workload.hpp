#pragma once

#include <cstdint>
#include <deque>
#include <vector>

#include "placesim/rng.hpp"

namespace placesim {

struct Request {
  std::uint64_t id = 0;
  double arrival_time = 0.0;    // seconds on the simulation clock
  std::uint64_t data_size = 0;  // bytes, always > 0

  bool operator==(const Request&) const = default;
};

// Payload-size distribution for one phase. Constant never consumes random
// numbers; Uniform consumes exactly one draw per request.
struct SizeDist {
  enum class Kind { Constant, Uniform };

  Kind kind = Kind::Constant;
  std::uint64_t bytes = 1;      // Constant
  std::uint64_t min_bytes = 1;  // Uniform, inclusive bounds
  std::uint64_t max_bytes = 1;

  static SizeDist constant(std::uint64_t bytes);
  static SizeDist uniform(std::uint64_t min_bytes, std::uint64_t max_bytes);

  std::uint64_t sample(SplitMix64& rng) const;

  bool operator==(const SizeDist&) const = default;
};

// One segment of the load ramp: the arrival rate moves linearly from
// start_rate to end_rate over duration_s.
struct Phase {
  double duration_s = 0.0;
  double start_rate = 0.0;  // requests/second
  double end_rate = 0.0;    // requests/second
  SizeDist size_dist;

  bool operator==(const Phase&) const = default;
};

// Trailing half-open window (now - window_s, now] over arrival timestamps;
// estimate() is count-in-window / window_s.
class FrequencyWindow {
 public:
  explicit FrequencyWindow(double window_s);

  // Arrival times must be fed in non-decreasing order.
  void record(double arrival_time);

  // Prunes timestamps at or before now - window_s, then returns the rate.
  double estimate(double now);

  double window_seconds() const { return window_s_; }
  std::size_t size() const { return stamps_.size(); }

 private:
  double window_s_;
  std::deque<double> stamps_;
};

// Throws std::invalid_argument naming the offending phase when the list is
// empty or any phase violates its invariants.
void validate_phases(const std::vector<Phase>& phases);

// Deterministic arrival stream. Within a phase the cumulative rate integral
// is inverted exactly: arrival k sits where the integral crosses k. Phases
// concatenate with the integral resetting at each boundary. Pure function of
// (phases, rng state); ids start at 0 and increase in arrival order.
std::vector<Request> generate_arrivals(const std::vector<Phase>& phases, SplitMix64& rng);

}  // namespace placesim
