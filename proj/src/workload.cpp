#include "placesim/workload.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace placesim {

SizeDist SizeDist::constant(std::uint64_t bytes) {
  SizeDist d;
  d.kind = Kind::Constant;
  d.bytes = bytes;
  return d;
}

SizeDist SizeDist::uniform(std::uint64_t min_bytes, std::uint64_t max_bytes) {
  SizeDist d;
  d.kind = Kind::Uniform;
  d.min_bytes = min_bytes;
  d.max_bytes = max_bytes;
  return d;
}

std::uint64_t SizeDist::sample(SplitMix64& rng) const {
  if (kind == Kind::Constant) return bytes;
  return rng.next_in_range(min_bytes, max_bytes);
}

FrequencyWindow::FrequencyWindow(double window_s) : window_s_(window_s) {
  if (!(window_s > 0.0)) throw std::invalid_argument("frequency window length must be > 0");
}

void FrequencyWindow::record(double arrival_time) { stamps_.push_back(arrival_time); }

double FrequencyWindow::estimate(double now) {
  const double cutoff = now - window_s_;
  while (!stamps_.empty() && stamps_.front() <= cutoff) stamps_.pop_front();
  return static_cast<double>(stamps_.size()) / window_s_;
}

void validate_phases(const std::vector<Phase>& phases) {
  if (phases.empty()) throw std::invalid_argument("phases must be non-empty");
  for (std::size_t i = 0; i < phases.size(); ++i) {
    const Phase& p = phases[i];
    const std::string where = "phases[" + std::to_string(i) + "]";
    if (!(p.duration_s > 0.0)) throw std::invalid_argument(where + ".duration must be > 0");
    if (p.start_rate < 0.0) throw std::invalid_argument(where + ".start_rate must be >= 0");
    if (p.end_rate < 0.0) throw std::invalid_argument(where + ".end_rate must be >= 0");
    if (p.size_dist.kind == SizeDist::Kind::Constant) {
      if (p.size_dist.bytes == 0) throw std::invalid_argument(where + ".size_dist.bytes must be > 0");
    } else {
      if (p.size_dist.min_bytes == 0)
        throw std::invalid_argument(where + ".size_dist.min_bytes must be > 0");
      if (p.size_dist.min_bytes > p.size_dist.max_bytes)
        throw std::invalid_argument(where + ".size_dist requires min_bytes <= max_bytes");
    }
  }
}

namespace {

// Invert a*t + c*t^2 = k for the crossing inside [0, d]. The conjugate form
// 2k / (a + sqrt(a^2 + 4ck)) picks the correct root for rising, falling and
// constant ramps without cancellation.
double crossing_time(double a, double c, double k) {
  if (c == 0.0) return k / a;
  const double disc = a * a + 4.0 * c * k;
  return 2.0 * k / (a + std::sqrt(disc > 0.0 ? disc : 0.0));
}

}  // namespace

std::vector<Request> generate_arrivals(const std::vector<Phase>& phases, SplitMix64& rng) {
  validate_phases(phases);
  std::vector<Request> out;
  std::uint64_t id = 0;
  double phase_start = 0.0;
  for (const Phase& p : phases) {
    const double a = p.start_rate;
    const double c = (p.end_rate - p.start_rate) / (2.0 * p.duration_s);
    const double total = a * p.duration_s + c * p.duration_s * p.duration_s;
    const std::uint64_t count = total > 0.0 ? static_cast<std::uint64_t>(std::floor(total)) : 0;
    for (std::uint64_t k = 1; k <= count; ++k) {
      double t = crossing_time(a, c, static_cast<double>(k));
      if (t > p.duration_s) t = p.duration_s;  // roundoff guard at the phase edge
      out.push_back(Request{id++, phase_start + t, p.size_dist.sample(rng)});
    }
    phase_start += p.duration_s;
  }
  return out;
}

}  // namespace placesim
