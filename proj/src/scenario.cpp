#include "placesim/scenario.hpp"

namespace placesim {

namespace {

void fail(const std::string& path, const std::string& what) {
  throw ScenarioError(path + " " + what);
}

void check_positive(double v, const std::string& path) {
  if (!(v > 0.0)) fail(path, "must be > 0");
}

void check_non_negative(double v, const std::string& path) {
  if (v < 0.0) fail(path, "must be >= 0");
}

}  // namespace

void validate_scenario(const ScenarioConfig& cfg) {
  check_positive(cfg.window_s, "window_s");
  check_positive(cfg.thresholds.frequency_threshold, "thresholds.frequency_threshold");
  if (cfg.thresholds.size_threshold == 0) fail("thresholds.size_threshold", "must be > 0");

  if (cfg.phases.empty()) throw ScenarioError("phases must be non-empty");
  for (std::size_t i = 0; i < cfg.phases.size(); ++i) {
    const Phase& p = cfg.phases[i];
    const std::string where = "phases[" + std::to_string(i) + "]";
    check_positive(p.duration_s, where + ".duration");
    check_non_negative(p.start_rate, where + ".start_rate");
    check_non_negative(p.end_rate, where + ".end_rate");
    if (p.size_dist.kind == SizeDist::Kind::Constant) {
      if (p.size_dist.bytes == 0) fail(where + ".size_dist.bytes", "must be > 0");
    } else {
      if (p.size_dist.min_bytes == 0) fail(where + ".size_dist.min_bytes", "must be > 0");
      if (p.size_dist.min_bytes > p.size_dist.max_bytes)
        fail(where + ".size_dist.max_bytes", "must be >= min_bytes");
    }
  }

  if (cfg.flask.workers == 0) fail("flask.workers", "must be >= 1");
  check_positive(cfg.flask.base_service, "flask.base_service");
  check_non_negative(cfg.flask.per_byte, "flask.per_byte");
  check_positive(cfg.flask.timeout, "flask.timeout");

  if (cfg.docker.containers == 0) fail("docker.containers", "must be >= 1");
  check_non_negative(cfg.docker.cold_start, "docker.cold_start");
  check_non_negative(cfg.docker.keep_warm, "docker.keep_warm");
  check_positive(cfg.docker.base_service, "docker.base_service");
  check_non_negative(cfg.docker.per_byte, "docker.per_byte");
  check_positive(cfg.docker.timeout, "docker.timeout");

  if (cfg.serverless.concurrency_limit == 0) fail("serverless.concurrency_limit", "must be >= 1");
  check_non_negative(cfg.serverless.cold_start, "serverless.cold_start");
  check_non_negative(cfg.serverless.keep_warm, "serverless.keep_warm");
  check_positive(cfg.serverless.memory_mb, "serverless.memory_mb");
  check_positive(cfg.serverless.ref_memory_mb, "serverless.ref_memory_mb");
  check_positive(cfg.serverless.base_service, "serverless.base_service");
  check_non_negative(cfg.serverless.per_byte, "serverless.per_byte");
  check_positive(cfg.serverless.timeout, "serverless.timeout");
}

}  // namespace placesim
