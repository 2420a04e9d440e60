#include "placesim/engine.hpp"

#include <queue>
#include <stdexcept>

namespace placesim {

AvailabilityView availability_snapshot(const QueuedBackendState& flask,
                                       const QueuedBackendState& docker) {
  return AvailabilityView{flask.has_capacity(), docker.has_capacity()};
}

namespace {

struct EventAfter {
  bool operator()(const Event& a, const Event& b) const {
    if (a.time != b.time) return a.time > b.time;
    return a.seq > b.seq;
  }
};

enum class Stage { Waiting, InService, Done };

struct RequestRecord {
  PlatformKind platform = PlatformKind::Flask;
  double dispatch_time = 0.0;    // admission instant
  double completion_time = 0.0;  // scheduled completion, valid in service
  Stage stage = Stage::Waiting;
  bool terminal = false;
};

class Simulation {
 public:
  Simulation(std::vector<Request> arrivals, const ScenarioConfig& cfg, PlacerChoice choice,
             const AuditHook& audit)
      : cfg_(cfg), choice_(choice), audit_(audit), window_(cfg.window_s),
        requests_(std::move(arrivals)) {
    flask_.units = cfg.flask.workers;
    flask_.max_queue = cfg.flask.max_queue;
    docker_.units = cfg.docker.containers;
    docker_.max_queue = cfg.docker.max_queue;
    serverless_.concurrency_limit = cfg.serverless.concurrency_limit;
  }

  EngineResult run() {
    check_arrival_stream();
    records_.resize(requests_.size());
    outcomes_.resize(requests_.size());
    decisions_.reserve(requests_.size());

    for (const Request& r : requests_)
      push(Event{r.arrival_time, next_seq_++, Event::Kind::Arrival, r.id, PlatformKind::Flask});

    while (!queue_.empty()) {
      Event ev = queue_.top();
      queue_.pop();
      if (ev.time < clock_) throw std::logic_error("engine: clock moved backwards");
      clock_ = ev.time;
      dispatch_event(ev);
      if (audit_) audit_(snapshot());
    }

    finish_checks();
    return EngineResult{std::move(requests_), std::move(decisions_), std::move(outcomes_)};
  }

 private:
  void check_arrival_stream() const {
    double prev_time = 0.0;
    for (std::size_t i = 0; i < requests_.size(); ++i) {
      if (requests_[i].id != i)
        throw std::invalid_argument("engine: arrival ids must be 0..n-1 in order");
      if (requests_[i].arrival_time < prev_time || requests_[i].arrival_time < 0.0)
        throw std::invalid_argument("engine: arrival times must be non-decreasing and >= 0");
      if (requests_[i].data_size == 0)
        throw std::invalid_argument("engine: data_size must be > 0");
      prev_time = requests_[i].arrival_time;
    }
  }

  void push(Event ev) { queue_.push(ev); }

  AuditSnapshot snapshot() const {
    return AuditSnapshot{clock_,
                         flask_.in_service, flask_.backlog(),
                         docker_.in_service, docker_.backlog(),
                         serverless_.in_flight};
  }

  void dispatch_event(const Event& ev) {
    switch (ev.kind) {
      case Event::Kind::Arrival: on_arrival(ev); break;
      case Event::Kind::ServiceStart: on_service_start(ev); break;
      case Event::Kind::Completion: on_completion(ev); break;
      case Event::Kind::Timeout: on_timeout(ev); break;
    }
  }

  void on_arrival(const Event& ev) {
    const Request& req = requests_[ev.request_id];
    const double now = ev.time;

    // The arriving request counts toward its own frequency estimate.
    window_.record(now);
    const double f_t = window_.estimate(now);

    PlacementDecision decision =
        choice_.is_dynamic
            ? place_dynamic(req, f_t, cfg_.thresholds, availability_snapshot(flask_, docker_))
            : place_static(req, choice_.target);
    decisions_.push_back(decision);

    RequestRecord& rec = records_[req.id];
    rec.platform = decision.platform;
    rec.dispatch_time = now;

    switch (decision.platform) {
      case PlatformKind::Flask:
        admit_queued(flask_, req.id, now, cfg_.flask.timeout, PlatformKind::Flask);
        break;
      case PlatformKind::Docker:
        admit_queued(docker_, req.id, now, cfg_.docker.timeout, PlatformKind::Docker);
        break;
      case PlatformKind::Serverless:
        if (serverless_.admit() == AdmitResult::Enqueued) {
          push(Event{now + cfg_.serverless.timeout, next_seq_++, Event::Kind::Timeout, req.id,
                     PlatformKind::Serverless});
          push(Event{now, next_seq_++, Event::Kind::ServiceStart, req.id,
                     PlatformKind::Serverless});
        } else {
          finish(req.id, ServiceStatus::ThrottleFailure, now);
        }
        break;
    }
  }

  void admit_queued(QueuedBackendState& state, std::uint64_t rid, double now, double timeout,
                    PlatformKind platform) {
    if (state.admit(rid) == AdmitResult::QueueReject) {
      finish(rid, ServiceStatus::QueueRejectFailure, now);
      return;
    }
    push(Event{now + timeout, next_seq_++, Event::Kind::Timeout, rid, platform});
    pump(state, platform, now);
  }

  // Starts waiting requests while a unit is free. The unit is claimed here so
  // that later same-instant events see it busy; the ServiceStart event then
  // schedules the completion.
  void pump(QueuedBackendState& state, PlatformKind platform, double now) {
    while (state.unit_free() && !state.waiting.empty()) {
      const std::uint64_t rid = state.waiting.front();
      state.waiting.pop_front();
      ++state.in_service;

      RequestRecord& rec = records_[rid];
      double service = 0.0;
      if (platform == PlatformKind::Flask) {
        service = service_time_flask(cfg_.flask, requests_[rid].data_size);
      } else {
        const bool warm = state.warm.take_warm(now);
        service = service_time_docker(cfg_.docker, requests_[rid].data_size, !warm);
      }
      rec.stage = Stage::InService;
      rec.completion_time = now + service;
      push(Event{now, next_seq_++, Event::Kind::ServiceStart, rid, platform});
    }
  }

  void on_service_start(const Event& ev) {
    RequestRecord& rec = records_[ev.request_id];
    if (ev.platform == PlatformKind::Serverless) {
      const bool warm = serverless_.warm.take_warm(ev.time);
      const double service =
          service_time_serverless(cfg_.serverless, requests_[ev.request_id].data_size, !warm);
      rec.stage = Stage::InService;
      rec.completion_time = ev.time + service;
    }
    push(Event{rec.completion_time, next_seq_++, Event::Kind::Completion, ev.request_id,
               ev.platform});
  }

  void on_completion(const Event& ev) {
    RequestRecord& rec = records_[ev.request_id];
    if (rec.stage != Stage::InService) return;  // aborted by timeout earlier
    finish(ev.request_id, ServiceStatus::Success, ev.time);
    release_unit(ev.platform, ev.time);
  }

  void on_timeout(const Event& ev) {
    RequestRecord& rec = records_[ev.request_id];
    if (rec.stage == Stage::Done) return;  // completed; stale timeout
    if (rec.stage == Stage::InService) {
      // Completing exactly at the deadline counts as completed in time; the
      // co-timed completion event still in the queue handles it.
      if (rec.completion_time <= ev.time) return;
      finish(ev.request_id, ServiceStatus::TimeoutFailure, ev.time);
      release_unit(ev.platform, ev.time);
      return;
    }
    // Still waiting in a queue.
    QueuedBackendState& state = ev.platform == PlatformKind::Flask ? flask_ : docker_;
    if (!state.remove_waiting(ev.request_id))
      throw std::logic_error("engine: waiting request missing from its queue");
    finish(ev.request_id, ServiceStatus::TimeoutFailure, ev.time);
  }

  void release_unit(PlatformKind platform, double now) {
    switch (platform) {
      case PlatformKind::Flask:
        --flask_.in_service;
        pump(flask_, PlatformKind::Flask, now);
        break;
      case PlatformKind::Docker:
        --docker_.in_service;
        docker_.warm.release(now, cfg_.docker.keep_warm);
        pump(docker_, PlatformKind::Docker, now);
        break;
      case PlatformKind::Serverless:
        --serverless_.in_flight;
        serverless_.warm.release(now, cfg_.serverless.keep_warm);
        break;
    }
  }

  void finish(std::uint64_t rid, ServiceStatus status, double end_time) {
    RequestRecord& rec = records_[rid];
    if (rec.terminal) throw std::logic_error("engine: request finished twice");
    rec.terminal = true;
    rec.stage = Stage::Done;
    outcomes_[rid] = ServiceOutcome{rid, rec.platform, rec.dispatch_time, end_time, status};
  }

  void finish_checks() const {
    for (const RequestRecord& rec : records_)
      if (!rec.terminal) throw std::logic_error("engine: request left without outcome");
    if (flask_.backlog() != 0 || docker_.backlog() != 0 || serverless_.in_flight != 0)
      throw std::logic_error("engine: backend state not drained");
  }

  const ScenarioConfig& cfg_;
  PlacerChoice choice_;
  const AuditHook& audit_;

  FrequencyWindow window_;
  QueuedBackendState flask_;
  QueuedBackendState docker_;
  ServerlessState serverless_;

  std::vector<Request> requests_;
  std::vector<RequestRecord> records_;
  std::vector<PlacementDecision> decisions_;
  std::vector<ServiceOutcome> outcomes_;

  std::priority_queue<Event, std::vector<Event>, EventAfter> queue_;
  std::uint64_t next_seq_ = 0;
  double clock_ = 0.0;
};

}  // namespace

EngineResult run_with_arrivals(std::vector<Request> arrivals, const ScenarioConfig& cfg,
                               PlacerChoice choice, const AuditHook& audit) {
  Simulation sim(std::move(arrivals), cfg, choice, audit);
  return sim.run();
}

EngineResult run_simulation(const ScenarioConfig& cfg, PlacerChoice choice,
                            const AuditHook& audit) {
  validate_scenario(cfg);
  SplitMix64 rng(cfg.seed);
  return run_with_arrivals(generate_arrivals(cfg.phases, rng), cfg, choice, audit);
}

}  // namespace placesim
