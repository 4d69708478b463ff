#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "sarplan/geometry.hpp"
#include "sarplan/planner.hpp"

namespace sarplan {

enum class RoiState { hidden, detected, serviced };

// A region-of-interest with ground truth and lifecycle. States only move
// hidden -> detected -> serviced.
struct Roi {
  int id = 0;
  Point2D position;
  double appear_time = 0.0;  // seconds; present in the world from this time
  RoiState state = RoiState::hidden;
  std::optional<double> detect_time;
  std::optional<double> service_time;
};

struct Scenario {
  Geofence fence = Geofence::rectangle(600.0, 400.0);
  std::vector<Roi> rois;
  double delta = 50.0;          // track spacing, metres
  double sensor_radius = 25.0;  // detection disc, metres
  double speed = 5.0;           // m/s
  Point2D start;
  double dt = 0.1;              // seconds per step
  std::uint64_t rng_seed = 0;

  // Throws invalid_argument naming the offending field.
  void validate() const;
};

struct ScenarioParams {
  double delta = 50.0;
  double sensor_radius = 25.0;
  double speed = 5.0;
  double dt = 0.1;
  double appear_time = 0.0;
  Point2D start;
};

// n_rois positions uniform over the fence interior from a seeded generator;
// the same seed reproduces the scenario bit-for-bit on any platform.
Scenario generate_scenario(std::uint64_t seed, int n_rois, const Geofence& fence,
                           const ScenarioParams& params = {});

struct TraceEvent {
  enum class Type { detect, service, batch_select, mode_switch };
  Type type;
  int value = 0;  // roi id / batch size / new mode (0 sweep, 1 service)
};

struct TraceSample {
  double t = 0.0;
  Point2D position;
  Mode mode = Mode::sweep;
  int pending_count = 0;
  std::optional<Point2D> target;
  std::vector<TraceEvent> events;
};

struct Trace {
  std::vector<TraceSample> samples;
};

struct MissionMetrics {
  bool complete = false;  // grid exhausted with nothing pending
  std::optional<double> time_all_serviced;  // seconds; absent if not all serviced
  double mission_duration = 0.0;            // simulated seconds until loop end
  double total_path_length = 0.0;           // metres
  double service_path_length = 0.0;         // metres flown in SERVICE mode
  std::vector<double> replan_latencies;     // seconds, wall clock
  double mean_replan_latency = 0.0;         // seconds
  double median_replan_latency = 0.0;       // seconds
  std::size_t rois_serviced = 0;
  std::size_t rois_total = 0;
  int truncated_solves = 0;
  std::optional<double> gap_closure;  // filled by the benchmark layer
};

struct MissionResult {
  MissionMetrics metrics;
  Trace trace;
};

// Marks every hidden ROI that has appeared by t and lies within sensor_radius
// of q as detected (detect_time = t) and returns their ids, in list order.
std::vector<int> sense(Point2D q, double t, std::vector<Roi>& rois,
                       double sensor_radius);

// Moves min(speed * dt, distance) metres straight toward target; never
// overshoots.
Point2D advance(Point2D q, Point2D target, double speed, double dt);

// (t_nnh - t_alg) / (t_nnh - t_opt); absent when the denominator vanishes.
std::optional<double> gap_closure(double t_nnh, double t_alg, double t_opt);

inline constexpr double kMissionTimeCap = 4.0 * 3600.0;  // seconds

// Fixed-step planner-in-the-loop mission. Deterministic: identical inputs
// produce identical traces apart from wall-clock latency fields.
MissionResult run_mission(const Scenario& scenario, PlannerKind kind,
                          PlannerConfig cfg, double exact_budget_seconds = 1.0);

}  // namespace sarplan
