#pragma once

#include <memory>
#include <optional>
#include <span>
#include <string_view>
#include <unordered_map>
#include <unordered_set>
#include <vector>

#include "sarplan/coverage.hpp"
#include "sarplan/geometry.hpp"

namespace sarplan {

enum class Mode { sweep, service };
enum class BatchOrder { literal_nn, exact_k };
enum class PlannerKind { lig, nnh, optimal };

std::string_view to_string(Mode mode);
std::string_view to_string(PlannerKind kind);

// A detected region-of-interest centroid, as seen by a planner.
struct Detection {
  int id = 0;
  Point2D position;
};

struct PlannerConfig {
  int k_batch = 3;                               // K nearest pending served per batch
  BatchOrder batch_order = BatchOrder::exact_k;  // in-batch visit order
  double accept_radius = 1.0;                    // metres; "reached" threshold
  double delta = 50.0;                           // metres; mirrors the plan spacing
  double speed = 5.0;                            // m/s; mirrors the mission speed
};

// Appends detections whose id has not been seen before to pending and
// records them in seen. Returns the ids actually merged, in input order.
std::vector<int> merge_detections(std::vector<Detection>& pending,
                                  std::unordered_set<int>& seen,
                                  std::span<const Detection> detections);

Mode mode_transition(std::size_t pending_count);

// The min(k, |pending|) pending entries nearest to q, ties by lowest id.
std::vector<Detection> select_batch(std::span<const Detection> pending, Point2D q,
                                    int k);

// literal_nn: greedy nearest-neighbour chain from q within the batch.
// exact_k: minimum-length open path from q by exhaustive enumeration
// (batch size <= 5 enforced).
std::vector<Detection> order_batch(std::span<const Detection> batch, Point2D q,
                                   BatchOrder order);

struct StepResult {
  Point2D target;                // fence-clipped waypoint to fly toward
  bool mission_complete = false;
  bool pending_changed = false;  // detections merged or an ROI serviced
  bool mode_changed = false;
  int batch_selected = 0;        // size of the batch selected this step, 0 if none
  std::vector<int> serviced;     // ROI ids serviced this step
  std::vector<int> detected;     // ROI ids merged this step
  double solver_latency = 0.0;   // seconds spent in route solving this step
  bool solver_truncated = false;
};

// Online planner state machine. One instance drives one mission; stepping is
// strictly sequential. SWEEP follows the coverage plan and freezes its grid
// index while SERVICE visits pending ROIs; an ROI is serviced when the
// vehicle comes within accept_radius of it. Every returned waypoint is
// fence-clipped.
class Planner {
 public:
  virtual ~Planner() = default;

  StepResult step(Point2D q, std::span<const Detection> detections);

  Mode mode() const { return mode_; }
  const std::vector<Detection>& pending() const { return pending_; }
  std::size_t grid_index() const { return grid_index_; }
  std::optional<Point2D> current_target() const { return last_target_; }
  const CoveragePlan& plan() const { return plan_; }
  virtual PlannerKind kind() const = 0;

 protected:
  Planner(CoveragePlan plan, Geofence fence, PlannerConfig cfg);

  // Current ROI to fly toward; pending is non-empty when called. May select
  // a new batch / re-solve, recording that in the step result.
  virtual Detection next_service_target(Point2D q, StepResult& result) = 0;
  virtual void on_pending_grew() {}
  virtual void on_serviced(int id) = 0;

  CoveragePlan plan_;
  Geofence fence_;
  PlannerConfig cfg_;
  std::vector<Detection> pending_;
  std::unordered_set<int> seen_;

 private:
  void remove_pending(int id);

  Mode mode_ = Mode::sweep;
  std::size_t grid_index_ = 0;
  std::optional<Point2D> last_target_;
};

// Sweep plus K-nearest batched servicing; new detections are merged
// immediately but the current batch runs to completion.
class LigPlanner final : public Planner {
 public:
  LigPlanner(CoveragePlan plan, Geofence fence, PlannerConfig cfg);
  PlannerKind kind() const override { return PlannerKind::lig; }
  const std::vector<Detection>& batch() const { return batch_; }

 private:
  Detection next_service_target(Point2D q, StepResult& result) override;
  void on_serviced(int id) override;

  std::vector<Detection> batch_;
};

// Purely greedy baseline: always the single nearest pending ROI, re-picked
// after every servicing and every detection.
class NnhPlanner final : public Planner {
 public:
  NnhPlanner(CoveragePlan plan, Geofence fence, PlannerConfig cfg);
  PlannerKind kind() const override { return PlannerKind::nnh; }

 private:
  Detection next_service_target(Point2D q, StepResult& result) override;
  void on_pending_grew() override { target_.reset(); }
  void on_serviced(int id) override { target_.reset(); }

  std::optional<Detection> target_;
};

// Globally-optimal baseline: follows an exact open-path solution over all
// pending ROIs, re-solved from scratch whenever the pending set changes.
class OptimalPlanner final : public Planner {
 public:
  OptimalPlanner(CoveragePlan plan, Geofence fence, PlannerConfig cfg,
                 double solve_budget_seconds = 1.0);
  PlannerKind kind() const override { return PlannerKind::optimal; }

 private:
  Detection next_service_target(Point2D q, StepResult& result) override;
  void on_pending_grew() override { dirty_ = true; }
  void on_serviced(int id) override;

  std::vector<Detection> route_;
  bool dirty_ = true;
  double solve_budget_;
};

std::unique_ptr<Planner> make_planner(PlannerKind kind, CoveragePlan plan,
                                      Geofence fence, PlannerConfig cfg,
                                      double exact_budget_seconds = 1.0);

}  // namespace sarplan
