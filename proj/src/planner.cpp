#include "sarplan/planner.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <stdexcept>

#include "sarplan/routing.hpp"

namespace sarplan {

std::string_view to_string(Mode mode) {
  return mode == Mode::sweep ? "SWEEP" : "SERVICE";
}

std::string_view to_string(PlannerKind kind) {
  switch (kind) {
    case PlannerKind::lig: return "lig";
    case PlannerKind::nnh: return "nnh";
    case PlannerKind::optimal: return "opt";
  }
  return "?";
}

std::vector<int> merge_detections(std::vector<Detection>& pending,
                                  std::unordered_set<int>& seen,
                                  std::span<const Detection> detections) {
  std::vector<int> merged;
  for (const Detection& d : detections) {
    if (seen.contains(d.id)) continue;
    seen.insert(d.id);
    pending.push_back(d);
    merged.push_back(d.id);
  }
  return merged;
}

Mode mode_transition(std::size_t pending_count) {
  return pending_count == 0 ? Mode::sweep : Mode::service;
}

std::vector<Detection> select_batch(std::span<const Detection> pending, Point2D q,
                                    int k) {
  if (pending.empty()) throw std::invalid_argument("select_batch: pending is empty");
  if (k < 1) throw std::invalid_argument("select_batch: k must be >= 1");
  std::vector<Detection> sorted(pending.begin(), pending.end());
  std::sort(sorted.begin(), sorted.end(), [&](const Detection& a, const Detection& b) {
    const double da = distance(q, a.position);
    const double db = distance(q, b.position);
    if (da != db) return da < db;
    return a.id < b.id;
  });
  sorted.resize(std::min<std::size_t>(sorted.size(), static_cast<std::size_t>(k)));
  return sorted;
}

std::vector<Detection> order_batch(std::span<const Detection> batch, Point2D q,
                                   BatchOrder order) {
  if (batch.empty()) throw std::invalid_argument("order_batch: batch is empty");
  const int n = static_cast<int>(batch.size());
  if (order == BatchOrder::literal_nn) {
    std::vector<Detection> out;
    std::vector<bool> used(n, false);
    Point2D at = q;
    for (int step = 0; step < n; ++step) {
      int best = -1;
      double best_d = std::numeric_limits<double>::infinity();
      for (int i = 0; i < n; ++i) {
        if (used[i]) continue;
        const double d = distance(at, batch[i].position);
        if (d < best_d || (d == best_d && best >= 0 && batch[i].id < batch[best].id)) {
          best_d = d;
          best = i;
        }
      }
      used[best] = true;
      out.push_back(batch[best]);
      at = batch[best].position;
    }
    return out;
  }
  if (n > 5) {
    throw std::invalid_argument("order_batch: exact_k limited to batches of 5");
  }
  std::vector<int> idx(n);
  std::iota(idx.begin(), idx.end(), 0);
  std::vector<int> best_idx = idx;
  double best_len = std::numeric_limits<double>::infinity();
  do {
    double len = 0.0;
    Point2D at = q;
    for (const int i : idx) {
      len += distance(at, batch[i].position);
      at = batch[i].position;
    }
    if (len < best_len) {
      best_len = len;
      best_idx = idx;
    }
  } while (std::next_permutation(idx.begin(), idx.end()));
  std::vector<Detection> out;
  out.reserve(n);
  for (const int i : best_idx) out.push_back(batch[i]);
  return out;
}

Planner::Planner(CoveragePlan plan, Geofence fence, PlannerConfig cfg)
    : plan_(std::move(plan)), fence_(std::move(fence)), cfg_(cfg) {
  if (cfg_.k_batch < 1) throw std::invalid_argument("planner: k_batch must be >= 1");
  if (!(cfg_.accept_radius > 0.0)) {
    throw std::invalid_argument("planner: accept_radius must be > 0");
  }
  if (!(cfg_.speed > 0.0)) throw std::invalid_argument("planner: speed must be > 0");
  if (plan_.waypoints.empty()) throw std::invalid_argument("planner: empty plan");
}

void Planner::remove_pending(int id) {
  std::erase_if(pending_, [id](const Detection& d) { return d.id == id; });
}

StepResult Planner::step(Point2D q, std::span<const Detection> detections) {
  StepResult result;
  const Mode prev_mode = mode_;

  result.detected = merge_detections(pending_, seen_, detections);
  if (!result.detected.empty()) {
    result.pending_changed = true;
    on_pending_grew();
  }

  // service every consecutively-reached target before deciding the mode
  while (!pending_.empty()) {
    const Detection target = next_service_target(q, result);
    if (distance(q, target.position) > cfg_.accept_radius) break;
    remove_pending(target.id);
    on_serviced(target.id);
    result.serviced.push_back(target.id);
    result.pending_changed = true;
  }

  mode_ = mode_transition(pending_.size());
  result.mode_changed = mode_ != prev_mode;

  if (mode_ == Mode::sweep) {
    if (grid_index_ >= plan_.waypoints.size()) {
      result.mission_complete = true;
      result.target = fence_.project_into(q);
      last_target_ = result.target;
      return result;
    }
    const Point2D wp = plan_.waypoints[grid_index_];
    result.target = wp;
    if (distance(q, wp) <= cfg_.accept_radius) ++grid_index_;
  } else {
    result.target = next_service_target(q, result).position;
  }

  result.target = fence_.project_into(result.target);
  last_target_ = result.target;
  return result;
}

LigPlanner::LigPlanner(CoveragePlan plan, Geofence fence, PlannerConfig cfg)
    : Planner(std::move(plan), std::move(fence), cfg) {}

Detection LigPlanner::next_service_target(Point2D q, StepResult& result) {
  if (batch_.empty()) {
    batch_ = order_batch(select_batch(pending_, q, cfg_.k_batch), q, cfg_.batch_order);
    result.batch_selected = static_cast<int>(batch_.size());
  }
  return batch_.front();
}

void LigPlanner::on_serviced(int id) {
  std::erase_if(batch_, [id](const Detection& d) { return d.id == id; });
}

NnhPlanner::NnhPlanner(CoveragePlan plan, Geofence fence, PlannerConfig cfg)
    : Planner(std::move(plan), std::move(fence), cfg) {}

Detection NnhPlanner::next_service_target(Point2D q, StepResult& result) {
  (void)result;
  if (!target_) target_ = select_batch(pending_, q, 1).front();
  return *target_;
}

OptimalPlanner::OptimalPlanner(CoveragePlan plan, Geofence fence, PlannerConfig cfg,
                               double solve_budget_seconds)
    : Planner(std::move(plan), std::move(fence), cfg),
      solve_budget_(solve_budget_seconds) {}

Detection OptimalPlanner::next_service_target(Point2D q, StepResult& result) {
  if (dirty_ || route_.empty()) {
    std::vector<Point2D> positions;
    positions.reserve(pending_.size());
    for (const Detection& d : pending_) positions.push_back(d.position);
    const Route route = exact_path(q, positions, solve_budget_);
    route_.clear();
    route_.reserve(route.order.size());
    for (const int i : route.order) route_.push_back(pending_[i]);
    result.solver_latency += route.solver_latency;
    result.solver_truncated |= route.quality == RouteQuality::budget_truncated;
    dirty_ = false;
  }
  return route_.front();
}

void OptimalPlanner::on_serviced(int id) {
  std::erase_if(route_, [id](const Detection& d) { return d.id == id; });
  dirty_ = true;
}

std::unique_ptr<Planner> make_planner(PlannerKind kind, CoveragePlan plan,
                                      Geofence fence, PlannerConfig cfg,
                                      double exact_budget_seconds) {
  switch (kind) {
    case PlannerKind::lig:
      return std::make_unique<LigPlanner>(std::move(plan), std::move(fence), cfg);
    case PlannerKind::nnh:
      return std::make_unique<NnhPlanner>(std::move(plan), std::move(fence), cfg);
    case PlannerKind::optimal:
      return std::make_unique<OptimalPlanner>(std::move(plan), std::move(fence), cfg,
                                              exact_budget_seconds);
  }
  throw std::invalid_argument("make_planner: unknown planner kind");
}

}  // namespace sarplan
