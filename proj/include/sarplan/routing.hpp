#pragma once

#include <span>
#include <vector>

#include "sarplan/geometry.hpp"

namespace sarplan {

enum class RouteQuality { heuristic, proven_optimal, budget_truncated };

// Open Hamiltonian path from a fixed start over a target set; no return leg.
struct Route {
  std::vector<int> order;       // permutation of target indices, visit order
  double length = 0.0;          // metres, recomputable from order
  double solver_latency = 0.0;  // seconds of wall-clock solve time
  RouteQuality quality = RouteQuality::heuristic;
};

// Sum of legs start -> targets[order[0]] -> ... -> targets[order[n-1]].
// Throws if order is not a permutation of the target indices.
double path_length(Point2D start, std::span<const Point2D> targets,
                   std::span<const int> order);

// Greedy chain: repeatedly fly to the nearest unvisited target, ties broken
// by lowest index.
Route nn_path(Point2D start, std::span<const Point2D> targets);

// Exact open-path solver. Dispatches to Held-Karp for n <= 15 and to
// MST-bounded branch-and-bound above; a solve that outruns the budget
// returns the best incumbent flagged budget_truncated.
Route exact_path(Point2D start, std::span<const Point2D> targets,
                 double budget_seconds = 1.0);

// The two exact routes individually, for cross-checking.
Route held_karp_path(Point2D start, std::span<const Point2D> targets);
Route branch_and_bound_path(Point2D start, std::span<const Point2D> targets,
                            double budget_seconds = 1.0);

}  // namespace sarplan
