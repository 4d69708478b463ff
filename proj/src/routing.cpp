#include "sarplan/routing.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdint>
#include <limits>
#include <stdexcept>
#include <unordered_map>

namespace sarplan {

namespace {

using Clock = std::chrono::steady_clock;

constexpr double kInf = std::numeric_limits<double>::infinity();
constexpr double kDistinctTol = 1e-9;

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

void check_targets(Point2D start, std::span<const Point2D> targets) {
  if (!is_finite(start)) throw std::invalid_argument("route: start not finite");
  for (const auto& t : targets) {
    if (!is_finite(t)) throw std::invalid_argument("route: target not finite");
  }
  for (std::size_t i = 0; i < targets.size(); ++i) {
    for (std::size_t j = i + 1; j < targets.size(); ++j) {
      if (distance(targets[i], targets[j]) <= kDistinctTol) {
        throw std::invalid_argument("route: targets must be distinct");
      }
    }
  }
}

// Pairwise leg costs; index n stands for the start position.
struct Legs {
  int n;
  std::vector<double> d;  // (n+1) x n
  double operator()(int from, int to) const { return d[from * n + to]; }
};

Legs build_legs(Point2D start, std::span<const Point2D> targets) {
  const int n = static_cast<int>(targets.size());
  Legs legs{n, std::vector<double>(static_cast<std::size_t>(n + 1) * n, 0.0)};
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) legs.d[i * n + j] = distance(targets[i], targets[j]);
  }
  for (int j = 0; j < n; ++j) legs.d[n * n + j] = distance(start, targets[j]);
  return legs;
}

Route make_route(Point2D start, std::span<const Point2D> targets,
                 std::vector<int> order, double latency, RouteQuality quality) {
  Route r;
  r.length = path_length(start, targets, order);
  r.order = std::move(order);
  r.solver_latency = latency;
  r.quality = quality;
  return r;
}

// Minimum spanning tree weight over the targets selected by mask (Prim).
double mst_weight(const Legs& legs, std::uint64_t mask,
                  std::unordered_map<std::uint64_t, double>& cache) {
  if (mask == 0) return 0.0;
  const auto it = cache.find(mask);
  if (it != cache.end()) return it->second;

  int nodes[64];
  int m = 0;
  for (int i = 0; i < legs.n; ++i) {
    if (mask & (std::uint64_t{1} << i)) nodes[m++] = i;
  }
  double key[64];
  bool in_tree[64] = {false};
  for (int i = 0; i < m; ++i) key[i] = kInf;
  key[0] = 0.0;
  double total = 0.0;
  for (int iter = 0; iter < m; ++iter) {
    int best = -1;
    for (int i = 0; i < m; ++i) {
      if (!in_tree[i] && (best < 0 || key[i] < key[best])) best = i;
    }
    in_tree[best] = true;
    total += key[best];
    for (int i = 0; i < m; ++i) {
      if (!in_tree[i]) key[i] = std::min(key[i], legs(nodes[best], nodes[i]));
    }
  }
  cache.emplace(mask, total);
  return total;
}

struct BnbSearch {
  const Legs& legs;
  std::uint64_t full;
  double best;
  std::vector<int> incumbent;
  std::vector<int> current;
  std::unordered_map<std::uint64_t, double> mst_cache;
  Clock::time_point deadline;
  std::uint64_t ticks = 0;
  bool expired = false;

  void dfs(int cur, std::uint64_t visited, double g) {
    if (expired) return;
    if ((++ticks & 1023u) == 0 && Clock::now() > deadline) {
      expired = true;
      return;
    }
    if (visited == full) {
      if (g < best) {
        best = g;
        incumbent = current;
      }
      return;
    }
    // expand nearest-first for pruning; ties by index for determinism
    std::pair<double, int> children[64];
    int m = 0;
    for (int k = 0; k < legs.n; ++k) {
      if (!(visited & (std::uint64_t{1} << k))) {
        children[m++] = {legs(cur, k), k};
      }
    }
    std::sort(children, children + m);
    for (int i = 0; i < m; ++i) {
      const int k = children[i].second;
      const double g2 = g + children[i].first;
      const std::uint64_t rest = (visited | (std::uint64_t{1} << k)) ^ full;
      double bound = g2;
      if (rest != 0) {
        double leg_out = kInf;
        for (int r = 0; r < legs.n; ++r) {
          if (rest & (std::uint64_t{1} << r)) leg_out = std::min(leg_out, legs(k, r));
        }
        bound += leg_out + mst_weight(legs, rest, mst_cache);
      }
      if (bound >= best) continue;
      current.push_back(k);
      dfs(k, visited | (std::uint64_t{1} << k), g2);
      current.pop_back();
      if (expired) return;
    }
  }
};

}  // namespace

double path_length(Point2D start, std::span<const Point2D> targets,
                   std::span<const int> order) {
  if (order.size() != targets.size()) {
    throw std::invalid_argument("path_length: order is not a permutation");
  }
  std::vector<bool> seen(targets.size(), false);
  for (const int i : order) {
    if (i < 0 || static_cast<std::size_t>(i) >= targets.size() || seen[i]) {
      throw std::invalid_argument("path_length: order is not a permutation");
    }
    seen[i] = true;
  }
  double total = 0.0;
  Point2D at = start;
  for (const int i : order) {
    total += distance(at, targets[i]);
    at = targets[i];
  }
  return total;
}

Route nn_path(Point2D start, std::span<const Point2D> targets) {
  const auto t0 = Clock::now();
  check_targets(start, targets);
  const int n = static_cast<int>(targets.size());
  std::vector<bool> visited(n, false);
  std::vector<int> order;
  order.reserve(n);
  Point2D at = start;
  for (int step = 0; step < n; ++step) {
    int best = -1;
    double best_d = kInf;
    for (int i = 0; i < n; ++i) {
      if (visited[i]) continue;
      const double d = distance(at, targets[i]);
      if (d < best_d) {
        best_d = d;
        best = i;
      }
    }
    visited[best] = true;
    order.push_back(best);
    at = targets[best];
  }
  return make_route(start, targets, std::move(order), seconds_since(t0),
                    RouteQuality::heuristic);
}

Route held_karp_path(Point2D start, std::span<const Point2D> targets) {
  const auto t0 = Clock::now();
  check_targets(start, targets);
  const int n = static_cast<int>(targets.size());
  if (n == 0) return make_route(start, targets, {}, seconds_since(t0),
                                RouteQuality::proven_optimal);
  if (n > 20) {
    throw std::invalid_argument("held_karp_path: n > 20 exceeds the DP table budget");
  }
  const Legs legs = build_legs(start, targets);
  const std::size_t masks = std::size_t{1} << n;
  std::vector<double> dp(masks * n, kInf);
  std::vector<std::int8_t> parent(masks * n, -1);
  for (int j = 0; j < n; ++j) dp[(std::size_t{1} << j) * n + j] = legs(n, j);
  for (std::size_t mask = 1; mask < masks; ++mask) {
    for (int j = 0; j < n; ++j) {
      if (!(mask & (std::size_t{1} << j))) continue;
      const double base = dp[mask * n + j];
      if (base == kInf) continue;
      for (int k = 0; k < n; ++k) {
        if (mask & (std::size_t{1} << k)) continue;
        const std::size_t next = mask | (std::size_t{1} << k);
        const double cand = base + legs(j, k);
        if (cand < dp[next * n + k]) {
          dp[next * n + k] = cand;
          parent[next * n + k] = static_cast<std::int8_t>(j);
        }
      }
    }
  }
  const std::size_t full = masks - 1;
  int last = 0;
  for (int j = 1; j < n; ++j) {
    if (dp[full * n + j] < dp[full * n + last]) last = j;
  }
  std::vector<int> order(n);
  std::size_t mask = full;
  int at = last;
  for (int pos = n - 1; pos >= 0; --pos) {
    order[pos] = at;
    const int prev = parent[mask * n + at];
    mask ^= std::size_t{1} << at;
    at = prev;
  }
  return make_route(start, targets, std::move(order), seconds_since(t0),
                    RouteQuality::proven_optimal);
}

Route branch_and_bound_path(Point2D start, std::span<const Point2D> targets,
                            double budget_seconds) {
  const auto t0 = Clock::now();
  check_targets(start, targets);
  const int n = static_cast<int>(targets.size());
  if (n > 62) throw std::invalid_argument("branch_and_bound_path: too many targets");
  if (n == 0) return make_route(start, targets, {}, seconds_since(t0),
                                RouteQuality::proven_optimal);

  const Route warm = nn_path(start, targets);
  const Legs legs = build_legs(start, targets);
  BnbSearch search{legs,
                   (std::uint64_t{1} << n) - 1,
                   warm.length,
                   warm.order,
                   {},
                   {},
                   t0 + std::chrono::duration_cast<Clock::duration>(
                            std::chrono::duration<double>(budget_seconds))};
  search.current.reserve(n);
  search.dfs(legs.n, 0, 0.0);  // legs.n indexes the start position
  return make_route(start, targets, std::move(search.incumbent), seconds_since(t0),
                    search.expired ? RouteQuality::budget_truncated
                                   : RouteQuality::proven_optimal);
}

Route exact_path(Point2D start, std::span<const Point2D> targets,
                 double budget_seconds) {
  if (targets.size() <= 15) return held_karp_path(start, targets);
  return branch_and_bound_path(start, targets, budget_seconds);
}

}  // namespace sarplan
