#include "sarplan/coverage.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace sarplan {

namespace {

constexpr double kLevelTol = 1e-9;

// Intersection of the horizontal line y = level with a convex polygon,
// returned as [x_left, x_right]. The polygon is given in sweep-frame
// coordinates and the level is known to cross it.
std::pair<double, double> track_extent(const std::vector<Point2D>& poly,
                                       double level) {
  double lo = std::numeric_limits<double>::infinity();
  double hi = -std::numeric_limits<double>::infinity();
  const std::size_t n = poly.size();
  for (std::size_t i = 0; i < n; ++i) {
    const Point2D& a = poly[i];
    const Point2D& b = poly[(i + 1) % n];
    if (std::abs(a.y - level) <= kLevelTol && std::abs(b.y - level) <= kLevelTol) {
      lo = std::min({lo, a.x, b.x});
      hi = std::max({hi, a.x, b.x});
      continue;
    }
    if ((a.y - level) * (b.y - level) > 0.0) continue;
    if (a.y == b.y) continue;
    const double t = (level - a.y) / (b.y - a.y);
    const double x = a.x + t * (b.x - a.x);
    lo = std::min(lo, x);
    hi = std::max(hi, x);
  }
  if (!(lo <= hi)) throw std::logic_error("lawn_mower_grid: track misses fence");
  return {lo, hi};
}

}  // namespace

CoveragePlan lawn_mower_grid(const Geofence& fence, double delta,
                             double orientation) {
  if (!(delta > 0.0) || !std::isfinite(delta)) {
    throw std::invalid_argument("lawn_mower_grid: delta must be > 0");
  }
  if (!std::isfinite(orientation)) {
    throw std::invalid_argument("lawn_mower_grid: orientation must be finite");
  }

  const double c = std::cos(orientation);
  const double s = std::sin(orientation);
  const auto to_frame = [&](Point2D p) -> Point2D {
    return {c * p.x + s * p.y, -s * p.x + c * p.y};
  };
  const auto from_frame = [&](Point2D p) -> Point2D {
    return {c * p.x - s * p.y, s * p.x + c * p.y};
  };

  std::vector<Point2D> poly;
  poly.reserve(fence.vertices().size());
  for (const auto& v : fence.vertices()) poly.push_back(to_frame(v));

  double ymin = poly.front().y, ymax = poly.front().y;
  for (const auto& v : poly) {
    ymin = std::min(ymin, v.y);
    ymax = std::max(ymax, v.y);
  }
  const double extent = ymax - ymin;
  if (extent + kLevelTol < delta) {
    throw std::invalid_argument(
        "lawn_mower_grid: fence narrower than one track spacing");
  }

  const double top = ymax - 0.5 * delta;
  std::vector<double> levels;
  for (std::size_t k = 0;; ++k) {
    const double y = ymin + 0.5 * delta + static_cast<double>(k) * delta;
    if (y > top + kLevelTol) break;
    levels.push_back(y);
  }
  // leftover extent: add the final inset track so the top band stays covered
  if (levels.back() < top - kLevelTol) levels.push_back(top);

  CoveragePlan plan;
  plan.delta = delta;
  plan.orientation = orientation;
  plan.track_count = levels.size();
  plan.waypoints.reserve(2 * levels.size());
  for (std::size_t k = 0; k < levels.size(); ++k) {
    const auto [lo, hi] = track_extent(poly, levels[k]);
    Point2D first{lo, levels[k]};
    Point2D second{hi, levels[k]};
    if (k % 2 == 1) std::swap(first, second);
    plan.waypoints.push_back(from_frame(first));
    plan.waypoints.push_back(from_frame(second));
  }
  plan.waypoints = clip_path_to_fence(plan.waypoints, fence);
  return plan;
}

double point_polyline_distance(Point2D p, std::span<const Point2D> polyline) {
  if (polyline.empty()) return std::numeric_limits<double>::infinity();
  if (polyline.size() == 1) return distance(p, polyline.front());
  double best = std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i + 1 < polyline.size(); ++i) {
    best = std::min(
        best, distance(p, closest_point_on_segment(p, polyline[i], polyline[i + 1])));
  }
  return best;
}

double coverage_fraction(const CoveragePlan& plan, const Geofence& fence,
                         double sensor_radius, double cell) {
  if (!(cell > 0.0)) throw std::invalid_argument("coverage_fraction: cell must be > 0");
  Point2D lo, hi;
  fence.bounding_box(lo, hi);
  std::size_t total = 0;
  std::size_t covered = 0;
  for (double y = lo.y + 0.5 * cell; y < hi.y; y += cell) {
    for (double x = lo.x + 0.5 * cell; x < hi.x; x += cell) {
      const Point2D p{x, y};
      if (!fence.contains(p)) continue;
      ++total;
      if (point_polyline_distance(p, plan.waypoints) <= sensor_radius) ++covered;
    }
  }
  if (total == 0) return 0.0;
  return static_cast<double>(covered) / static_cast<double>(total);
}

double plan_length(const CoveragePlan& plan) {
  double len = 0.0;
  for (std::size_t i = 0; i + 1 < plan.waypoints.size(); ++i) {
    len += distance(plan.waypoints[i], plan.waypoints[i + 1]);
  }
  return len;
}

}  // namespace sarplan
