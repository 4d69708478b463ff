#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "sarplan/geometry.hpp"

namespace sarplan {

// Boustrophedon sweep over a geofence: parallel tracks spaced delta apart,
// flown in alternating directions. Flying the waypoint list in order with a
// sensor of radius delta/2 covers the whole fence.
struct CoveragePlan {
  std::vector<Point2D> waypoints;
  double delta = 0.0;        // track spacing, metres
  double orientation = 0.0;  // sweep-axis angle, radians
  std::size_t track_count = 0;
};

// Tracks run parallel to the sweep axis. The first and last tracks are inset
// delta/2 from the fence boundary; interior tracks step by exactly delta. When
// the fence extent is not a multiple of delta the final track is placed at the
// delta/2 inset and sits closer than delta to its predecessor, so the
// full-coverage property holds for any extent.
CoveragePlan lawn_mower_grid(const Geofence& fence, double delta,
                             double orientation = 0.0);

double point_polyline_distance(Point2D p, std::span<const Point2D> polyline);

// Rasterises the fence interior at the given cell size and returns the
// fraction of cell centres within sensor_radius of the plan polyline.
double coverage_fraction(const CoveragePlan& plan, const Geofence& fence,
                         double sensor_radius, double cell);

double plan_length(const CoveragePlan& plan);

}  // namespace sarplan
