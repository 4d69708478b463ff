#pragma once

#include <span>
#include <vector>

namespace sarplan {

// Planar position in metres, local East-North frame (x East, y North).
struct Point2D {
  double x = 0.0;
  double y = 0.0;
};

inline Point2D operator+(Point2D a, Point2D b) { return {a.x + b.x, a.y + b.y}; }
inline Point2D operator-(Point2D a, Point2D b) { return {a.x - b.x, a.y - b.y}; }
inline Point2D operator*(double s, Point2D p) { return {s * p.x, s * p.y}; }
inline double dot(Point2D a, Point2D b) { return a.x * b.x + a.y * b.y; }

double distance(Point2D a, Point2D b);
bool is_finite(Point2D p);

// Nearest point to p on segment [a, b].
Point2D closest_point_on_segment(Point2D p, Point2D a, Point2D b);

// Convex flight boundary. Vertices are counter-clockwise and strictly
// convex; a point counts as contained when it lies inside or within eps
// metres of every edge half-plane.
class Geofence {
 public:
  explicit Geofence(std::vector<Point2D> vertices, double eps = kDefaultEps);

  static Geofence rectangle(double width, double height, Point2D origin = {},
                            double eps = kDefaultEps);

  const std::vector<Point2D>& vertices() const { return vertices_; }
  double eps() const { return eps_; }
  double area() const;
  void bounding_box(Point2D& lo, Point2D& hi) const;

  // Minimum signed distance to the edge half-planes; positive inside.
  double signed_distance(Point2D p) const;
  bool contains(Point2D p) const;

  // p itself when contained, otherwise the nearest boundary point.
  Point2D project_into(Point2D p) const;

  static constexpr double kDefaultEps = 0.01;

 private:
  std::vector<Point2D> vertices_;
  double eps_;
};

// Replaces every waypoint outside the fence by its boundary projection.
// Order and count are preserved; with a convex fence the segments between
// the clipped waypoints stay inside as well.
std::vector<Point2D> clip_path_to_fence(std::span<const Point2D> path,
                                        const Geofence& fence);

}  // namespace sarplan
