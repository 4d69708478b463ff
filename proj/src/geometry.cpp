#include "sarplan/geometry.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace sarplan {

double distance(Point2D a, Point2D b) { return std::hypot(a.x - b.x, a.y - b.y); }

bool is_finite(Point2D p) { return std::isfinite(p.x) && std::isfinite(p.y); }

namespace {

// z-component of (a - o) x (b - o)
double cross(Point2D o, Point2D a, Point2D b) {
  return (a.x - o.x) * (b.y - o.y) - (a.y - o.y) * (b.x - o.x);
}

}  // namespace

Point2D closest_point_on_segment(Point2D p, Point2D a, Point2D b) {
  const Point2D ab = b - a;
  const double len2 = dot(ab, ab);
  if (len2 == 0.0) return a;
  const double t = std::clamp(dot(p - a, ab) / len2, 0.0, 1.0);
  return a + t * ab;
}

Geofence::Geofence(std::vector<Point2D> vertices, double eps)
    : vertices_(std::move(vertices)), eps_(eps) {
  if (vertices_.size() < 3) {
    throw std::invalid_argument("geofence: need at least 3 vertices");
  }
  if (!std::isfinite(eps_) || eps_ < 0.0) {
    throw std::invalid_argument("geofence: eps must be finite and >= 0");
  }
  for (const auto& v : vertices_) {
    if (!is_finite(v)) throw std::invalid_argument("geofence: vertex not finite");
  }
  const std::size_t n = vertices_.size();
  for (std::size_t i = 0; i < n; ++i) {
    const Point2D& a = vertices_[i];
    const Point2D& b = vertices_[(i + 1) % n];
    const Point2D& c = vertices_[(i + 2) % n];
    if (cross(a, b, c) <= 0.0) {
      throw std::invalid_argument(
          "geofence: vertices must be strictly convex and counter-clockwise");
    }
  }
  if (area() <= 0.0) throw std::invalid_argument("geofence: degenerate polygon");
}

Geofence Geofence::rectangle(double width, double height, Point2D origin, double eps) {
  if (!(width > 0.0) || !(height > 0.0)) {
    throw std::invalid_argument("geofence: rectangle sides must be positive");
  }
  return Geofence({origin,
                   origin + Point2D{width, 0.0},
                   origin + Point2D{width, height},
                   origin + Point2D{0.0, height}},
                  eps);
}

double Geofence::area() const {
  double twice = 0.0;
  const std::size_t n = vertices_.size();
  for (std::size_t i = 0; i < n; ++i) {
    const Point2D& a = vertices_[i];
    const Point2D& b = vertices_[(i + 1) % n];
    twice += a.x * b.y - b.x * a.y;
  }
  return 0.5 * twice;
}

void Geofence::bounding_box(Point2D& lo, Point2D& hi) const {
  lo = hi = vertices_.front();
  for (const auto& v : vertices_) {
    lo.x = std::min(lo.x, v.x);
    lo.y = std::min(lo.y, v.y);
    hi.x = std::max(hi.x, v.x);
    hi.y = std::max(hi.y, v.y);
  }
}

double Geofence::signed_distance(Point2D p) const {
  double best = std::numeric_limits<double>::infinity();
  const std::size_t n = vertices_.size();
  for (std::size_t i = 0; i < n; ++i) {
    const Point2D& a = vertices_[i];
    const Point2D& b = vertices_[(i + 1) % n];
    const double d = cross(a, b, p) / distance(a, b);
    best = std::min(best, d);
  }
  return best;
}

bool Geofence::contains(Point2D p) const { return signed_distance(p) >= -eps_; }

Point2D Geofence::project_into(Point2D p) const {
  if (contains(p)) return p;
  double best = std::numeric_limits<double>::infinity();
  Point2D nearest = vertices_.front();
  const std::size_t n = vertices_.size();
  for (std::size_t i = 0; i < n; ++i) {
    const Point2D c =
        closest_point_on_segment(p, vertices_[i], vertices_[(i + 1) % n]);
    const double d = distance(p, c);
    if (d < best) {
      best = d;
      nearest = c;
    }
  }
  return nearest;
}

std::vector<Point2D> clip_path_to_fence(std::span<const Point2D> path,
                                        const Geofence& fence) {
  if (path.empty()) throw std::invalid_argument("clip_path_to_fence: empty path");
  std::vector<Point2D> out;
  out.reserve(path.size());
  for (const Point2D& p : path) out.push_back(fence.project_into(p));
  return out;
}

}  // namespace sarplan
