#pragma once

#include <array>
#include <cstddef>
#include <span>
#include <vector>

namespace ordprox {

struct Point2 {
  double x = 0.0;
  double y = 0.0;

  friend bool operator==(const Point2&, const Point2&) = default;
};

/// Vertex indices into a point list, counter-clockwise.
struct Triangle {
  std::array<std::size_t, 3> v{};

  bool contains(std::size_t vertex) const { return v[0] == vertex || v[1] == vertex || v[2] == vertex; }
  friend bool operator==(const Triangle&, const Triangle&) = default;
  friend auto operator<=>(const Triangle&, const Triangle&) = default;
};

struct Triangulation {
  std::vector<Point2> points;
  std::vector<Triangle> triangles;
};

struct GeometryOptions {
  /// Absolute tolerance for the orientation and incircle predicates. Suited
  /// to unit-scale coordinates; scale it with the data.
  double epsilon = 1e-9;
};

/// Twice the signed area of (a, b, c); positive when counter-clockwise.
double orient2d(const Point2& a, const Point2& b, const Point2& c);

/// Positive when d lies inside the circumcircle of the counter-clockwise
/// triangle (a, b, c).
double incircle(const Point2& a, const Point2& b, const Point2& c, const Point2& d);

/// Bowyer–Watson Delaunay triangulation. Points are inserted in lexicographic
/// order, so the result does not depend on the input order; among cocircular
/// configurations the diagonal touching the lexicographically smallest point
/// is kept. Triangles are counter-clockwise, rotated to start at their
/// smallest index, and sorted.
///
/// Throws TooFewPoints (< 3), DuplicatePoint, AllCollinear, or ParseError for
/// non-finite coordinates.
Triangulation delaunay(std::span<const Point2> points, const GeometryOptions& options = {});

double triangle_area(const Triangle& t, std::span<const Point2> points);
Point2 centroid(const Triangle& t, std::span<const Point2> points);

/// Angle of p - origin in (-pi, pi]. Throws CoincidentPoint when p == origin.
double orientation_angle(const Point2& p, const Point2& origin);

double distance(const Point2& a, const Point2& b);

}  // namespace ordprox
