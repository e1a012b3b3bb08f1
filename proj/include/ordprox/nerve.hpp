#pragma once

// Nerves on a triangulation. Two triangles "intersect" when they share at
// least one vertex, so the nerve around a vertex is that vertex's star and a
// maximal nuclear cluster (MNC) is a star of maximal size.

#include <cstddef>
#include <vector>

#include "ordprox/geometry.hpp"
#include "ordprox/order.hpp"

namespace ordprox {

struct NerveCluster {
  std::size_t nucleus = 0;
  /// Triangle indices, ascending. Every one contains `nucleus`.
  std::vector<std::size_t> triangles;
};

struct SpokeComplex {
  std::size_t k = 0;
  /// Triangle indices, ascending.
  std::vector<std::size_t> triangles;
};

struct MaximalCycle {
  std::size_t k = 0;
  /// Mean of the member centroids; angles are measured about it.
  Point2 center;
  /// Triangle indices in visiting order.
  std::vector<std::size_t> triangles;
  /// Centroids in visiting order.
  std::vector<Point2> vertices;
  /// Orientation angle of each vertex about `center`, nondecreasing.
  std::vector<double> angles;
  /// Closed perimeter, including the edge back to the first vertex.
  double length = 0.0;
};

/// Triangle indices incident to each vertex.
std::vector<std::vector<std::size_t>> vertex_stars(const Triangulation& tri);

/// Every vertex whose star has maximal size, ordered by vertex index.
std::vector<NerveCluster> find_mncs(const Triangulation& tri);

/// Level-k ring of triangles around the MNC's nucleus. Level 0 is the nucleus
/// vertex, level 1 is the MNC, and level k >= 2 holds the triangles sharing a
/// vertex with level k-1 but none with level k-2. Throws InvalidLevel for
/// k == 0.
SpokeComplex spoke_complex(const Triangulation& tri, const NerveCluster& mnc, std::size_t k);

/// Closed polyline through the centroids of a spoke complex, visited by
/// increasing angle about their mean. Equal angles fall back to distance from
/// the mean, then triangle index. Throws TooFewTriangles (< 3) or
/// CoincidentCentroid.
MaximalCycle maximal_cycle(const Triangulation& tri, const SpokeComplex& skcx);

double mnc_area(const Triangulation& tri, const NerveCluster& mnc);

/// The cyclic order a maximal cycle realizes: the total order of its
/// triangles by angle, closed into a cycle. Elements are named "t<index>".
CyclicOrder cycle_order(const MaximalCycle& cycle);

}  // namespace ordprox
