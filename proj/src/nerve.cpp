#include "ordprox/nerve.hpp"

#include <algorithm>
#include <numeric>
#include <string>
#include <tuple>

#include "ordprox/error.hpp"

namespace ordprox {

std::vector<std::vector<std::size_t>> vertex_stars(const Triangulation& tri) {
  std::vector<std::vector<std::size_t>> stars(tri.points.size());
  for (std::size_t t = 0; t < tri.triangles.size(); ++t)
    for (auto v : tri.triangles[t].v) stars.at(v).push_back(t);
  return stars;
}

std::vector<NerveCluster> find_mncs(const Triangulation& tri) {
  const auto stars = vertex_stars(tri);
  std::size_t best = 0;
  for (const auto& s : stars) best = std::max(best, s.size());
  std::vector<NerveCluster> out;
  if (best == 0) return out;
  for (std::size_t v = 0; v < stars.size(); ++v)
    if (stars[v].size() == best) out.push_back({v, stars[v]});
  return out;
}

namespace {

std::vector<unsigned char> vertices_of(const Triangulation& tri,
                                       const std::vector<std::size_t>& triangles) {
  std::vector<unsigned char> mark(tri.points.size(), 0);
  for (auto t : triangles)
    for (auto v : tri.triangles[t].v) mark[v] = 1;
  return mark;
}

bool touches(const Triangle& t, const std::vector<unsigned char>& mark) {
  return mark[t.v[0]] || mark[t.v[1]] || mark[t.v[2]];
}

}  // namespace

SpokeComplex spoke_complex(const Triangulation& tri, const NerveCluster& mnc, std::size_t k) {
  if (k == 0) {
    throw Error(ErrorCode::InvalidLevel, "spoke complexes start at level 1");
  }
  std::vector<unsigned char> older(tri.points.size(), 0);
  older.at(mnc.nucleus) = 1;
  std::vector<std::size_t> level = mnc.triangles;
  for (std::size_t j = 2; j <= k && !level.empty(); ++j) {
    const auto recent = vertices_of(tri, level);
    std::vector<std::size_t> next;
    for (std::size_t t = 0; t < tri.triangles.size(); ++t) {
      const auto& tr = tri.triangles[t];
      if (touches(tr, recent) && !touches(tr, older)) next.push_back(t);
    }
    older = recent;
    level = std::move(next);
  }
  std::sort(level.begin(), level.end());
  return {k, std::move(level)};
}

MaximalCycle maximal_cycle(const Triangulation& tri, const SpokeComplex& skcx) {
  const std::size_t n = skcx.triangles.size();
  if (n < 3) {
    throw Error(ErrorCode::TooFewTriangles,
                "a maximal cycle needs at least 3 triangles, got " + std::to_string(n));
  }
  std::vector<Point2> centroids;
  centroids.reserve(n);
  Point2 center;
  for (auto t : skcx.triangles) {
    centroids.push_back(centroid(tri.triangles.at(t), tri.points));
    center.x += centroids.back().x;
    center.y += centroids.back().y;
  }
  center.x /= static_cast<double>(n);
  center.y /= static_cast<double>(n);

  struct Key {
    double angle, radius;
    std::size_t triangle, slot;
  };
  std::vector<Key> keys;
  for (std::size_t i = 0; i < n; ++i) {
    if (centroids[i] == center) {
      throw Error(ErrorCode::CoincidentCentroid,
                  "centroid of triangle " + std::to_string(skcx.triangles[i]) +
                      " coincides with the cycle center",
                  {std::to_string(skcx.triangles[i])});
    }
    keys.push_back({orientation_angle(centroids[i], center), distance(centroids[i], center),
                    skcx.triangles[i], i});
  }
  std::sort(keys.begin(), keys.end(), [](const Key& a, const Key& b) {
    return std::tie(a.angle, a.radius, a.triangle) < std::tie(b.angle, b.radius, b.triangle);
  });

  MaximalCycle cycle;
  cycle.k = skcx.k;
  cycle.center = center;
  for (const auto& key : keys) {
    cycle.triangles.push_back(key.triangle);
    cycle.vertices.push_back(centroids[key.slot]);
    cycle.angles.push_back(key.angle);
  }
  for (std::size_t i = 0; i < n; ++i) {
    cycle.length += distance(cycle.vertices[i], cycle.vertices[(i + 1) % n]);
  }
  return cycle;
}

double mnc_area(const Triangulation& tri, const NerveCluster& mnc) {
  double total = 0.0;
  for (auto t : mnc.triangles) total += triangle_area(tri.triangles.at(t), tri.points);
  return total;
}

CyclicOrder cycle_order(const MaximalCycle& cycle) {
  std::vector<ElementId> ascending;
  ascending.reserve(cycle.triangles.size());
  for (auto t : cycle.triangles) ascending.push_back("t" + std::to_string(t));
  return cyclic_from_total(total_order_from_sequence(ascending));
}

}  // namespace ordprox
