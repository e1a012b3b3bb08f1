#pragma once
// Shared test fixtures that need the library types.

#include <cmath>
#include <optional>
#include <numbers>
#include <string>
#include <vector>

#include "oracles.hpp"
#include "ordprox/error.hpp"
#include "ordprox/frames.hpp"
#include "ordprox/geometry.hpp"
#include "ordprox/order.hpp"

namespace fixtures {

// Code of the ordprox::Error thrown by f, or nullopt if it returns normally.
template <typename F>
std::optional<ordprox::ErrorCode> error_of(F&& f) {
  try {
    f();
  } catch (const ordprox::Error& e) {
    return e.code();
  }
  return std::nullopt;
}

inline std::vector<ordprox::OrderedPair> pairs_of(const oracle::Matrix& leq,
                                                  const std::vector<std::string>& ids) {
  std::vector<ordprox::OrderedPair> out;
  for (std::size_t a = 0; a < leq.size(); ++a)
    for (std::size_t b = 0; b < leq.size(); ++b)
      if (leq[a][b]) out.emplace_back(ids[a], ids[b]);
  return out;
}

// Every triple that holds on the circular sequence.
inline std::vector<ordprox::OrderedTriple> triples_of(const std::vector<std::size_t>& circle,
                                                      const std::vector<std::string>& ids) {
  std::vector<ordprox::OrderedTriple> out;
  const std::size_t n = circle.size();
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      for (std::size_t c = 0; c < n; ++c)
        if (a != b && b != c && a != c && oracle::cyclic_triple(circle, a, b, c))
          out.push_back({ids[a], ids[b], ids[c]});
  return out;
}

inline ordprox::TotalOrder total_order(const std::vector<std::size_t>& ascending,
                                       const std::vector<std::string>& ids) {
  oracle::Matrix leq = oracle::square(ids.size());
  for (std::size_t i = 0; i < ascending.size(); ++i)
    for (std::size_t j = i; j < ascending.size(); ++j) leq[ascending[i]][ascending[j]] = 1;
  return ordprox::validate_total_order(ids, pairs_of(leq, ids));
}

// Center at `c` plus a regular polygon of `sides` vertices at radius r,
// first vertex at angle `phase`.
inline std::vector<ordprox::Point2> fan(std::size_t sides, double r, ordprox::Point2 c = {0, 0},
                                        double phase = 0.0) {
  std::vector<ordprox::Point2> pts{c};
  for (std::size_t i = 0; i < sides; ++i) {
    const double a = phase + 2.0 * std::numbers::pi * static_cast<double>(i) / sides;
    pts.push_back({c.x + r * std::cos(a), c.y + r * std::sin(a)});
  }
  return pts;
}

// Regular hexagon fan whose 6 triangles each have the given area.
inline std::vector<ordprox::Point2> hexagon_fan(double triangle_area = 1.0) {
  // Equilateral triangle of side s has area sqrt(3)/4 s^2; here s = r.
  const double r = std::sqrt(4.0 * triangle_area / std::sqrt(3.0));
  return fan(6, r);
}

// Triangular-lattice patch: every lattice point within `rings` hex steps of
// the origin (19 points, 24 triangles for rings = 2).
inline std::vector<ordprox::Point2> lattice_patch(int rings) {
  std::vector<ordprox::Point2> pts;
  const double h = std::sqrt(3.0) / 2.0;
  for (int a = -rings; a <= rings; ++a)
    for (int b = -rings; b <= rings; ++b) {
      const int c = -a - b;
      if (std::abs(c) > rings) continue;
      pts.push_back({a + 0.5 * b, h * b});
    }
  return pts;
}

// Four triangles around the origin whose centroids are (1,0),(0,1),(-1,0),
// (0,-1) scaled by `scale`.
inline std::vector<ordprox::Point2> square_fan(double scale = 1.0) {
  const double s = 1.5 * scale;
  return {{0, 0}, {s, -s}, {s, s}, {-s, s}, {-s, -s}};
}

inline ordprox::FramePairRecord record(ordprox::FrameId frame, std::size_t feature,
                                       double measure,
                                       ordprox::MeasureKind kind = ordprox::MeasureKind::Area) {
  return {frame, feature, measure, kind};
}

}  // namespace fixtures
