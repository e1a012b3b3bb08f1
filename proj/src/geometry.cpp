#include "ordprox/geometry.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>
#include <numbers>
#include <numeric>
#include <string>

#include "ordprox/error.hpp"

namespace ordprox {

double orient2d(const Point2& a, const Point2& b, const Point2& c) {
  return (b.x - a.x) * (c.y - a.y) - (b.y - a.y) * (c.x - a.x);
}

double incircle(const Point2& a, const Point2& b, const Point2& c, const Point2& d) {
  const double adx = a.x - d.x, ady = a.y - d.y;
  const double bdx = b.x - d.x, bdy = b.y - d.y;
  const double cdx = c.x - d.x, cdy = c.y - d.y;
  const double alift = adx * adx + ady * ady;
  const double blift = bdx * bdx + bdy * bdy;
  const double clift = cdx * cdx + cdy * cdy;
  return alift * (bdx * cdy - cdx * bdy) + blift * (cdx * ady - adx * cdy) +
         clift * (adx * bdy - bdx * ady);
}

double distance(const Point2& a, const Point2& b) { return std::hypot(a.x - b.x, a.y - b.y); }

double triangle_area(const Triangle& t, std::span<const Point2> points) {
  return 0.5 * std::abs(orient2d(points[t.v[0]], points[t.v[1]], points[t.v[2]]));
}

Point2 centroid(const Triangle& t, std::span<const Point2> points) {
  const auto& a = points[t.v[0]];
  const auto& b = points[t.v[1]];
  const auto& c = points[t.v[2]];
  return {(a.x + b.x + c.x) / 3.0, (a.y + b.y + c.y) / 3.0};
}

double orientation_angle(const Point2& p, const Point2& origin) {
  if (p == origin) {
    throw Error(ErrorCode::CoincidentPoint, "orientation angle of a point about itself");
  }
  const double angle = std::atan2(p.y - origin.y, p.x - origin.x);
  return angle == -std::numbers::pi ? std::numbers::pi : angle;
}

namespace {

constexpr std::size_t kGhost = std::numeric_limits<std::size_t>::max();

bool lex_less(const Point2& a, const Point2& b) {
  return a.x < b.x || (a.x == b.x && a.y < b.y);
}

// Triangulation of the plane closed by a single vertex at infinity: every
// convex-hull edge (a, b) carries a ghost face (a, b, kGhost) facing outward.
// A ghost's "circumcircle" is the open half-plane beyond its hull edge plus
// the open edge itself.
class BowyerWatson {
 public:
  BowyerWatson(std::span<const Point2> points, double eps) : pts_(points), eps_(eps) {}

  void seed(std::size_t a, std::size_t b, std::size_t c) {
    if (orient2d(pts_[a], pts_[b], pts_[c]) < 0) std::swap(b, c);
    add_face(a, b, c);
    add_face(b, a, kGhost);
    add_face(c, b, kGhost);
    add_face(a, c, kGhost);
  }

  void insert(std::size_t p) {
    const std::size_t start = locate(pts_[p]);
    std::vector<std::size_t> cavity{start};
    std::vector<unsigned char> in_cavity(faces_.size(), 0);
    in_cavity[start] = 1;
    for (std::size_t i = 0; i < cavity.size(); ++i) {
      const auto v = faces_[cavity[i]].v;
      for (int e = 0; e < 3; ++e) {
        auto it = owner_.find({v[(e + 1) % 3], v[e]});
        if (it == owner_.end()) continue;
        const std::size_t nb = it->second;
        if (!in_cavity[nb] && conflicts(faces_[nb].v, pts_[p])) {
          in_cavity[nb] = 1;
          cavity.push_back(nb);
        }
      }
    }

    std::vector<std::pair<std::size_t, std::size_t>> boundary;
    for (auto f : cavity) {
      const auto v = faces_[f].v;
      for (int e = 0; e < 3; ++e) {
        auto it = owner_.find({v[(e + 1) % 3], v[e]});
        if (it == owner_.end() || !in_cavity[it->second]) boundary.emplace_back(v[e], v[(e + 1) % 3]);
      }
    }
    for (auto f : cavity) kill_face(f);
    for (auto [a, b] : boundary) {
      if (b == kGhost) {
        add_face(p, a, kGhost);
      } else if (a == kGhost) {
        add_face(b, p, kGhost);
      } else {
        add_face(a, b, p);
      }
    }
  }

  // Enforces the lexicographic diagonal rule on cocircular quadrilaterals.
  void resolve_cocircular_ties() {
    const std::size_t max_passes = 4 * pts_.size() + 4;
    for (std::size_t pass = 0; pass < max_passes; ++pass) {
      bool flipped = false;
      for (std::size_t f = 0; f < faces_.size(); ++f) {
        if (!faces_[f].alive || is_ghost(faces_[f].v)) continue;
        for (int e = 0; e < 3 && faces_[f].alive; ++e) {
          const auto v = faces_[f].v;
          const std::size_t a = v[e], b = v[(e + 1) % 3], c = v[(e + 2) % 3];
          auto it = owner_.find({b, a});
          if (it == owner_.end() || is_ghost(faces_[it->second].v)) continue;
          const std::size_t g = it->second;
          const std::size_t d = third_vertex(faces_[g].v, b, a);
          if (std::abs(incircle(pts_[a], pts_[b], pts_[c], pts_[d])) > eps_) continue;
          const std::size_t smallest = std::min({a, b, c, d}, [&](std::size_t i, std::size_t j) {
            return lex_less(pts_[i], pts_[j]);
          });
          if (smallest == a || smallest == b) continue;
          if (orient2d(pts_[a], pts_[d], pts_[c]) <= eps_ ||
              orient2d(pts_[d], pts_[b], pts_[c]) <= eps_) {
            continue;
          }
          kill_face(f);
          kill_face(g);
          add_face(a, d, c);
          add_face(d, b, c);
          flipped = true;
        }
      }
      if (!flipped) return;
    }
  }

  std::vector<Triangle> finite_triangles() const {
    std::vector<Triangle> out;
    for (const auto& f : faces_) {
      if (!f.alive || is_ghost(f.v)) continue;
      auto v = f.v;
      std::rotate(v.begin(), std::min_element(v.begin(), v.end()), v.end());
      out.push_back(Triangle{v});
    }
    std::sort(out.begin(), out.end());
    return out;
  }

 private:
  struct Face {
    std::array<std::size_t, 3> v;
    bool alive;
  };

  static bool is_ghost(const std::array<std::size_t, 3>& v) { return v[2] == kGhost; }

  static std::size_t third_vertex(const std::array<std::size_t, 3>& v, std::size_t a,
                                  std::size_t b) {
    for (auto x : v)
      if (x != a && x != b) return x;
    return kGhost;
  }

  void add_face(std::size_t a, std::size_t b, std::size_t c) {
    const std::size_t id = faces_.size();
    faces_.push_back({{a, b, c}, true});
    owner_[{a, b}] = id;
    owner_[{b, c}] = id;
    owner_[{c, a}] = id;
  }

  void kill_face(std::size_t f) {
    faces_[f].alive = false;
    const auto v = faces_[f].v;
    for (int e = 0; e < 3; ++e) {
      auto it = owner_.find({v[e], v[(e + 1) % 3]});
      if (it != owner_.end() && it->second == f) owner_.erase(it);
    }
  }

  bool conflicts(const std::array<std::size_t, 3>& v, const Point2& p) const {
    if (!is_ghost(v)) return incircle(pts_[v[0]], pts_[v[1]], pts_[v[2]], p) > eps_;
    const Point2& a = pts_[v[0]];
    const Point2& b = pts_[v[1]];
    const double side = orient2d(a, b, p);
    if (side > eps_) return true;
    if (side < -eps_) return false;
    const double along = (p.x - a.x) * (b.x - a.x) + (p.y - a.y) * (b.y - a.y);
    const double back = (p.x - b.x) * (a.x - b.x) + (p.y - b.y) * (a.y - b.y);
    return along > 0 && back > 0;
  }

  // A face in conflict with p: the finite face containing it, or else the
  // ghost whose hull edge p sees most squarely.
  std::size_t locate(const Point2& p) const {
    std::size_t best_ghost = kGhost;
    double best_side = 0.0;
    for (std::size_t f = 0; f < faces_.size(); ++f) {
      if (!faces_[f].alive) continue;
      const auto& v = faces_[f].v;
      if (is_ghost(v)) {
        const double side = orient2d(pts_[v[0]], pts_[v[1]], p);
        if (conflicts(v, p) && (best_ghost == kGhost || side > best_side)) {
          best_ghost = f;
          best_side = side;
        }
        continue;
      }
      const Point2 &a = pts_[v[0]], &b = pts_[v[1]], &c = pts_[v[2]];
      if (orient2d(a, b, p) >= -eps_ && orient2d(b, c, p) >= -eps_ &&
          orient2d(c, a, p) >= -eps_ && conflicts(v, p)) {
        return f;
      }
    }
    if (best_ghost != kGhost) return best_ghost;
    for (std::size_t f = 0; f < faces_.size(); ++f)
      if (faces_[f].alive && conflicts(faces_[f].v, p)) return f;
    throw Error(ErrorCode::DuplicatePoint, "point conflicts with no triangle; it is within "
                                           "tolerance of an existing vertex");
  }

  std::span<const Point2> pts_;
  double eps_;
  std::vector<Face> faces_;
  std::map<std::pair<std::size_t, std::size_t>, std::size_t> owner_;
};

}  // namespace

Triangulation delaunay(std::span<const Point2> points, const GeometryOptions& options) {
  if (points.size() < 3) {
    throw Error(ErrorCode::TooFewPoints,
                "triangulation needs at least 3 points, got " + std::to_string(points.size()));
  }
  for (const auto& p : points) {
    if (!std::isfinite(p.x) || !std::isfinite(p.y)) {
      throw Error(ErrorCode::ParseError, "non-finite point coordinate");
    }
  }

  std::vector<std::size_t> order(points.size());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t i, std::size_t j) { return lex_less(points[i], points[j]); });
  for (std::size_t i = 1; i < order.size(); ++i) {
    if (points[order[i]] == points[order[i - 1]]) {
      const auto lo = std::min(order[i], order[i - 1]), hi = std::max(order[i], order[i - 1]);
      throw Error(ErrorCode::DuplicatePoint,
                  "points " + std::to_string(lo) + " and " + std::to_string(hi) + " coincide",
                  {std::to_string(lo), std::to_string(hi)});
    }
  }

  const double eps = options.epsilon;
  std::size_t third = order.size();
  for (std::size_t i = 2; i < order.size(); ++i) {
    if (std::abs(orient2d(points[order[0]], points[order[1]], points[order[i]])) > eps) {
      third = i;
      break;
    }
  }
  if (third == order.size()) {
    throw Error(ErrorCode::AllCollinear, "all points are collinear");
  }

  BowyerWatson builder(points, eps);
  builder.seed(order[0], order[1], order[third]);
  for (std::size_t i = 2; i < order.size(); ++i) {
    if (i != third) builder.insert(order[i]);
  }
  builder.resolve_cocircular_ties();

  Triangulation out;
  out.points.assign(points.begin(), points.end());
  out.triangles = builder.finite_triangles();
  return out;
}

}  // namespace ordprox
