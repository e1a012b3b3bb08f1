#pragma once
// Brute-force reference implementations used only by tests. Nothing here
// calls into the library, so agreement between the two is meaningful.

#include <algorithm>
#include <array>
#include <cmath>
#include <cstddef>
#include <cstdint>
#include <numeric>
#include <random>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace oracle {

using Matrix = std::vector<std::vector<char>>;
using Edge = std::pair<std::size_t, std::size_t>;

inline Matrix square(std::size_t n) { return Matrix(n, std::vector<char>(n, 0)); }

// reach[i][j]: a path of length >= 0 leads from i to j.
inline Matrix floyd_warshall(std::size_t n, const std::vector<Edge>& edges) {
  Matrix reach = square(n);
  for (std::size_t i = 0; i < n; ++i) reach[i][i] = 1;
  for (auto [a, b] : edges) reach[a][b] = 1;
  for (std::size_t k = 0; k < n; ++k)
    for (std::size_t i = 0; i < n; ++i)
      if (reach[i][k])
        for (std::size_t j = 0; j < n; ++j)
          if (reach[k][j]) reach[i][j] = 1;
  return reach;
}

// Removing any single edge changes the reachability matrix.
inline bool edge_minimal(std::size_t n, const std::vector<Edge>& edges) {
  const Matrix full = floyd_warshall(n, edges);
  for (std::size_t skip = 0; skip < edges.size(); ++skip) {
    std::vector<Edge> rest;
    for (std::size_t e = 0; e < edges.size(); ++e)
      if (e != skip) rest.push_back(edges[e]);
    if (floyd_warshall(n, rest) == full) return false;
  }
  return true;
}

inline bool is_partial_order(const Matrix& leq) {
  const std::size_t n = leq.size();
  for (std::size_t a = 0; a < n; ++a) {
    if (!leq[a][a]) return false;
    for (std::size_t b = 0; b < n; ++b) {
      if (a != b && leq[a][b] && leq[b][a]) return false;
      for (std::size_t c = 0; c < n; ++c)
        if (leq[a][b] && leq[b][c] && !leq[a][c]) return false;
    }
  }
  return true;
}

// Every labeled poset on n elements, as a <= matrix. Each unordered pair is
// either incomparable or ordered one way; transitivity filters the rest.
inline std::vector<Matrix> all_posets(std::size_t n) {
  std::vector<Edge> slots;
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = a + 1; b < n; ++b) slots.emplace_back(a, b);
  std::size_t combos = 1;
  for (std::size_t i = 0; i < slots.size(); ++i) combos *= 3;

  std::vector<Matrix> out;
  for (std::size_t code = 0; code < combos; ++code) {
    Matrix leq = square(n);
    for (std::size_t i = 0; i < n; ++i) leq[i][i] = 1;
    std::size_t rest = code;
    for (auto [a, b] : slots) {
      const auto digit = rest % 3;
      rest /= 3;
      if (digit == 1) leq[a][b] = 1;
      if (digit == 2) leq[b][a] = 1;
    }
    if (is_partial_order(leq)) out.push_back(std::move(leq));
  }
  return out;
}

// a < b with nothing strictly between.
inline std::set<Edge> covers(const Matrix& leq) {
  const std::size_t n = leq.size();
  std::set<Edge> out;
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) {
      if (a == b || !leq[a][b]) continue;
      bool between = false;
      for (std::size_t x = 0; x < n && !between; ++x)
        between = x != a && x != b && leq[a][x] && leq[x][b];
      if (!between) out.insert({a, b});
    }
  return out;
}

// [a, b, c] for a circular sequence: with p = position,
// (pa < pb < pc) or (pb < pc < pa) or (pc < pa < pb).
inline bool cyclic_triple(const std::vector<std::size_t>& circle, std::size_t a, std::size_t b,
                          std::size_t c) {
  std::vector<std::size_t> pos(circle.size());
  for (std::size_t i = 0; i < circle.size(); ++i) pos[circle[i]] = i;
  const auto pa = pos[a], pb = pos[b], pc = pos[c];
  return (pa < pb && pb < pc) || (pb < pc && pc < pa) || (pc < pa && pa < pb);
}

// Cyclic proximity evaluated straight from its definition:
// near(a, b) = 0 iff [a, b, c] for some c and no x outside {a, b} has [a, x, b].
// Returns 0 near, 1 far.
inline int cyclic_near(const std::vector<std::size_t>& circle, std::size_t a, std::size_t b) {
  const std::size_t n = circle.size();
  if (a == b) return 1;
  bool some_c = false;
  for (std::size_t c = 0; c < n; ++c)
    if (c != a && c != b && cyclic_triple(circle, a, b, c)) some_c = true;
  if (!some_c) return 1;
  for (std::size_t x = 0; x < n; ++x)
    if (x != a && x != b && cyclic_triple(circle, a, x, b)) return 1;
  return 0;
}

// Sign of the incircle determinant in exact rational arithmetic. Doubles
// convert to rationals without rounding.
inline int exact_incircle_sign(std::array<double, 2> a, std::array<double, 2> b,
                               std::array<double, 2> c, std::array<double, 2> d) {
  using Q = boost::multiprecision::cpp_rational;
  const Q adx = Q(a[0]) - Q(d[0]), ady = Q(a[1]) - Q(d[1]);
  const Q bdx = Q(b[0]) - Q(d[0]), bdy = Q(b[1]) - Q(d[1]);
  const Q cdx = Q(c[0]) - Q(d[0]), cdy = Q(c[1]) - Q(d[1]);
  const Q det = (adx * adx + ady * ady) * (bdx * cdy - cdx * bdy) -
                (bdx * bdx + bdy * bdy) * (adx * cdy - cdx * ady) +
                (cdx * cdx + cdy * cdy) * (adx * bdy - bdx * ady);
  return det > 0 ? 1 : (det < 0 ? -1 : 0);
}

// Area of the convex hull, Andrew's monotone chain plus shoelace.
inline double hull_area(std::vector<std::array<double, 2>> pts) {
  std::sort(pts.begin(), pts.end());
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
  if (pts.size() < 3) return 0.0;
  auto cross = [](const auto& o, const auto& a, const auto& b) {
    return (a[0] - o[0]) * (b[1] - o[1]) - (a[1] - o[1]) * (b[0] - o[0]);
  };
  std::vector<std::array<double, 2>> hull(2 * pts.size());
  std::size_t k = 0;
  for (std::size_t i = 0; i < pts.size(); ++i) {
    while (k >= 2 && cross(hull[k - 2], hull[k - 1], pts[i]) <= 0) --k;
    hull[k++] = pts[i];
  }
  for (std::size_t i = pts.size() - 1, t = k + 1; i-- > 0;) {
    while (k >= t && cross(hull[k - 2], hull[k - 1], pts[i]) <= 0) --k;
    hull[k++] = pts[i];
  }
  hull.resize(k - 1);
  double twice = 0.0;
  for (std::size_t i = 0; i < hull.size(); ++i) {
    const auto& p = hull[i];
    const auto& q = hull[(i + 1) % hull.size()];
    twice += p[0] * q[1] - q[0] * p[1];
  }
  return std::abs(twice) / 2.0;
}

// Per-frame subgraph extraction, following the published pseudocode line by
// line with 1-based indices. `chain_frames[i]` is the frame of X(i+1) and
// `labels[i]` its vertex label.
struct Subgraph {
  std::set<std::string> vertices;
  std::set<std::pair<std::string, std::string>> edges;
};

inline Subgraph extract_frame_subgraph(const std::vector<std::int64_t>& chain_frames,
                                       const std::vector<std::string>& labels, std::int64_t k) {
  Subgraph g;
  const std::size_t length = labels.size();
  auto X = [&](std::size_t ind) { return labels[ind - 1]; };
  for (std::size_t ind = 1; ind <= length; ++ind) {
    if (chain_frames[ind - 1] != k) continue;
    if (length == 1) {
      g.vertices.insert(X(1));
    } else if (ind == 1) {
      g.vertices.insert({X(ind), X(ind + 1)});
      g.edges.insert({X(ind), X(ind + 1)});
    } else if (ind == length) {
      g.vertices.insert({X(ind - 1), X(ind)});
      g.edges.insert({X(ind - 1), X(ind)});
    } else {
      g.vertices.insert({X(ind - 1), X(ind), X(ind + 1)});
      g.edges.insert({X(ind - 1), X(ind)});
      g.edges.insert({X(ind), X(ind + 1)});
    }
  }
  return g;
}

// Hand-rolled generators for property tests.
struct Gen {
  std::mt19937_64 rng;
  explicit Gen(std::uint64_t seed) : rng(seed) {}

  std::size_t below(std::size_t n) {
    return std::uniform_int_distribution<std::size_t>(0, n - 1)(rng);
  }
  std::size_t between(std::size_t lo, std::size_t hi) { return lo + below(hi - lo + 1); }
  double unit() { return std::uniform_real_distribution<double>(0.0, 1.0)(rng); }
  bool coin(double p) { return unit() < p; }

  std::vector<std::size_t> permutation(std::size_t n) {
    std::vector<std::size_t> p(n);
    std::iota(p.begin(), p.end(), 0);
    std::shuffle(p.begin(), p.end(), rng);
    return p;
  }

  // Random DAG: edges only go forward in a random topological order.
  std::vector<Edge> dag(std::size_t n, double density) {
    const auto topo = permutation(n);
    std::vector<Edge> edges;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j)
        if (coin(density)) edges.emplace_back(topo[i], topo[j]);
    return edges;
  }

  // Random poset: reflexive-transitive closure of a random DAG.
  Matrix poset(std::size_t n) { return floyd_warshall(n, dag(n, unit())); }
};

inline std::vector<std::string> names(std::size_t n, const std::string& prefix = "e") {
  std::vector<std::string> out;
  for (std::size_t i = 0; i < n; ++i) out.push_back(prefix + std::to_string(i));
  return out;
}

}  // namespace oracle
