#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

#include "ordprox/order.hpp"

namespace ordprox {

/// Labeled directed graph with optional real edge weights. No duplicate
/// (src, dst) pairs; every edge endpoint is a declared vertex.
class DirectedGraph {
 public:
  using EdgeKey = std::pair<std::size_t, std::size_t>;
  using EdgeMap = std::map<EdgeKey, std::optional<double>>;

  DirectedGraph() = default;
  explicit DirectedGraph(std::vector<std::string> vertices);

  /// Index of `label`, adding it if absent.
  std::size_t ensure_vertex(const std::string& label);

  /// Returns false (and leaves the graph unchanged) if the edge already exists.
  bool add_edge(std::size_t src, std::size_t dst, std::optional<double> weight = std::nullopt);
  bool add_edge(std::string_view src, std::string_view dst,
                std::optional<double> weight = std::nullopt);
  void remove_edge(std::size_t src, std::size_t dst);

  bool has_edge(std::size_t src, std::size_t dst) const { return edges_.count({src, dst}) != 0; }
  bool has_edge(std::string_view src, std::string_view dst) const;
  std::optional<double> weight(std::size_t src, std::size_t dst) const;

  std::size_t vertex_count() const noexcept { return vertices_.size(); }
  std::size_t edge_count() const noexcept { return edges_.size(); }
  const std::vector<std::string>& vertices() const noexcept { return vertices_; }
  const std::string& label(std::size_t v) const { return vertices_.at(v); }
  bool contains_vertex(std::string_view label) const;
  /// Throws Error(UnknownElement) for undeclared labels.
  std::size_t index_of(std::string_view label) const;
  const EdgeMap& edges() const noexcept { return edges_; }

  std::vector<std::size_t> out_neighbors(std::size_t v) const;
  std::size_t out_degree(std::size_t v) const;
  std::size_t in_degree(std::size_t v) const;

  /// (src label, dst label) for every edge, sorted.
  std::vector<std::pair<std::string, std::string>> labeled_edges() const;

 private:
  std::vector<std::string> vertices_;
  std::unordered_map<std::string, std::size_t> index_;
  EdgeMap edges_;
};

/// a -> b for every a ≤ b with a != b.
DirectedGraph order_graph(const PartialOrder& order);
DirectedGraph order_graph(const TotalOrder& order);
/// a -> b and b -> c for every triple [a, b, c].
DirectedGraph order_graph(const CyclicOrder& order);
DirectedGraph order_graph(const OrderSpace& space);

/// Minimal reachability-preserving edge subset. Accepts DAGs (the unique
/// transitive reduction) and the order graphs of cyclic orders, including a
/// bare Hamiltonian cycle, whose reduction is taken to be the successor cycle.
/// Retained edges keep their weights. Anything else throws UnsupportedGraph.
DirectedGraph transitive_reduction(const DirectedGraph& graph);

DirectedGraph hasse(const OrderSpace& space);

/// a -> b iff the induced proximity of the matching kind is Near and a != b.
DirectedGraph proximity_graph(const OrderSpace& space);

struct EquivalenceReport {
  bool equivalent = false;
  bool same_vertices = false;
  std::vector<std::pair<std::string, std::string>> only_in_proximity;
  std::vector<std::pair<std::string, std::string>> only_in_hasse;
};

/// Vertex-set and edge-set comparison of two graphs (weights ignored).
EquivalenceReport compare_graphs(const DirectedGraph& proximity, const DirectedGraph& hasse);

/// proximity_graph(space) against hasse(space).
EquivalenceReport check_equivalence(const OrderSpace& space);

/// Deterministic text rendering, format "dot" or "json". Vertices and edges
/// are sorted by label. DOT edge weights print with 6 significant digits.
std::string export_graph(const DirectedGraph& graph, std::string_view format);

}  // namespace ordprox
