#include "ordprox/graph.hpp"

#include <algorithm>
#include <cctype>
#include <cstdio>
#include <regex>
#include <sstream>

#include <json.hpp>

#include "ordprox/error.hpp"
#include "ordprox/proximity.hpp"

namespace ordprox {

// ---------------------------------------------------------------------------
// DirectedGraph

DirectedGraph::DirectedGraph(std::vector<std::string> vertices) {
  for (auto& v : vertices) {
    if (contains_vertex(v)) {
      throw Error(ErrorCode::DuplicateElement, "duplicate vertex '" + v + "'", {v});
    }
    ensure_vertex(v);
  }
}

std::size_t DirectedGraph::ensure_vertex(const std::string& label) {
  auto [it, inserted] = index_.emplace(label, vertices_.size());
  if (inserted) vertices_.push_back(label);
  return it->second;
}

bool DirectedGraph::add_edge(std::size_t src, std::size_t dst, std::optional<double> weight) {
  if (src >= vertices_.size() || dst >= vertices_.size()) {
    throw Error(ErrorCode::UnknownElement, "edge endpoint out of range");
  }
  return edges_.emplace(EdgeKey{src, dst}, weight).second;
}

bool DirectedGraph::add_edge(std::string_view src, std::string_view dst,
                             std::optional<double> weight) {
  return add_edge(index_of(src), index_of(dst), weight);
}

void DirectedGraph::remove_edge(std::size_t src, std::size_t dst) { edges_.erase({src, dst}); }

bool DirectedGraph::has_edge(std::string_view src, std::string_view dst) const {
  if (!contains_vertex(src) || !contains_vertex(dst)) return false;
  return has_edge(index_of(src), index_of(dst));
}

std::optional<double> DirectedGraph::weight(std::size_t src, std::size_t dst) const {
  auto it = edges_.find({src, dst});
  return it == edges_.end() ? std::nullopt : it->second;
}

bool DirectedGraph::contains_vertex(std::string_view label) const {
  return index_.count(std::string(label)) != 0;
}

std::size_t DirectedGraph::index_of(std::string_view label) const {
  auto it = index_.find(std::string(label));
  if (it == index_.end()) {
    throw Error(ErrorCode::UnknownElement, "unknown vertex '" + std::string(label) + "'",
                {std::string(label)});
  }
  return it->second;
}

std::vector<std::size_t> DirectedGraph::out_neighbors(std::size_t v) const {
  std::vector<std::size_t> out;
  for (auto it = edges_.lower_bound({v, 0}); it != edges_.end() && it->first.first == v; ++it)
    out.push_back(it->first.second);
  return out;
}

std::size_t DirectedGraph::out_degree(std::size_t v) const { return out_neighbors(v).size(); }

std::size_t DirectedGraph::in_degree(std::size_t v) const {
  return static_cast<std::size_t>(std::count_if(
      edges_.begin(), edges_.end(), [v](const auto& e) { return e.first.second == v; }));
}

std::vector<std::pair<std::string, std::string>> DirectedGraph::labeled_edges() const {
  std::vector<std::pair<std::string, std::string>> out;
  out.reserve(edges_.size());
  for (const auto& [key, w] : edges_) out.emplace_back(vertices_[key.first], vertices_[key.second]);
  std::sort(out.begin(), out.end());
  return out;
}

// ---------------------------------------------------------------------------
// Order and proximity graphs

DirectedGraph order_graph(const PartialOrder& order) {
  DirectedGraph g(order.elements().ids());
  for (std::size_t a = 0; a < order.size(); ++a)
    for (std::size_t b = 0; b < order.size(); ++b)
      if (a != b && order.leq(a, b)) g.add_edge(a, b);
  return g;
}

DirectedGraph order_graph(const TotalOrder& order) { return order_graph(order.relation()); }

DirectedGraph order_graph(const CyclicOrder& order) {
  DirectedGraph g(order.elements().ids());
  const std::size_t n = order.size();
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      for (std::size_t c = 0; c < n; ++c)
        if (order.triple_holds(a, b, c)) {
          g.add_edge(a, b);
          g.add_edge(b, c);
        }
  return g;
}

DirectedGraph order_graph(const OrderSpace& space) {
  return std::visit([](const auto& o) { return order_graph(o); }, space);
}

DirectedGraph proximity_graph(const OrderSpace& space) {
  const auto& ids = elements_of(space);
  DirectedGraph g(ids.ids());
  for (std::size_t a = 0; a < ids.size(); ++a)
    for (std::size_t b = 0; b < ids.size(); ++b)
      if (a != b && near(space, a, b) == Proximity::Near) g.add_edge(a, b);
  return g;
}

// ---------------------------------------------------------------------------
// Transitive reduction

namespace {

bool is_acyclic(const DirectedGraph& g) {
  const std::size_t n = g.vertex_count();
  std::vector<std::size_t> indegree(n, 0);
  for (const auto& [key, w] : g.edges()) ++indegree[key.second];
  std::vector<std::size_t> ready;
  for (std::size_t v = 0; v < n; ++v)
    if (indegree[v] == 0) ready.push_back(v);
  std::size_t seen = 0;
  while (!ready.empty()) {
    auto v = ready.back();
    ready.pop_back();
    ++seen;
    for (auto w : g.out_neighbors(v))
      if (--indegree[w] == 0) ready.push_back(w);
  }
  return seen == n;
}

// Is there a path src ~> dst of length >= 2, i.e. one avoiding the direct edge?
bool has_detour(const DirectedGraph& g, std::size_t src, std::size_t dst) {
  std::vector<unsigned char> visited(g.vertex_count(), 0);
  std::vector<std::size_t> stack;
  for (auto w : g.out_neighbors(src)) {
    if (w != dst && !visited[w]) {
      visited[w] = 1;
      stack.push_back(w);
    }
  }
  while (!stack.empty()) {
    auto v = stack.back();
    stack.pop_back();
    for (auto w : g.out_neighbors(v)) {
      if (w == dst) return true;
      if (!visited[w]) {
        visited[w] = 1;
        stack.push_back(w);
      }
    }
  }
  return false;
}

DirectedGraph without_edges(const DirectedGraph& g) { return DirectedGraph(g.vertices()); }

// Successor map if `g` is one directed cycle through every vertex.
std::optional<std::vector<std::size_t>> as_hamiltonian_cycle(const DirectedGraph& g) {
  const std::size_t n = g.vertex_count();
  if (n < 2 || g.edge_count() != n) return std::nullopt;
  std::vector<std::size_t> succ(n, n);
  for (const auto& [key, w] : g.edges()) {
    if (succ[key.first] != n) return std::nullopt;
    succ[key.first] = key.second;
  }
  std::size_t cur = 0;
  for (std::size_t step = 1; step <= n; ++step) {
    if (succ[cur] == n) return std::nullopt;
    cur = succ[cur];
    if (cur == 0) return step == n ? std::optional(succ) : std::nullopt;
  }
  return std::nullopt;
}

// In the order graph of a cyclic order on n >= 4 elements every vertex
// reaches all others except its predecessor, which is therefore recoverable.
std::optional<std::vector<std::size_t>> as_cyclic_order_graph(const DirectedGraph& g) {
  const std::size_t n = g.vertex_count();
  if (n < 4 || g.edge_count() != n * (n - 2)) return std::nullopt;
  std::vector<std::size_t> succ(n, n);
  for (std::size_t a = 0; a < n; ++a) {
    if (g.has_edge(a, a) || g.out_degree(a) != n - 2) return std::nullopt;
    std::size_t pred = n;
    for (std::size_t b = 0; b < n; ++b)
      if (b != a && !g.has_edge(a, b)) pred = b;
    if (succ[pred] != n) return std::nullopt;
    succ[pred] = a;
  }
  std::size_t cur = 0;
  for (std::size_t step = 1; step <= n; ++step) {
    cur = succ[cur];
    if (cur == 0) return step == n ? std::optional(succ) : std::nullopt;
  }
  return std::nullopt;
}

}  // namespace

DirectedGraph transitive_reduction(const DirectedGraph& graph) {
  DirectedGraph out = without_edges(graph);
  if (is_acyclic(graph)) {
    for (const auto& [key, w] : graph.edges())
      if (!has_detour(graph, key.first, key.second)) out.add_edge(key.first, key.second, w);
    return out;
  }
  auto succ = as_hamiltonian_cycle(graph);
  if (!succ) succ = as_cyclic_order_graph(graph);
  if (!succ) {
    throw Error(ErrorCode::UnsupportedGraph,
                "transitive reduction needs a DAG or the order graph of a cyclic order");
  }
  for (std::size_t v = 0; v < succ->size(); ++v)
    out.add_edge(v, (*succ)[v], graph.weight(v, (*succ)[v]));
  return out;
}

DirectedGraph hasse(const OrderSpace& space) { return transitive_reduction(order_graph(space)); }

// ---------------------------------------------------------------------------
// Equivalence

EquivalenceReport compare_graphs(const DirectedGraph& proximity, const DirectedGraph& hasse) {
  EquivalenceReport report;
  auto pv = proximity.vertices(), hv = hasse.vertices();
  std::sort(pv.begin(), pv.end());
  std::sort(hv.begin(), hv.end());
  report.same_vertices = pv == hv;

  const auto pe = proximity.labeled_edges(), he = hasse.labeled_edges();
  std::set_difference(pe.begin(), pe.end(), he.begin(), he.end(),
                      std::back_inserter(report.only_in_proximity));
  std::set_difference(he.begin(), he.end(), pe.begin(), pe.end(),
                      std::back_inserter(report.only_in_hasse));
  report.equivalent = report.same_vertices && report.only_in_proximity.empty() &&
                      report.only_in_hasse.empty();
  return report;
}

EquivalenceReport check_equivalence(const OrderSpace& space) {
  return compare_graphs(proximity_graph(space), hasse(space));
}

// ---------------------------------------------------------------------------
// Export

namespace {

bool is_dot_keyword(const std::string& s) {
  std::string lower(s.size(), '\0');
  std::transform(s.begin(), s.end(), lower.begin(),
                 [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
  return lower == "node" || lower == "edge" || lower == "graph" || lower == "digraph" ||
         lower == "subgraph" || lower == "strict";
}

std::string dot_id(const std::string& label) {
  static const std::regex plain_id("[A-Za-z_][A-Za-z0-9_]*");
  static const std::regex numeral("-?(\\.[0-9]+|[0-9]+(\\.[0-9]*)?)");
  if ((std::regex_match(label, plain_id) && !is_dot_keyword(label)) ||
      std::regex_match(label, numeral)) {
    return label;
  }
  std::string quoted = "\"";
  for (char c : label) {
    if (c == '"' || c == '\\') quoted += '\\';
    quoted += c;
  }
  quoted += '"';
  return quoted;
}

std::string six_significant(double w) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%#.6g", w);
  return buf;
}

struct SortedEdge {
  std::string src, dst;
  std::optional<double> weight;
};

std::vector<SortedEdge> sorted_edges(const DirectedGraph& g) {
  std::vector<SortedEdge> out;
  for (const auto& [key, w] : g.edges()) out.push_back({g.label(key.first), g.label(key.second), w});
  std::sort(out.begin(), out.end(), [](const SortedEdge& a, const SortedEdge& b) {
    return std::tie(a.src, a.dst) < std::tie(b.src, b.dst);
  });
  return out;
}

}  // namespace

std::string export_graph(const DirectedGraph& graph, std::string_view format) {
  auto vertices = graph.vertices();
  std::sort(vertices.begin(), vertices.end());
  const auto edges = sorted_edges(graph);

  if (format == "dot") {
    std::ostringstream os;
    os << "digraph {\n";
    for (const auto& v : vertices) os << "  " << dot_id(v) << ";\n";
    for (const auto& e : edges) {
      os << "  " << dot_id(e.src) << " -> " << dot_id(e.dst);
      if (e.weight) os << " [label=\"" << six_significant(*e.weight) << "\"]";
      os << ";\n";
    }
    os << "}\n";
    return os.str();
  }
  if (format == "json") {
    nlohmann::ordered_json doc;
    doc["vertices"] = vertices;
    doc["edges"] = nlohmann::ordered_json::array();
    for (const auto& e : edges) {
      nlohmann::ordered_json w = nullptr;
      if (e.weight) w = *e.weight;
      doc["edges"].push_back({e.src, e.dst, w});
    }
    return doc.dump();
  }
  throw Error(ErrorCode::UnknownFormat, "unknown graph format '" + std::string(format) + "'",
              {std::string(format)});
}

}  // namespace ordprox
