#include "biplane/graph.hpp"

#include <algorithm>

namespace biplane {

namespace {

std::string describe(Edge e) { return "(" + std::to_string(e.a) + "," + std::to_string(e.b) + ")"; }

}  // namespace

GeometricGraph::GeometricGraph(PointSet points, std::vector<Edge> edges)
    : points_(std::move(points)), edges_(std::move(edges)) {
  const std::size_t n = points_.size();
  for (std::size_t i = 0; i < edges_.size(); ++i) {
    auto& e = edges_[i];
    e = make_edge(e.a, e.b);
    if (e.b >= n) throw GeometryError("edge " + describe(e) + " references a missing vertex");
    if (!index_.emplace(e, i).second) throw GeometryError("duplicate edge " + describe(e));
  }
  if (points_.strictness() == Strictness::Relaxed) {
    for (const auto& e : edges_) {
      for (std::size_t v = 0; v < n; ++v) {
        if (strictly_inside_segment(points_[v], points_[e.a], points_[e.b])) {
          throw GeometryError("vertex " + std::to_string(v) + " lies inside edge " + describe(e));
        }
      }
    }
  }
}

bool GeometricGraph::contains(Edge e) const { return index_.contains(e); }

std::size_t GeometricGraph::index_of(Edge e) const {
  auto it = index_.find(e);
  if (it == index_.end()) throw GeometryError("edge " + describe(e) + " not in graph");
  return it->second;
}

GeometricGraph GeometricGraph::with_edge(Edge e) const {
  auto edges = edges_;
  edges.push_back(e);
  return GeometricGraph(points_, std::move(edges));
}

std::vector<std::vector<Vertex>> GeometricGraph::adjacency() const {
  std::vector<std::vector<Vertex>> adj(points_.size());
  for (const auto& e : edges_) {
    adj[e.a].push_back(e.b);
    adj[e.b].push_back(e.a);
  }
  for (auto& row : adj) std::sort(row.begin(), row.end());
  return adj;
}

std::optional<std::pair<Edge, Edge>> find_crossing(const PointSet& points, std::span<const Edge> edges) {
  for (std::size_t i = 0; i < edges.size(); ++i) {
    for (std::size_t j = i + 1; j < edges.size(); ++j) {
      if (segments_cross(points, edges[i], edges[j])) return std::pair{edges[i], edges[j]};
    }
  }
  return std::nullopt;
}

bool is_plane(const PointSet& points, std::span<const Edge> edges) {
  return !find_crossing(points, edges).has_value();
}

std::vector<Edge> sorted(std::span<const Edge> edges) {
  std::vector<Edge> out(edges.begin(), edges.end());
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace biplane
