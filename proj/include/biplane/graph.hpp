#pragma once

#include <map>
#include <vector>

#include "biplane/geom.hpp"

namespace biplane {

/// Point set plus a set of straight-segment edges. Edge order is preserved
/// (edge indices are meaningful to the biplane test's canonical layering).
class GeometricGraph {
 public:
  GeometricGraph() = default;
  /// Throws GeometryError on duplicate edges, out-of-range endpoints, or (for
  /// Relaxed point sets) a vertex lying inside an edge.
  GeometricGraph(PointSet points, std::vector<Edge> edges);

  const PointSet& points() const { return points_; }
  std::span<const Edge> edges() const { return edges_; }
  std::size_t vertex_count() const { return points_.size(); }
  std::size_t edge_count() const { return edges_.size(); }

  bool contains(Edge e) const;
  std::size_t index_of(Edge e) const;  // throws when absent

  /// Copy with one more edge appended.
  GeometricGraph with_edge(Edge e) const;

  std::vector<std::vector<Vertex>> adjacency() const;

  friend bool operator==(const GeometricGraph& g, const GeometricGraph& h) {
    return g.points_ == h.points_ && g.edges_ == h.edges_;
  }

 private:
  PointSet points_;
  std::vector<Edge> edges_;
  std::map<Edge, std::size_t> index_;
};

/// True iff no two open segments of `edges` cross.
bool is_plane(const PointSet& points, std::span<const Edge> edges);

/// First crossing pair found by pairwise testing, if any.
std::optional<std::pair<Edge, Edge>> find_crossing(const PointSet& points, std::span<const Edge> edges);

/// Sorted copy.
std::vector<Edge> sorted(std::span<const Edge> edges);

}  // namespace biplane
