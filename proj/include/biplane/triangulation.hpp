#pragma once

#include <array>
#include <optional>
#include <unordered_map>
#include <unordered_set>
#include <vector>

#include "biplane/graph.hpp"

namespace biplane {

/// Counterclockwise vertex triple.
struct Triangle {
  std::array<Vertex, 3> v;
  friend auto operator<=>(const Triangle&, const Triangle&) = default;
};

enum class FlipCheck { Flippable, NotConvex, HullEdge, Constrained, Missing };

class NotPlaneError : public GeometryError {
 public:
  NotPlaneError(Edge e, Edge f);
  Edge first;
  Edge second;
};

/// Triangulation of a Strict point set stored as a half-edge structure:
/// every bounded face is a counterclockwise triangle, the outer face is the
/// reversed convex hull. Adjacent-face lookup and flips are constant time.
class Triangulation {
 public:
  /// Triangulation containing every edge of a plane graph. Points are swept in
  /// lexicographic order to build an initial triangulation, then each input edge
  /// is recovered by flipping the edges it crosses. Input edges become
  /// constrained. Throws NotPlaneError if two input edges cross.
  static Triangulation complete(const GeometricGraph& g);
  static Triangulation complete(const PointSet& points, std::span<const Edge> constraints);

  const PointSet& points() const { return points_; }
  std::size_t vertex_count() const { return points_.size(); }
  std::size_t edge_count() const { return origin_.size() / 2; }
  std::vector<Edge> edges() const;  // sorted
  bool contains(Edge e) const { return half_.contains(key(e.a, e.b)); }
  bool is_hull_edge(Edge e) const;
  /// Counterclockwise hull starting at the lexicographically smallest point.
  const std::vector<std::size_t>& hull() const { return hull_; }
  std::vector<Triangle> triangles() const;  // sorted, each rotated to start at its smallest vertex

  /// Third vertices of the triangles left and right of e.a -> e.b.
  struct Apexes {
    std::optional<Vertex> left;
    std::optional<Vertex> right;
  };
  Apexes apexes(Edge e) const;

  FlipCheck flip_check(Edge e) const;
  bool is_flippable(Edge e) const { return flip_check(e) == FlipCheck::Flippable; }
  std::vector<Edge> flippable_edges() const;
  /// Replaces e by the other diagonal of its quadrilateral and returns it.
  /// Throws GeometryError unless flip_check(e) is Flippable.
  Edge flip(Edge e);
  Triangulation flipped(Edge e) const;

  void constrain(Edge e);
  void release(Edge e) { constrained_.erase(e.key()); }
  bool is_constrained(Edge e) const { return constrained_.contains(e.key()); }

  /// Neighbours of v in counterclockwise order.
  std::vector<Vertex> rotation(Vertex v) const;

  /// Full structural self-check; on failure `why` says what broke.
  bool check_invariants(std::string* why = nullptr) const;

  friend bool operator==(const Triangulation& s, const Triangulation& t) {
    return s.points_ == t.points_ && s.edges() == t.edges();
  }

 private:
  using HalfEdge = std::uint32_t;
  static constexpr HalfEdge kNone = ~HalfEdge{0};

  static std::uint64_t key(Vertex a, Vertex b) { return (std::uint64_t{a} << 32) | b; }

  Triangulation(PointSet points, const std::vector<Triangle>& faces);

  HalfEdge find(Vertex a, Vertex b) const;
  Vertex dest(HalfEdge h) const { return origin_[twin_[h]]; }
  bool quad_convex(HalfEdge h) const;
  void flip_half_edge(HalfEdge h);
  void insert_constraint(Edge e);

  PointSet points_;
  std::vector<Vertex> origin_;
  std::vector<HalfEdge> twin_;
  std::vector<HalfEdge> next_;
  std::vector<char> outer_;
  std::vector<HalfEdge> out_;  // one outgoing half-edge per vertex
  std::unordered_map<std::uint64_t, HalfEdge> half_;
  std::unordered_set<std::uint64_t> constrained_;
  std::vector<std::size_t> hull_;
};

/// Every triangulation of a small Strict point set, by breadth-first search over
/// the flip graph. Throws GeometryError when |S| exceeds `cap`.
std::vector<Triangulation> enumerate_triangulations(const PointSet& points, std::size_t cap = 9);

}  // namespace biplane
