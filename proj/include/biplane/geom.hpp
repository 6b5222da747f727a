#pragma once

#include <compare>
#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace biplane {

using Coord = std::int64_t;
using Vertex = std::uint32_t;

/// Largest admissible absolute coordinate. Keeps every orientation
/// determinant inside 128-bit intermediate arithmetic with room to spare.
inline constexpr Coord kCoordLimit = Coord{1} << 30;

struct Point {
  Coord x = 0;
  Coord y = 0;
  friend auto operator<=>(const Point&, const Point&) = default;
};

enum class Orientation : int { Clockwise = -1, Collinear = 0, CounterClockwise = 1 };

/// Sign of the determinant (q - p) x (r - p), computed exactly.
Orientation orientation(const Point& p, const Point& q, const Point& r);

inline int sign(Orientation o) { return static_cast<int>(o); }

/// True iff the open segments ab and cd share a point. Segments that only
/// share an endpoint do not cross; collinear overlapping segments do.
bool segments_cross(const Point& a, const Point& b, const Point& c, const Point& d);

/// True iff p lies in the open interior of segment ab.
bool strictly_inside_segment(const Point& p, const Point& a, const Point& b);

/// Undirected edge stored with a < b.
struct Edge {
  Vertex a = 0;
  Vertex b = 0;
  friend auto operator<=>(const Edge&, const Edge&) = default;

  std::uint64_t key() const { return (std::uint64_t{a} << 32) | b; }
  static Edge from_key(std::uint64_t k) {
    return {static_cast<Vertex>(k >> 32), static_cast<Vertex>(k & 0xffffffffu)};
  }
  bool has(Vertex v) const { return a == v || b == v; }
};

/// Canonical edge between two distinct vertices.
Edge make_edge(Vertex u, Vertex v);

enum class Strictness { Strict, Relaxed };

class GeometryError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct ValidationReport {
  bool ok = true;
  std::string message;
  std::vector<std::size_t> witness;  // offending point indices
};

/// Brute-force general-position check. Strict: distinct points, no collinear
/// triple. Relaxed: distinct points only.
ValidationReport validate(std::span<const Point> points, Strictness strictness);

/// Immutable validated point set.
class PointSet {
 public:
  PointSet() = default;
  /// Throws GeometryError when coordinates exceed kCoordLimit or validation fails.
  explicit PointSet(std::vector<Point> points, Strictness strictness = Strictness::Strict);

  std::size_t size() const { return points_.size(); }
  const Point& operator[](std::size_t i) const { return points_[i]; }
  std::span<const Point> points() const { return points_; }
  Strictness strictness() const { return strictness_; }

  friend bool operator==(const PointSet&, const PointSet&) = default;

 private:
  std::vector<Point> points_;
  Strictness strictness_ = Strictness::Strict;
};

/// Hull vertex indices in counterclockwise order, starting at the
/// lexicographically smallest point. Points interior to hull edges are dropped.
std::vector<std::size_t> convex_hull(std::span<const Point> points);
inline std::vector<std::size_t> convex_hull(const PointSet& s) { return convex_hull(s.points()); }

bool segments_cross(const PointSet& s, Edge e, Edge f);

}  // namespace biplane

template <>
struct std::hash<biplane::Edge> {
  std::size_t operator()(const biplane::Edge& e) const noexcept {
    return std::hash<std::uint64_t>{}(e.key());
  }
};
