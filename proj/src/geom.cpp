#include "biplane/geom.hpp"

#include <algorithm>
#include <numeric>
#include <tuple>

namespace biplane {

namespace {

__extension__ typedef __int128 Wide;

Wide cross(const Point& p, const Point& q, const Point& r) {
  const Wide ax = q.x - p.x, ay = q.y - p.y;
  const Wide bx = r.x - p.x, by = r.y - p.y;
  return ax * by - ay * bx;
}

// Position of p along the dominant axis of segment ab.
Coord along(const Point& a, const Point& b, const Point& p) {
  return a.x != b.x ? p.x : p.y;
}

}  // namespace

Orientation orientation(const Point& p, const Point& q, const Point& r) {
  const Wide d = cross(p, q, r);
  if (d > 0) return Orientation::CounterClockwise;
  if (d < 0) return Orientation::Clockwise;
  return Orientation::Collinear;
}

bool strictly_inside_segment(const Point& p, const Point& a, const Point& b) {
  if (orientation(a, b, p) != Orientation::Collinear) return false;
  const Coord lo = std::min(along(a, b, a), along(a, b, b));
  const Coord hi = std::max(along(a, b, a), along(a, b, b));
  const Coord t = along(a, b, p);
  return lo < t && t < hi;
}

bool segments_cross(const Point& a, const Point& b, const Point& c, const Point& d) {
  const int o1 = sign(orientation(a, b, c));
  const int o2 = sign(orientation(a, b, d));
  const int o3 = sign(orientation(c, d, a));
  const int o4 = sign(orientation(c, d, b));

  if (o1 == 0 && o2 == 0) {
    // Collinear: open intervals on the common line must overlap.
    const Coord lo1 = std::min(along(a, b, a), along(a, b, b));
    const Coord hi1 = std::max(along(a, b, a), along(a, b, b));
    const Coord lo2 = std::min(along(a, b, c), along(a, b, d));
    const Coord hi2 = std::max(along(a, b, c), along(a, b, d));
    return std::max(lo1, lo2) < std::min(hi1, hi2);
  }
  // An endpoint on the other segment's line touches it only at that endpoint,
  // which is not part of the open segment.
  if (o1 == 0 || o2 == 0 || o3 == 0 || o4 == 0) return false;
  return o1 != o2 && o3 != o4;
}

bool segments_cross(const PointSet& s, Edge e, Edge f) {
  return segments_cross(s[e.a], s[e.b], s[f.a], s[f.b]);
}

Edge make_edge(Vertex u, Vertex v) {
  if (u == v) throw GeometryError("edge endpoints must differ (vertex " + std::to_string(u) + ")");
  return u < v ? Edge{u, v} : Edge{v, u};
}

ValidationReport validate(std::span<const Point> points, Strictness strictness) {
  const std::size_t n = points.size();
  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(),
            [&](std::size_t i, std::size_t j) { return points[i] < points[j]; });
  for (std::size_t k = 1; k < n; ++k) {
    if (points[order[k - 1]] == points[order[k]]) {
      const auto i = std::min(order[k - 1], order[k]);
      const auto j = std::max(order[k - 1], order[k]);
      return {false, "duplicate point: " + std::to_string(i) + " and " + std::to_string(j), {i, j}};
    }
  }
  if (strictness == Strictness::Relaxed) return {};

  // A collinear triple i < j < k shows up as two equal reduced directions out of i.
  struct Dir {
    Coord dx, dy;
    std::size_t j;
  };
  std::vector<Dir> dirs;
  dirs.reserve(n);
  for (std::size_t i = 0; i + 2 < n; ++i) {
    dirs.clear();
    for (std::size_t j = i + 1; j < n; ++j) {
      Coord dx = points[j].x - points[i].x;
      Coord dy = points[j].y - points[i].y;
      const Coord g = std::gcd(dx, dy);
      dx /= g;
      dy /= g;
      if (dx < 0 || (dx == 0 && dy < 0)) {
        dx = -dx;
        dy = -dy;
      }
      dirs.push_back({dx, dy, j});
    }
    std::sort(dirs.begin(), dirs.end(), [](const Dir& p, const Dir& q) {
      return std::tie(p.dx, p.dy, p.j) < std::tie(q.dx, q.dy, q.j);
    });
    for (std::size_t t = 1; t < dirs.size(); ++t) {
      if (dirs[t].dx == dirs[t - 1].dx && dirs[t].dy == dirs[t - 1].dy) {
        const std::size_t j = dirs[t - 1].j, k = dirs[t].j;
        return {false,
                "collinear points: " + std::to_string(i) + ", " + std::to_string(j) + ", " +
                    std::to_string(k),
                {i, j, k}};
      }
    }
  }
  return {};
}

PointSet::PointSet(std::vector<Point> points, Strictness strictness)
    : points_(std::move(points)), strictness_(strictness) {
  for (std::size_t i = 0; i < points_.size(); ++i) {
    const auto& p = points_[i];
    if (p.x > kCoordLimit || p.x < -kCoordLimit || p.y > kCoordLimit || p.y < -kCoordLimit) {
      throw GeometryError("point " + std::to_string(i) + " exceeds the coordinate bound 2^30");
    }
  }
  if (auto report = validate(points_, strictness_); !report.ok) throw GeometryError(report.message);
}

std::vector<std::size_t> convex_hull(std::span<const Point> points) {
  const std::size_t n = points.size();
  if (n < 3) throw GeometryError("convex hull needs at least 3 points");
  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(),
            [&](std::size_t i, std::size_t j) { return points[i] < points[j]; });

  // Andrew's monotone chain, keeping only strict turns.
  std::vector<std::size_t> hull(2 * n);
  std::size_t k = 0;
  auto turns_left = [&](std::size_t o, std::size_t a, std::size_t b) {
    return orientation(points[o], points[a], points[b]) == Orientation::CounterClockwise;
  };
  for (std::size_t i = 0; i < n; ++i) {
    while (k >= 2 && !turns_left(hull[k - 2], hull[k - 1], order[i])) --k;
    hull[k++] = order[i];
  }
  for (std::size_t i = n - 1, lower = k + 1; i-- > 0;) {
    while (k >= lower && !turns_left(hull[k - 2], hull[k - 1], order[i])) --k;
    hull[k++] = order[i];
  }
  hull.resize(k - 1);
  if (hull.size() < 3) throw GeometryError("all points are collinear");
  return hull;
}

}  // namespace biplane
