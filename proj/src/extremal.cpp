#include "biplane/extremal.hpp"

#include <algorithm>
#include <array>
#include <map>

namespace biplane {

namespace {

// No segment between two points other than the endpoints of e crosses e.
bool uncrossable(const PointSet& s, Edge e) {
  const std::size_t n = s.size();
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = u + 1; v < n; ++v) {
      if (Edge{u, v} == e) continue;
      if (segments_cross(s, e, Edge{u, v})) return false;
    }
  }
  return true;
}

bool in_open_triangle(const PointSet& s, Vertex p, Vertex a, Vertex b, Vertex c) {
  const auto o1 = orientation(s[a], s[b], s[p]);
  return o1 != Orientation::Collinear && o1 == orientation(s[b], s[c], s[p]) &&
         o1 == orientation(s[c], s[a], s[p]);
}

std::optional<PointSet> try_arc_in_triangle(std::size_t n, Coord w) {
  const Coord apex = 2 * w * w + 1;
  std::vector<Point> pts{{0, apex}, {-w, 0}, {w, 0}};
  const auto interior = static_cast<Coord>(n - 3);
  for (Coord t = 0; t < interior; ++t) {
    const Coord x = -(interior - 1) + 2 * t;
    pts.push_back({x, w * w - x * x});
  }
  std::optional<PointSet> s;
  try {
    s.emplace(std::move(pts));
  } catch (const GeometryError&) {
    return std::nullopt;
  }
  if (convex_hull(*s).size() != 3) return std::nullopt;
  for (Vertex v = 3; v < n; ++v) {
    if (!in_open_triangle(*s, v, 0, 1, 2)) return std::nullopt;
  }
  for (Vertex v = 1; v < n; ++v) {
    if (!uncrossable(*s, Edge{0, v})) return std::nullopt;
  }
  return s;
}

std::optional<PointSet> try_hgon_with_arc(std::size_t n, std::size_t h, Coord w) {
  const Coord apex = 2 * w * w + 1;
  std::vector<Point> pts{{0, apex}, {-w, 0}};
  const auto lower = static_cast<Coord>(h - 3);
  const Coord step = std::max<Coord>(1, (2 * w - 2) / lower);
  for (Coord j = 0; j < lower; ++j) {
    const Coord x = -w + 1 + j * step;
    pts.push_back({x, -(w * w - x * x)});
  }
  pts.push_back({w, 0});
  for (Coord t = 1; t <= static_cast<Coord>(n - h); ++t) {
    const Coord x = -w + t;
    pts.push_back({x, w * w - x * x});
  }

  std::optional<PointSet> s;
  try {
    s.emplace(std::move(pts));
  } catch (const GeometryError&) {
    return std::nullopt;
  }
  std::vector<std::size_t> expected_hull(h);
  for (std::size_t i = 0; i < h; ++i) expected_hull[i] = i;
  auto hull = convex_hull(*s);
  std::rotate(hull.begin(), std::find(hull.begin(), hull.end(), 0), hull.end());
  if (hull != expected_hull) return std::nullopt;

  const Vertex v1 = 0, v2 = 1, v3 = 2, vh = static_cast<Vertex>(h - 1);
  const auto side_of_v2 = orientation((*s)[v1], (*s)[v3], (*s)[v2]);
  for (Vertex v = static_cast<Vertex>(h); v < n; ++v) {
    if (!in_open_triangle(*s, v, v1, v2, vh)) return std::nullopt;
    if (orientation((*s)[v1], (*s)[v3], (*s)[v]) != side_of_v2) return std::nullopt;
  }
  for (Vertex v = 3; v < h; ++v) {
    const auto o = orientation((*s)[v1], (*s)[v3], (*s)[v]);
    if (o == side_of_v2 || o == Orientation::Collinear) return std::nullopt;
  }
  for (const auto& e : hgon_forced_edges(n, h)) {
    if (!uncrossable(*s, e)) return std::nullopt;
  }
  return s;
}

}  // namespace

PointSet gen_convex(std::size_t n) {
  if (n < 3) throw GeometryError("convex generator needs n >= 3");
  std::vector<Point> pts;
  for (std::size_t i = 0; i < n; ++i) {
    const auto x = static_cast<Coord>(i);
    pts.push_back({x, x * x});
  }
  PointSet s(std::move(pts));
  if (convex_hull(s).size() != n) throw GeometryError("convex generator produced a non-convex set");
  return s;
}

PointSet gen_arc_in_triangle(std::size_t n) {
  if (n < 4) throw GeometryError("arc-in-triangle generator needs n >= 4");
  for (auto w = static_cast<Coord>(n) - 2; w < static_cast<Coord>(8 * n + 16); ++w) {
    if (auto s = try_arc_in_triangle(n, w)) return *s;
  }
  throw GeometryError("arc-in-triangle generator failed its self-check");
}

PointSet gen_hgon_with_arc(std::size_t n, std::size_t h) {
  if (h < 4 || n < h) throw GeometryError("hgon-with-arc generator needs h >= 4 and n >= h");
  for (auto w = static_cast<Coord>(std::max(n, h)) + 1; w < static_cast<Coord>(8 * n + 16); ++w) {
    if (auto s = try_hgon_with_arc(n, h, w)) return *s;
  }
  throw GeometryError("hgon-with-arc generator failed its self-check");
}

std::vector<Edge> hgon_forced_edges(std::size_t n, std::size_t h) {
  std::vector<Edge> out;
  for (std::size_t i = 0; i < h; ++i) out.push_back(make_edge(static_cast<Vertex>(i), static_cast<Vertex>((i + 1) % h)));
  for (std::size_t v = h; v < n; ++v) out.push_back(make_edge(0, static_cast<Vertex>(v)));
  Vertex prev = 1;
  for (std::size_t v = h; v < n; ++v) {
    out.push_back(make_edge(prev, static_cast<Vertex>(v)));
    prev = static_cast<Vertex>(v);
  }
  return out;
}

// ---------------------------------------------------------------------------
// Grid

namespace {

struct Offset {
  int dx, dy, layer;
};
// One representative per direction; the negations complete the list.
constexpr std::array<Offset, 6> kGridOffsets{{{1, 0, 0}, {1, 1, 0}, {2, 1, 0}, {0, 1, 1}, {1, -1, 1}, {1, -2, 1}}};

using Cell = std::pair<int, int>;

// Quarter turn: (i,j) -> (j, k+1-i).
Cell rotate(Cell c, int k, int times) {
  for (int t = 0; t < ((times % 4) + 4) % 4; ++t) c = {c.second, k + 1 - c.first};
  return c;
}

GridGraph exchange(const GridGraph& g, GridExchange ex_template, const std::vector<std::pair<Cell, Cell>>& removed,
                   const std::vector<std::pair<Cell, Cell>>& added, int base_layer, int side) {
  const int k = static_cast<int>(g.k);
  auto in_range = [&](Cell c) { return c.first >= 1 && c.first <= k && c.second >= 1 && c.second <= k; };
  auto to_edge = [&](const std::pair<Cell, Cell>& seg) {
    const Cell p = rotate(seg.first, k, side), q = rotate(seg.second, k, side);
    if (!in_range(p) || !in_range(q)) throw GeometryError("grid exchange leaves the " + std::to_string(k) + "x" + std::to_string(k) + " grid");
    return make_edge(g.vertex(p.first, p.second), g.vertex(q.first, q.second));
  };

  GridExchange ex = std::move(ex_template);
  ex.layer = base_layer ^ (side & 1);
  std::vector<Edge> drop;
  for (const auto& seg : removed) {
    const Edge e = to_edge(seg);
    if (!g.graph.contains(e)) throw GeometryError(ex.label + ": edge to remove is missing");
    if (g.layer[g.graph.index_of(e)] != ex.layer) throw GeometryError(ex.label + ": edge to remove is in the other layer");
    drop.push_back(e);
    ex.removed.push_back(e);
  }
  for (const auto& seg : added) ex.added.push_back(to_edge(seg));

  GridGraph out;
  out.k = g.k;
  std::vector<Edge> edges;
  for (std::size_t i = 0; i < g.graph.edge_count(); ++i) {
    const Edge e = g.graph.edges()[i];
    if (std::find(drop.begin(), drop.end(), e) != drop.end()) continue;
    edges.push_back(e);
    out.layer.push_back(g.layer[i]);
  }
  for (const auto& e : ex.added) {
    if (g.graph.contains(e)) throw GeometryError(ex.label + ": edge to add already present");
    edges.push_back(e);
    out.layer.push_back(ex.layer);
  }
  out.graph = GeometricGraph(g.graph.points(), std::move(edges));
  out.exchanges = g.exchanges;
  out.exchanges.push_back(std::move(ex));
  return out;
}

}  // namespace

Vertex GridGraph::vertex(int i, int j) const {
  return static_cast<Vertex>((j - 1) * static_cast<int>(k) + (i - 1));
}

std::pair<int, int> GridGraph::coords(Vertex v) const {
  return {static_cast<int>(v % k) + 1, static_cast<int>(v / k) + 1};
}

BiplaneDecomposition GridGraph::decomposition() const {
  BiplaneDecomposition d;
  for (std::size_t i = 0; i < graph.edge_count(); ++i) {
    (layer[i] == 0 ? d.layer1 : d.layer2).push_back(graph.edges()[i]);
  }
  return d;
}

GridGraph gen_grid(std::size_t k) {
  if (k < 5) throw GeometryError("grid needs k >= 5");
  const int kk = static_cast<int>(k);
  GridGraph g;
  g.k = k;
  std::vector<Point> pts;
  for (int j = 1; j <= kk; ++j) {
    for (int i = 1; i <= kk; ++i) pts.push_back({i, j});
  }
  std::vector<Edge> edges;
  for (int j = 1; j <= kk; ++j) {
    for (int i = 1; i <= kk; ++i) {
      for (const auto& o : kGridOffsets) {
        const int x = i + o.dx, y = j + o.dy;
        if (x < 1 || x > kk || y < 1 || y > kk) continue;
        edges.push_back(make_edge(g.vertex(i, j), g.vertex(x, y)));
        g.layer.push_back(o.layer);
      }
    }
  }
  g.graph = GeometricGraph(PointSet(std::move(pts), Strictness::Relaxed), std::move(edges));
  return g;
}

GridGraph apply_corner_flips(const GridGraph& g) {
  const int k = static_cast<int>(g.k);
  if (k < 8) throw GeometryError("corner exchanges need k >= 8");
  const std::vector<std::pair<Cell, Cell>> removed{
      {{k - 2, 2}, {k - 2, 3}}, {{k - 2, 3}, {k - 2, 4}}, {{k - 3, 3}, {k - 3, 4}}, {{k - 3, 4}, {k - 3, 5}}};
  const std::vector<std::pair<Cell, Cell>> added{
      {{k - 1, 1}, {k - 3, 4}}, {{k - 1, 2}, {k - 3, 5}}, {{k - 2, 2}, {k - 4, 5}}, {{k - 2, 3}, {k - 4, 6}}};
  GridGraph out = g;
  for (int side = 0; side < 4; ++side) {
    out = exchange(out, {"corner:" + std::to_string(side), 0, {}, {}}, removed, added, 1, side);
  }
  return out;
}

GridGraph apply_boundary_flips(const GridGraph& g, int i, int side) {
  const int k = static_cast<int>(g.k);
  if (i < 4 || i > k - 3) throw GeometryError("boundary exchange position must satisfy 4 <= i <= k-3");
  const std::vector<std::pair<Cell, Cell>> removed{{{i - 1, 2}, {i - 1, 3}}, {{i - 2, 3}, {i - 2, 4}}};
  const std::vector<std::pair<Cell, Cell>> added{{{i, 1}, {i - 2, 4}}, {{i - 1, 2}, {i - 3, 5}}};
  return exchange(g, {"boundary:" + std::to_string(i) + ":" + std::to_string(side), 0, {}, {}}, removed, added, 1,
                  side);
}

std::size_t BoundReport::max_edges() const {
  return max_edges_abs ? std::min(max_edges_hull, *max_edges_abs) : max_edges_hull;
}

BoundReport bounds(std::size_t n, std::size_t h) {
  if (h < 3 || h > n) throw GeometryError("bounds need 3 <= h <= n");
  BoundReport r;
  r.n = n;
  r.h = h;
  const auto nn = static_cast<long long>(n), hh = static_cast<long long>(h);
  const long long seven_half = (7 * nn + 1) / 2;  // ceil(7n/2)
  r.min_maximal = static_cast<std::size_t>(std::max(seven_half - hh - 5, 3 * nn - 6));
  r.max_edges_hull = static_cast<std::size_t>(6 * nn - 3 * hh - 6);
  if (n >= 8) r.max_edges_abs = 6 * n - 18;
  r.maximum_lower = static_cast<std::size_t>(h >= 4 || n == 3 ? 4 * nn - hh - 6 : 4 * nn - hh - 7);
  return r;
}

}  // namespace biplane
