#include "biplane/triangulation.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <numeric>
#include <set>

namespace biplane {

namespace {

std::string describe(Edge e) { return "(" + std::to_string(e.a) + "," + std::to_string(e.b) + ")"; }

// Sweep in lexicographic order; each new point is joined to the hull chain it
// sees. The previously inserted point is extreme, so the visible chain always
// contains one of its hull edges.
std::vector<Triangle> sweep_triangulate(const PointSet& s) {
  const std::size_t n = s.size();
  std::vector<Vertex> order(n);
  std::iota(order.begin(), order.end(), Vertex{0});
  std::sort(order.begin(), order.end(), [&](Vertex i, Vertex j) { return s[i] < s[j]; });

  std::vector<Vertex> next(n), prev(n);
  std::vector<Triangle> tris;
  tris.reserve(2 * n);
  auto ccw = [&](Vertex a, Vertex b, Vertex c) {
    return orientation(s[a], s[b], s[c]) == Orientation::CounterClockwise;
  };
  auto link = [&](Vertex a, Vertex b) {
    next[a] = b;
    prev[b] = a;
  };

  Vertex p0 = order[0], p1 = order[1], p2 = order[2];
  if (!ccw(p0, p1, p2)) std::swap(p1, p2);
  tris.push_back({{p0, p1, p2}});
  link(p0, p1);
  link(p1, p2);
  link(p2, p0);
  Vertex last = order[2];

  for (std::size_t k = 3; k < n; ++k) {
    const Vertex p = order[k];
    Vertex upper = last;
    while (!ccw(upper, next[upper], p)) {
      tris.push_back({{upper, p, next[upper]}});
      upper = next[upper];
    }
    Vertex lower = last;
    while (!ccw(prev[lower], lower, p)) {
      tris.push_back({{prev[lower], p, lower}});
      lower = prev[lower];
    }
    link(lower, p);
    link(p, upper);
    last = p;
  }
  return tris;
}

}  // namespace

NotPlaneError::NotPlaneError(Edge e, Edge f)
    : GeometryError("input edges " + describe(e) + " and " + describe(f) + " cross"), first(e), second(f) {}

Triangulation::Triangulation(PointSet points, const std::vector<Triangle>& faces)
    : points_(std::move(points)) {
  const std::size_t n = points_.size();
  out_.assign(n, kNone);
  const std::size_t inner = faces.size() * 3;
  origin_.reserve(inner + n);
  next_.reserve(inner + n);
  half_.reserve(2 * (inner + n));

  for (const auto& t : faces) {
    const auto base = static_cast<HalfEdge>(origin_.size());
    for (int k = 0; k < 3; ++k) {
      origin_.push_back(t.v[k]);
      next_.push_back(base + static_cast<HalfEdge>((k + 1) % 3));
      half_.emplace(key(t.v[k], t.v[(k + 1) % 3]), base + k);
      out_[t.v[k]] = base + k;
    }
  }
  twin_.assign(inner, kNone);
  outer_.assign(inner, 0);

  std::vector<HalfEdge> outer_from(n, kNone);
  for (HalfEdge h = 0; h < inner; ++h) {
    const Vertex a = origin_[h];
    const Vertex b = origin_[next_[h]];
    if (auto it = half_.find(key(b, a)); it != half_.end()) {
      twin_[h] = it->second;
      continue;
    }
    const auto o = static_cast<HalfEdge>(origin_.size());
    origin_.push_back(b);
    next_.push_back(kNone);
    twin_.push_back(h);
    outer_.push_back(1);
    twin_[h] = o;
    half_.emplace(key(b, a), o);
    outer_from[b] = o;
  }
  for (HalfEdge o = static_cast<HalfEdge>(inner); o < origin_.size(); ++o) {
    next_[o] = outer_from[origin_[twin_[o]]];
  }

  // Outer cycle runs clockwise; reverse it for the counterclockwise hull.
  std::size_t start = 0;
  for (std::size_t v = 1; v < n; ++v) {
    if (points_[v] < points_[start]) start = v;
  }
  const HalfEdge first = outer_from[start];
  HalfEdge h = first;
  do {
    hull_.push_back(origin_[h]);
    h = next_[h];
  } while (h != first);
  std::reverse(hull_.begin() + 1, hull_.end());
}

Triangulation Triangulation::complete(const GeometricGraph& g) {
  return complete(g.points(), g.edges());
}

Triangulation Triangulation::complete(const PointSet& points, std::span<const Edge> constraints) {
  if (points.size() < 3) throw GeometryError("triangulation needs at least 3 points");
  if (points.strictness() != Strictness::Strict) {
    throw GeometryError("triangulation requires a Strict (general position) point set");
  }
  Triangulation t(points, sweep_triangulate(points));
  for (const auto& e : constraints) t.insert_constraint(make_edge(e.a, e.b));
  return t;
}

Triangulation::HalfEdge Triangulation::find(Vertex a, Vertex b) const {
  auto it = half_.find(key(a, b));
  return it == half_.end() ? kNone : it->second;
}

std::vector<Edge> Triangulation::edges() const {
  std::vector<Edge> out;
  out.reserve(edge_count());
  for (HalfEdge h = 0; h < origin_.size(); ++h) {
    if (origin_[h] < dest(h)) out.push_back({origin_[h], dest(h)});
  }
  std::sort(out.begin(), out.end());
  return out;
}

bool Triangulation::is_hull_edge(Edge e) const {
  const HalfEdge h = find(e.a, e.b);
  return h != kNone && (outer_[h] || outer_[twin_[h]]);
}

std::vector<Triangle> Triangulation::triangles() const {
  std::vector<Triangle> out;
  for (HalfEdge h = 0; h < origin_.size(); ++h) {
    if (outer_[h]) continue;
    const Vertex a = origin_[h], b = origin_[next_[h]], c = origin_[next_[next_[h]]];
    if (a < b && a < c) out.push_back({{a, b, c}});
  }
  std::sort(out.begin(), out.end());
  return out;
}

Triangulation::Apexes Triangulation::apexes(Edge e) const {
  Apexes result;
  const HalfEdge h = find(e.a, e.b);
  if (h == kNone) return result;
  if (!outer_[h]) result.left = origin_[next_[next_[h]]];
  const HalfEdge t = twin_[h];
  if (!outer_[t]) result.right = origin_[next_[next_[t]]];
  return result;
}

bool Triangulation::quad_convex(HalfEdge h) const {
  const Vertex a = origin_[h];
  const Vertex b = dest(h);
  const Vertex c = origin_[next_[next_[h]]];
  const Vertex d = origin_[next_[next_[twin_[h]]]];
  const auto& p = points_;
  return sign(orientation(p[c], p[d], p[a])) * sign(orientation(p[c], p[d], p[b])) < 0;
}

FlipCheck Triangulation::flip_check(Edge e) const {
  const HalfEdge h = find(e.a, e.b);
  if (h == kNone) return FlipCheck::Missing;
  if (outer_[h] || outer_[twin_[h]]) return FlipCheck::HullEdge;
  if (is_constrained(e)) return FlipCheck::Constrained;
  return quad_convex(h) ? FlipCheck::Flippable : FlipCheck::NotConvex;
}

std::vector<Edge> Triangulation::flippable_edges() const {
  std::vector<Edge> out;
  for (const auto& e : edges()) {
    if (is_flippable(e)) out.push_back(e);
  }
  return out;
}

void Triangulation::flip_half_edge(HalfEdge h) {
  const HalfEdge hn = next_[h], hp = next_[hn];
  const HalfEdge t = twin_[h], tn = next_[t], tp = next_[tn];
  const Vertex a = origin_[h], b = origin_[t];
  const Vertex c = origin_[hp], d = origin_[tp];

  half_.erase(key(a, b));
  half_.erase(key(b, a));
  origin_[h] = d;
  origin_[t] = c;
  next_[tn] = h;
  next_[h] = hp;
  next_[hp] = tn;
  next_[tp] = hn;
  next_[hn] = t;
  next_[t] = tp;
  if (out_[a] == h) out_[a] = tn;
  if (out_[b] == t) out_[b] = hn;
  half_.emplace(key(d, c), h);
  half_.emplace(key(c, d), t);
}

Edge Triangulation::flip(Edge e) {
  switch (flip_check(e)) {
    case FlipCheck::Flippable:
      break;
    case FlipCheck::Missing:
      throw GeometryError("edge " + describe(e) + " is not in the triangulation");
    case FlipCheck::HullEdge:
      throw GeometryError("edge " + describe(e) + " is a hull edge");
    case FlipCheck::Constrained:
      throw GeometryError("edge " + describe(e) + " is constrained");
    case FlipCheck::NotConvex:
      throw GeometryError("edge " + describe(e) + " does not bound a convex quadrilateral");
  }
  const HalfEdge h = find(e.a, e.b);
  flip_half_edge(h);
  return make_edge(origin_[h], dest(h));
}

Triangulation Triangulation::flipped(Edge e) const {
  Triangulation copy = *this;
  copy.flip(e);
  return copy;
}

void Triangulation::constrain(Edge e) {
  if (!contains(e)) throw GeometryError("cannot constrain missing edge " + describe(e));
  constrained_.insert(e.key());
}

std::vector<Vertex> Triangulation::rotation(Vertex v) const {
  std::vector<Vertex> out;
  const HalfEdge first = out_[v];
  HalfEdge h = first;
  do {
    out.push_back(dest(h));
    h = next_[twin_[h]];  // clockwise step
  } while (h != first);
  std::reverse(out.begin(), out.end());
  return out;
}

void Triangulation::insert_constraint(Edge e) {
  const Vertex a = e.a, b = e.b;
  if (contains(e)) {
    constrained_.insert(e.key());
    return;
  }
  const auto& p = points_;
  auto orient = [&](Vertex u, Vertex v, Vertex w) { return sign(orientation(p[u], p[v], p[w])); };

  // Triangle at a whose wedge contains b; its far side is the first crossed edge.
  HalfEdge cur = kNone;
  const HalfEdge first = out_[a];
  HalfEdge h = first;
  do {
    if (!outer_[h]) {
      const Vertex u = dest(h), w = dest(next_[h]);
      if (orient(a, u, b) > 0 && orient(a, w, b) < 0) {
        cur = next_[h];
        break;
      }
    }
    h = next_[twin_[h]];
  } while (h != first);
  if (cur == kNone) throw GeometryError("failed to locate edge " + describe(e));

  // `cur` runs from the right of a->b to the left.
  std::deque<Edge> pending;
  while (true) {
    const Edge crossed = make_edge(origin_[cur], dest(cur));
    if (is_constrained(crossed)) throw NotPlaneError(e, crossed);
    pending.push_back(crossed);
    const HalfEdge tw = twin_[cur];
    const Vertex x = origin_[next_[next_[tw]]];
    if (x == b) break;
    cur = orient(a, b, x) < 0 ? next_[next_[tw]] : next_[tw];
  }

  // Flip crossed edges until none remain; non-convex ones are retried later.
  while (!pending.empty()) {
    const Edge f = pending.front();
    pending.pop_front();
    const HalfEdge hf = find(f.a, f.b);
    if (!quad_convex(hf)) {
      pending.push_back(f);
      continue;
    }
    flip_half_edge(hf);
    const Edge g = make_edge(origin_[hf], dest(hf));
    if (g != e && segments_cross(p[a], p[b], p[g.a], p[g.b])) pending.push_back(g);
  }
  constrained_.insert(e.key());
}

bool Triangulation::check_invariants(std::string* why) const {
  auto fail = [&](const std::string& msg) {
    if (why) *why = msg;
    return false;
  };
  const auto& p = points_;
  const std::size_t n = p.size();
  for (HalfEdge h = 0; h < origin_.size(); ++h) {
    if (twin_[twin_[h]] != h) return fail("twin mismatch");
    if (outer_[h]) continue;
    const HalfEdge h1 = next_[h], h2 = next_[h1];
    if (next_[h2] != h) return fail("bounded face is not a triangle");
    if (orientation(p[origin_[h]], p[origin_[h1]], p[origin_[h2]]) != Orientation::CounterClockwise) {
      return fail("triangle not counterclockwise");
    }
  }
  const auto expected_hull = convex_hull(p);
  if (expected_hull != hull_) return fail("outer boundary differs from the convex hull");
  if (edge_count() != 3 * n - hull_.size() - 3) return fail("edge count is not 3n-h-3");
  const auto tris = triangles();
  // Euler: vertices - edges + faces (incl. outer) = 2
  if (n + tris.size() + 1 != edge_count() + 2) return fail("Euler characteristic mismatch");
  if (!is_plane(p, edges())) return fail("edges cross");
  return true;
}

std::vector<Triangulation> enumerate_triangulations(const PointSet& points, std::size_t cap) {
  if (points.size() > cap) {
    throw GeometryError("enumeration limited to " + std::to_string(cap) + " points");
  }
  std::vector<Triangulation> found;
  std::set<std::vector<Edge>> seen;
  std::deque<Triangulation> queue;
  auto start = Triangulation::complete(points, {});
  seen.insert(start.edges());
  queue.push_back(std::move(start));
  while (!queue.empty()) {
    Triangulation t = std::move(queue.front());
    queue.pop_front();
    for (const auto& e : t.flippable_edges()) {
      auto u = t.flipped(e);
      if (seen.insert(u.edges()).second) queue.push_back(std::move(u));
    }
    found.push_back(std::move(t));
  }
  return found;
}

}  // namespace biplane
