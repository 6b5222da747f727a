#include "biplane/maximal.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace biplane {

namespace {

std::string describe(Edge e) { return "(" + std::to_string(e.a) + "," + std::to_string(e.b) + ")"; }

}  // namespace

const char* to_string(FlipClause c) {
  switch (c) {
    case FlipClause::Red:
      return "red";
    case FlipClause::Blue:
      return "blue";
    case FlipClause::CrossFace:
      return "cross-face";
  }
  return "?";
}

MaximalState MaximalState::build(const GeometricGraph& g) {
  auto verdict = test_biplane(g);
  const auto* layers = std::get_if<BiplaneDecomposition>(&verdict);
  if (!layers) throw NotBiplaneError(std::move(verdict), "input graph is not biplane");
  if (g.points().strictness() != Strictness::Strict) {
    throw GeometryError("augmentation requires a Strict (general position) point set");
  }

  const auto red = Triangulation::complete(g.points(), layers->layer1);
  const auto blue = Triangulation::complete(g.points(), layers->layer2);

  MaximalState s;
  s.points_ = g.points();
  for (const auto& layer : {red.triangles(), blue.triangles()}) {
    for (const auto& t : layer) s.tris_.push_back({t.v, {kNoTri, kNoTri, kNoTri}});
  }
  const auto per_layer = static_cast<std::int32_t>(s.tris_.size() / 2);
  for (const auto& e : red.edges()) {
    if (blue.contains(e)) s.purple_.emplace(e.key(), Sides{});
  }

  // Directed side -> triangle, per layer, to pair up chord neighbours.
  std::vector<std::unordered_map<std::uint64_t, std::int32_t>> owner(2);
  for (std::int32_t t = 0; t < static_cast<std::int32_t>(s.tris_.size()); ++t) {
    const auto& v = s.tris_[t].v;
    for (int i = 0; i < 3; ++i) {
      owner[t / per_layer].emplace((std::uint64_t{v[i]} << 32) | v[(i + 1) % 3], t);
    }
  }

  s.uf_.resize(s.tris_.size());
  for (std::int32_t t = 0; t < static_cast<std::int32_t>(s.tris_.size()); ++t) {
    const int layer = t / per_layer;
    auto& tri = s.tris_[t];
    for (int i = 0; i < 3; ++i) {
      const Vertex a = tri.v[i], b = tri.v[(i + 1) % 3];
      const Edge e = make_edge(a, b);
      if (auto it = s.purple_.find(e.key()); it != s.purple_.end()) {
        auto& slot = a < b ? it->second.left : it->second.right;
        slot[layer] = t;
      } else {
        const std::int32_t other = owner[layer].at((std::uint64_t{b} << 32) | a);
        tri.adj[i] = other;
        s.uf_.unite(static_cast<std::size_t>(t), static_cast<std::size_t>(other), 0);
      }
    }
  }
  // The red and blue triangles beside a purple edge lie in the same face, on
  // opposite sheets.
  for (const auto& [k, sides] : s.purple_) {
    for (const auto& pair : {sides.left, sides.right}) {
      if (pair[0] != kNoTri) s.uf_.unite(static_cast<std::size_t>(pair[0]), static_cast<std::size_t>(pair[1]), 1);
    }
  }
  for (std::int32_t t = 0; t < per_layer; ++t) {
    if (s.sheet(t) != 0) s.uf_.toggle(static_cast<std::size_t>(t));
  }

  for (const auto& e : s.purple_edges()) {
    if (!s.is_hull_edge(e)) s.queue_.push_back(e);
  }
  return s;
}

std::vector<Edge> MaximalState::purple_edges() const {
  std::vector<Edge> out;
  out.reserve(purple_.size());
  for (const auto& [k, sides] : purple_) out.push_back(Edge::from_key(k));
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Edge> MaximalState::sheet_edges(int which) const {
  std::vector<Edge> out;
  for (std::int32_t t = 0; t < static_cast<std::int32_t>(tris_.size()); ++t) {
    if (sheet(t) != which) continue;
    const auto& v = tris_[t].v;
    for (int i = 0; i < 3; ++i) {
      if (v[i] < v[(i + 1) % 3]) {
        out.push_back({v[i], v[(i + 1) % 3]});
      } else if (tris_[t].adj[i] == kNoTri) {
        // purple or hull side seen from its right: the left owner may be the
        // other sheet's triangle, so record it here as well
        out.push_back({v[(i + 1) % 3], v[i]});
      }
    }
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::vector<Edge> MaximalState::red_edges() const { return sheet_edges(0); }
std::vector<Edge> MaximalState::blue_edges() const { return sheet_edges(1); }

std::vector<Edge> MaximalState::edges() const {
  auto out = red_edges();
  const auto blue = blue_edges();
  out.insert(out.end(), blue.begin(), blue.end());
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::size_t MaximalState::edge_count() const { return edges().size(); }

bool MaximalState::is_hull_edge(Edge e) const {
  auto it = purple_.find(e.key());
  return it != purple_.end() && (it->second.left[0] == kNoTri || it->second.right[0] == kNoTri);
}

int MaximalState::side_index(std::int32_t t, Vertex a, Vertex b) const {
  const auto& v = tris_[t].v;
  for (int i = 0; i < 3; ++i) {
    if (v[i] == a && v[(i + 1) % 3] == b) return i;
  }
  throw GeometryError("triangle does not contain side " + describe(make_edge(a, b)));
}

Vertex MaximalState::apex(std::int32_t t, Vertex a, Vertex b) const {
  return tris_[t].v[(side_index(t, a, b) + 2) % 3];
}

std::optional<MaximalState::Choice> MaximalState::choose_flip(Edge e) const {
  const auto& sides = purple_.at(e.key());
  auto left = sides.left;
  auto right = sides.right;
  if (sheet(left[0]) != 0) std::swap(left[0], left[1]);
  if (sheet(right[0]) != 0) std::swap(right[0], right[1]);

  const auto& p = points_;
  const Vertex a = e.a, b = e.b;
  // red/red, blue/blue, then the two cross-sheet pairings
  const std::array<Choice, 4> order{{{left[0], right[0]}, {left[1], right[1]}, {left[0], right[1]}, {left[1], right[0]}}};
  for (const auto& c : order) {
    if (sheet(c.left) != sheet(c.right) && face(c.left) == face(c.right)) continue;
    const Vertex x = apex(c.left, a, b);
    const Vertex y = apex(c.right, b, a);
    if (sign(orientation(p[x], p[y], p[a])) * sign(orientation(p[x], p[y], p[b])) < 0) return c;
  }
  return std::nullopt;
}

bool MaximalState::is_colorblind_flippable(Edge e) const {
  if (!is_purple(e)) throw GeometryError("edge " + describe(e) + " is not purple");
  if (is_hull_edge(e)) throw GeometryError("edge " + describe(e) + " is a hull edge");
  return choose_flip(e).has_value();
}

std::vector<Edge> MaximalState::neighborhood(Edge e) const {
  const auto& sides = purple_.at(e.key());
  std::vector<Edge> out;
  for (const auto& pair : {sides.left, sides.right}) {
    for (std::int32_t t : pair) {
      if (t == kNoTri) continue;
      const auto& v = tris_[t].v;
      for (int i = 0; i < 3; ++i) {
        const Edge f = make_edge(v[i], v[(i + 1) % 3]);
        if (f != e && is_purple(f) && !is_hull_edge(f)) out.push_back(f);
      }
    }
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

void MaximalState::replace_at_side(Vertex a, Vertex b, std::int32_t old_tri, std::int32_t new_tri) {
  auto& sides = purple_.at(make_edge(a, b).key());
  auto& slot = a < b ? sides.left : sides.right;
  for (auto& t : slot) {
    if (t == old_tri) {
      t = new_tri;
      return;
    }
  }
  throw GeometryError("purple side bookkeeping out of sync at " + describe(make_edge(a, b)));
}

FlipRecord MaximalState::apply_flip(Edge e) {
  if (!is_purple(e) || is_hull_edge(e)) throw GeometryError("edge " + describe(e) + " is not a purple interior edge");
  const auto choice = choose_flip(e);
  if (!choice) throw GeometryError("edge " + describe(e) + " is not colorblind flippable");

  const Sides sides = purple_.at(e.key());
  const std::int32_t tl = choice->left, tr = choice->right;
  const std::int32_t ol = sides.left[0] == tl ? sides.left[1] : sides.left[0];
  const std::int32_t orr = sides.right[0] == tr ? sides.right[1] : sides.right[0];

  FlipRecord rec;
  rec.flipped = e;
  rec.merged_faces = {face(tl), face(tr)};
  rec.requeued = neighborhood(e);
  const int sl = sheet(tl), sr = sheet(tr);
  if (sl == sr) {
    rec.clause = sl == 0 ? FlipClause::Red : FlipClause::Blue;
  } else {
    // Recolour the face holding the red triangle; both become blue.
    rec.clause = FlipClause::CrossFace;
    uf_.toggle(static_cast<std::size_t>(sl == 0 ? tl : tr));
  }
  uf_.unite(static_cast<std::size_t>(tl), static_cast<std::size_t>(tr), 0);

  const Vertex a = e.a, b = e.b;
  const Vertex c = apex(tl, a, b);
  const Vertex d = apex(tr, b, a);
  auto across = [&](std::int32_t t, Vertex u, Vertex v) { return tris_[t].adj[side_index(t, u, v)]; };
  const std::int32_t n_bc = across(tl, b, c), n_ca = across(tl, c, a);
  const std::int32_t n_ad = across(tr, a, d), n_db = across(tr, d, b);

  tris_[tl] = {{a, d, c}, {n_ad, tr, n_ca}};
  tris_[tr] = {{d, b, c}, {n_db, n_bc, tl}};

  if (n_ad != kNoTri) {
    tris_[n_ad].adj[side_index(n_ad, d, a)] = tl;
  } else {
    replace_at_side(a, d, tr, tl);
  }
  if (n_bc != kNoTri) {
    tris_[n_bc].adj[side_index(n_bc, c, b)] = tr;
  } else {
    replace_at_side(b, c, tl, tr);
  }

  // In the other sheet e survives as a chord of the merged face.
  tris_[ol].adj[side_index(ol, a, b)] = orr;
  tris_[orr].adj[side_index(orr, b, a)] = ol;
  purple_.erase(e.key());

  rec.inserted = make_edge(c, d);
  return rec;
}

void MaximalState::run(const std::function<void(const FlipRecord&)>& trace) {
  while (!queue_.empty()) {
    const Edge e = queue_.front();
    queue_.pop_front();
    if (!is_purple(e) || is_hull_edge(e) || !choose_flip(e)) continue;
    auto rec = apply_flip(e);
    for (const auto& f : rec.requeued) queue_.push_back(f);
    if (trace) trace(rec);
  }
}

bool MaximalState::certify_maximal() const {
  for (const auto& [k, sides] : purple_) {
    const Edge e = Edge::from_key(k);
    if (!is_hull_edge(e) && choose_flip(e)) return false;
  }
  return true;
}

std::vector<PurpleFace> MaximalState::faces() const {
  std::map<std::size_t, PurpleFace> by_root;
  for (std::int32_t t = 0; t < static_cast<std::int32_t>(tris_.size()); ++t) {
    auto& f = by_root[face(t)];
    f.id = face(t);
    const int s = sheet(t);
    const auto& v = tris_[t].v;
    for (int i = 0; i < 3; ++i) {
      const Edge e = make_edge(v[i], v[(i + 1) % 3]);
      if (tris_[t].adj[i] == kNoTri) {
        f.boundary.push_back(e);
      } else {
        (s == 0 ? f.red : f.blue).push_back(e);
      }
    }
  }
  std::vector<PurpleFace> out;
  for (auto& [root, f] : by_root) {
    for (auto* list : {&f.boundary, &f.red, &f.blue}) {
      std::sort(list->begin(), list->end());
      list->erase(std::unique(list->begin(), list->end()), list->end());
    }
    out.push_back(std::move(f));
  }
  return out;
}

std::size_t MaximalState::face_of(Edge chord) const {
  for (std::int32_t t = 0; t < static_cast<std::int32_t>(tris_.size()); ++t) {
    const auto& v = tris_[t].v;
    for (int i = 0; i < 3; ++i) {
      if (tris_[t].adj[i] != kNoTri && make_edge(v[i], v[(i + 1) % 3]) == chord) return face(t);
    }
  }
  throw GeometryError("edge " + describe(chord) + " is not a chord");
}

GeometricGraph MaximalState::graph() const { return GeometricGraph(points_, edges()); }

BiplaneDecomposition MaximalState::decomposition() const { return {red_edges(), blue_edges()}; }

Triangulation MaximalState::red() const { return Triangulation::complete(points_, red_edges()); }
Triangulation MaximalState::blue() const { return Triangulation::complete(points_, blue_edges()); }

bool MaximalState::check_invariants(std::string* why) const {
  auto fail = [&](const std::string& msg) {
    if (why) *why = msg;
    return false;
  };
  const auto& p = points_;
  for (std::int32_t t = 0; t < static_cast<std::int32_t>(tris_.size()); ++t) {
    const auto& tri = tris_[t];
    if (orientation(p[tri.v[0]], p[tri.v[1]], p[tri.v[2]]) != Orientation::CounterClockwise) {
      return fail("triangle " + std::to_string(t) + " not counterclockwise");
    }
    for (int i = 0; i < 3; ++i) {
      const Vertex a = tri.v[i], b = tri.v[(i + 1) % 3];
      const Edge e = make_edge(a, b);
      if (tri.adj[i] == kNoTri) {
        auto it = purple_.find(e.key());
        if (it == purple_.end()) return fail("open side " + describe(e) + " is not purple");
        const auto& slot = a < b ? it->second.left : it->second.right;
        if (slot[0] != t && slot[1] != t) return fail("purple side " + describe(e) + " lost its triangle");
      } else {
        if (is_purple(e)) return fail("purple edge " + describe(e) + " used as a chord");
        const auto n = tri.adj[i];
        if (tris_[n].adj[side_index(n, b, a)] != t) return fail("asymmetric adjacency at " + describe(e));
        if (sheet(n) != sheet(t) || face(n) != face(t)) return fail("chord " + describe(e) + " joins sheets or faces");
      }
    }
  }
  for (const auto& [k, sides] : purple_) {
    for (const auto& pair : {sides.left, sides.right}) {
      if (pair[0] == kNoTri && pair[1] == kNoTri) continue;
      if (pair[0] == kNoTri || pair[1] == kNoTri) return fail("purple side with a single triangle");
      if (face(pair[0]) != face(pair[1]) || sheet(pair[0]) == sheet(pair[1])) {
        return fail("purple side " + describe(Edge::from_key(k)) + " has inconsistent sheets");
      }
    }
  }
  const auto red = red_edges(), blue = blue_edges();
  const std::size_t h = convex_hull(p).size();
  const std::size_t expected = 3 * p.size() - h - 3;
  if (red.size() != expected || blue.size() != expected) return fail("layer is not a triangulation");
  if (!is_plane(p, red) || !is_plane(p, blue)) return fail("layer has crossing edges");
  std::vector<Edge> shared;
  std::set_intersection(red.begin(), red.end(), blue.begin(), blue.end(), std::back_inserter(shared));
  if (shared != purple_edges()) return fail("purple set differs from red/blue intersection");
  return true;
}

AugmentResult maximal_augment(const GeometricGraph& g, const std::function<void(const FlipRecord&)>& trace) {
  auto state = MaximalState::build(g);
  std::size_t flips = 0;
  state.run([&](const FlipRecord& rec) {
    ++flips;
    if (trace) trace(rec);
  });
  return {state.graph(), state.decomposition(), flips};
}

}  // namespace biplane
