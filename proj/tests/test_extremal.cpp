#include <algorithm>
#include <random>
#include <set>

#include "biplane/analysis.hpp"
#include "biplane/extremal.hpp"
#include "biplane/maximal.hpp"
#include "doctest.h"
#include "oracles.hpp"

using namespace biplane;

namespace {

// Degree of (i,j) in the untouched grid, counted from the offset list.
std::size_t lattice_degree(int k, int i, int j) {
  static const int off[12][2] = {{1, 0}, {-1, 0}, {0, 1}, {0, -1}, {1, 1}, {-1, -1},
                                 {1, -1}, {-1, 1}, {2, 1}, {-2, -1}, {1, -2}, {-1, 2}};
  std::size_t d = 0;
  for (const auto& o : off) {
    const int x = i + o[0], y = j + o[1];
    d += x >= 1 && x <= k && y >= 1 && y <= k;
  }
  return d;
}

std::vector<std::size_t> degrees(const GeometricGraph& g) {
  std::vector<std::size_t> d(g.vertex_count(), 0);
  for (const auto& e : g.edges()) {
    ++d[e.a];
    ++d[e.b];
  }
  return d;
}

std::vector<Edge> sorted_edges(const GeometricGraph& g) { return sorted(g.edges()); }

bool on_boundary(int k, int i, int j) { return i == 1 || j == 1 || i == k || j == k; }

}  // namespace

TEST_CASE("point-set generators satisfy their geometric contracts") {
  for (std::size_t n = 3; n <= 20; ++n) CHECK(convex_hull(gen_convex(n)).size() == n);

  for (std::size_t n = 4; n <= 16; ++n) {
    const auto s = gen_arc_in_triangle(n);
    CHECK(s.size() == n);
    CHECK(convex_hull(s).size() == 3);
    // segments from v1 are crossed by no other segment
    for (Vertex v = 1; v < n; ++v) {
      for (Vertex a = 1; a < n; ++a) {
        for (Vertex b = a + 1; b < n; ++b) CHECK_FALSE(oracle::cross(s[0], s[v], s[a], s[b]));
      }
    }
  }

  for (std::size_t h = 4; h <= 8; ++h) {
    for (std::size_t n = h; n <= h + 6; ++n) {
      const auto s = gen_hgon_with_arc(n, h);
      auto hull = convex_hull(s);
      std::rotate(hull.begin(), std::find(hull.begin(), hull.end(), 0), hull.end());
      std::vector<std::size_t> expect(h);
      for (std::size_t i = 0; i < h; ++i) expect[i] = i;
      CHECK(hull == expect);
      const auto forced = hgon_forced_edges(n, h);
      CHECK(forced.size() == 2 * n - h);
      for (const auto& e : forced) {
        for (Vertex a = 0; a < n; ++a) {
          for (Vertex b = a + 1; b < n; ++b) {
            if (Edge{a, b} != e) CHECK_FALSE(oracle::cross(s[e.a], s[e.b], s[a], s[b]));
          }
        }
      }
    }
  }
  CHECK_THROWS_AS(gen_hgon_with_arc(5, 3), GeometryError);
  CHECK_THROWS_AS(gen_arc_in_triangle(3), GeometryError);
}

TEST_CASE("forced edges appear in every maximal graph from random starts") {
  std::mt19937_64 rng(6);
  for (auto [n, h] : {std::pair<std::size_t, std::size_t>{7, 4}, {8, 5}, {10, 4}, {11, 6}}) {
    const auto s = gen_hgon_with_arc(n, h);
    const auto forced = hgon_forced_edges(n, h);
    for (int trial = 0; trial < 20; ++trial) {
      const auto start = oracle::random_biplane(rng, s, 6);
      const auto out = maximal_augment(start).graph;
      for (const auto& e : forced) CHECK(out.contains(e));
      CHECK(out.edge_count() <= 4 * n - h - 6);
    }
  }
  for (std::size_t n = 5; n <= 9; ++n) {
    const auto out = maximal_augment(GeometricGraph(gen_arc_in_triangle(n), {})).graph;
    for (Vertex v = 1; v < n; ++v) CHECK(out.contains({0, v}));
  }
}

TEST_CASE("grid: degree profile and the two lattice layers") {
  for (std::size_t k = 5; k <= 20; ++k) {
    const auto g = gen_grid(k);
    const int kk = static_cast<int>(k);
    CHECK(g.graph.vertex_count() == k * k);
    const auto deg = degrees(g.graph);
    for (int j = 1; j <= kk; ++j) {
      for (int i = 1; i <= kk; ++i) {
        const Vertex v = g.vertex(i, j);
        CHECK(g.coords(v) == std::pair{i, j});
        CHECK(deg[v] == lattice_degree(kk, i, j));
      }
    }
    const auto d = g.decomposition();
    CHECK(verify_decomposition(g.graph, d));
    CHECK(is_biplane(g.graph));
    // directions (1,0), (1,1), (2,1) give k(k-1) + (k-1)^2 + (k-2)(k-1) edges
    CHECK(d.layer1.size() == 3 * (k - 1) * (k - 1));
    CHECK(d.layer2.size() == d.layer1.size());
  }
}

TEST_CASE("grid: corner exchanges") {
  for (std::size_t k = 8; k <= 14; ++k) {
    const int kk = static_cast<int>(k);
    const auto g = gen_grid(k);
    const auto f = apply_corner_flips(g);
    CHECK(f.graph.edge_count() == g.graph.edge_count());
    CHECK(f.exchanges.size() == 4);
    for (const auto& ex : f.exchanges) {
      CHECK(ex.removed.size() == 4);
      CHECK(ex.added.size() == 4);
    }
    CHECK(f.exchanges[0].layer != f.exchanges[1].layer);
    CHECK(verify_decomposition(f.graph, f.decomposition()));
    CHECK(oracle::is_biplane(f.graph));

    const auto before = degrees(g.graph), after = degrees(f.graph);
    std::set<Vertex> raised;
    for (int t = 0; t < 4; ++t) {
      // (k-1,1) and (k-1,2) rotated t quarter turns
      for (auto c : {std::pair{kk - 1, 1}, std::pair{kk - 1, 2}}) {
        for (int r = 0; r < t; ++r) c = {c.second, kk + 1 - c.first};
        raised.insert(g.vertex(c.first, c.second));
      }
    }
    for (int j = 1; j <= kk; ++j) {
      for (int i = 1; i <= kk; ++i) {
        if (!on_boundary(kk, i, j)) continue;
        const Vertex v = g.vertex(i, j);
        CHECK(after[v] == before[v] + (raised.contains(v) ? 1 : 0));
      }
    }
  }
  CHECK_THROWS_AS(apply_corner_flips(gen_grid(7)), GeometryError);
}

TEST_CASE("grid: boundary exchanges raise one boundary degree by one") {
  const std::size_t k = 16;
  const int kk = static_cast<int>(k);
  const auto g = gen_grid(k);
  for (int side = 0; side < 4; ++side) {
    for (int i = 4; i <= kk - 3; ++i) {
      const auto f = apply_boundary_flips(g, i, side);
      CHECK(f.graph.edge_count() == g.graph.edge_count());
      CHECK(oracle::is_biplane(f.graph));
      CHECK(verify_decomposition(f.graph, f.decomposition()));
      std::pair<int, int> c{i, 1};
      for (int r = 0; r < side; ++r) c = {c.second, kk + 1 - c.first};
      const Vertex target = g.vertex(c.first, c.second);
      // at i = 4 the added edge (i-3,5)(i-1,2) also lands on the boundary
      std::pair<int, int> far{i - 3, 5};
      for (int r = 0; r < side; ++r) far = {far.second, kk + 1 - far.first};
      const Vertex also = i == 4 ? g.vertex(far.first, far.second) : target;
      const auto before = degrees(g.graph), after = degrees(f.graph);
      CHECK(after[target] == before[target] + 1);
      for (int y = 1; y <= kk; ++y) {
        for (int x = 1; x <= kk; ++x) {
          if (!on_boundary(kk, x, y)) continue;
          const Vertex v = g.vertex(x, y);
          CHECK(after[v] == before[v] + (v == target || v == also ? 1 : 0));
        }
      }
    }
  }
  CHECK_THROWS_AS(apply_boundary_flips(g, 3), GeometryError);
  CHECK_THROWS_AS(apply_boundary_flips(g, kk - 2), GeometryError);
}

TEST_CASE("grid: exchanges far apart commute; a repeated exchange is refused") {
  const auto g = gen_grid(20);
  for (int i = 4; i + 7 <= 17; ++i) {
    const auto ab = apply_boundary_flips(apply_boundary_flips(g, i), i + 7);
    const auto ba = apply_boundary_flips(apply_boundary_flips(g, i + 7), i);
    CHECK(sorted_edges(ab.graph) == sorted_edges(ba.graph));
    CHECK(is_biplane(ab.graph));
  }
  const auto once = apply_boundary_flips(g, 6);
  CHECK_THROWS_AS(apply_boundary_flips(once, 6), GeometryError);
  const auto all = apply_boundary_flips(apply_boundary_flips(apply_corner_flips(g), 9), 12, 2);
  CHECK(is_biplane(all.graph));
  CHECK(all.exchanges.size() == 6);
}

TEST_CASE("bounds") {
  auto b = bounds(10, 4);
  CHECK(b.min_maximal == 26);  // ceil(35) - 4 - 5 = 26 vs 24
  CHECK(b.max_edges_hull == 42);
  CHECK(b.max_edges() == 42);
  CHECK(b.maximum_lower == 30);
  b = bounds(12, 3);
  CHECK(b.min_maximal == 34);  // 42 - 3 - 5
  CHECK(b.max_edges_hull == 57);
  CHECK(b.max_edges() == 54);  // 6n - 18
  CHECK(b.maximum_lower == 38);
  b = bounds(5, 5);
  CHECK(b.min_maximal == 9);  // 3n - 6 dominates
  CHECK(b.max_edges() == 9);
  CHECK_FALSE(bounds(7, 3).max_edges_abs.has_value());
  CHECK(bounds(3, 3).maximum_lower == 3);
  CHECK_THROWS_AS(bounds(5, 6), GeometryError);
  for (std::size_t n = 3; n <= 60; ++n) {
    for (std::size_t h = 3; h <= n; ++h) {
      const auto r = bounds(n, h);
      CHECK(r.min_maximal <= r.max_edges());
      CHECK(r.maximum_lower <= r.max_edges());
      CHECK(r.min_maximal <= r.maximum_lower);
    }
  }
}
