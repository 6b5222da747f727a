#pragma once

#include <optional>
#include <string>
#include <vector>

#include "biplane/biplane_test.hpp"

namespace biplane {

/// n points on the parabola y = x^2, x = 0..n-1. Strictly convex.
PointSet gen_convex(std::size_t n);

/// Triangle v1 v2 v3 (indices 0, 1, 2) with n - 3 interior points on a chain
/// from v2 to v3 bulging towards v1, so that every segment from v1 is
/// uncrossable. Maximum biplane graphs on it have 4n - 10 edges.
PointSet gen_arc_in_triangle(std::size_t n);

/// Convex h-gon v1..vh (indices 0..h-1, counterclockwise) with n - h points
/// (indices h..n-1) inside triangle v1 v2 vh on a chain from v2 bulging
/// towards v1, all on v2's side of the line v1 v3.
PointSet gen_hgon_with_arc(std::size_t n, std::size_t h);

/// Edges every maximal biplane graph on gen_hgon_with_arc(n, h) contains:
/// the hull, the star from v1 to the interior points, and the path
/// v2, v_{h+1}, ..., v_n.
std::vector<Edge> hgon_forced_edges(std::size_t n, std::size_t h);

/// One local exchange applied to a grid graph.
struct GridExchange {
  std::string label;
  int layer = 0;  // 0 = layer1, 1 = layer2
  std::vector<Edge> removed;
  std::vector<Edge> added;
};

/// The k x k lattice graph: (i,j) joined to (i+-1,j), (i,j+-1), (i+-1,j+1),
/// (i+-1,j-1), (i+2,j+1), (i-2,j-1), (i+1,j-2), (i-1,j+2). Layer 1 holds the
/// lattice triangulation spanned by (1,0),(1,1),(2,1); layer 2 the one spanned
/// by (0,1),(1,-1),(1,-2).
struct GridGraph {
  std::size_t k = 0;
  GeometricGraph graph;
  std::vector<int> layer;  // per edge of `graph`
  std::vector<GridExchange> exchanges;

  Vertex vertex(int i, int j) const;
  std::pair<int, int> coords(Vertex v) const;
  BiplaneDecomposition decomposition() const;
};

GridGraph gen_grid(std::size_t k);

/// The four-edge exchange raising the degrees of (k-1,1) and (k-1,2), and its
/// rotations by 90, 180 and 270 degrees at the other corners. Rotating the
/// grid by 90 degrees swaps the two lattice triangulations, so alternate
/// corners act on alternate layers. Requires k >= 8.
GridGraph apply_corner_flips(const GridGraph& g);

/// The two-edge exchange raising the degree of boundary vertex (i,1); `side`
/// rotates the construction by side * 90 degrees. Requires 4 <= i <= k-3.
GridGraph apply_boundary_flips(const GridGraph& g, int i, int side = 0);

struct BoundReport {
  std::size_t n = 0;
  std::size_t h = 0;
  std::size_t min_maximal = 0;                // every maximal graph has at least this many edges
  std::size_t max_edges_hull = 0;             // 6n - 3h - 6
  std::optional<std::size_t> max_edges_abs;   // 6n - 18, only for n >= 8
  std::size_t maximum_lower = 0;              // some biplane graph reaches this many
  std::size_t max_edges() const;              // tightest applicable upper bound
};

BoundReport bounds(std::size_t n, std::size_t h);

}  // namespace biplane
