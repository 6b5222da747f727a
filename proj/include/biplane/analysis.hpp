#pragma once

#include <cstdint>
#include <map>
#include <vector>

#include "biplane/biplane_test.hpp"

namespace biplane {

struct ConnectivityReport {
  std::size_t kappa = 0;
  std::size_t min_degree = 0;
  std::vector<Vertex> cut;  // size kappa; empty for complete and disconnected graphs
};

/// Exact vertex connectivity by unit-capacity max-flow on the vertex-split
/// network. Fix a vertex v of minimum degree and take the minimum over v
/// against each non-neighbour and over non-adjacent pairs of v's neighbours.
ConnectivityReport vertex_connectivity(const GeometricGraph& g);

/// True iff removing `cut` leaves at least two vertices in different components.
bool disconnects(const GeometricGraph& g, const std::vector<Vertex>& cut);

/// Definition-level maximality: every non-edge makes the graph non-biplane.
/// Throws NotBiplaneError if g itself is not biplane.
bool maximality_oracle(const GeometricGraph& g);

struct OracleResult {
  std::size_t maximum_edges = 0;
  GeometricGraph witness;
  std::size_t triangulation_count = 0;
};

/// Largest biplane graph on the points: maximises |T1 ∪ T2| over all pairs of
/// triangulations. Throws GeometryError when the set exceeds `cap` points.
OracleResult brute_force_maximum(const PointSet& points, std::size_t cap = 9);

struct GapReport {
  std::size_t min_edges = 0;
  std::size_t max_edges = 0;
  GeometricGraph min_graph;
  GeometricGraph max_graph;
  std::size_t trials = 0;
};

/// Runs maximal_augment from random single-edge starts. Each trial also
/// relabels the points by a random permutation, since the augmentation's
/// tie-breaking follows vertex order. Reproducible per seed.
GapReport find_maximal_gap(const PointSet& points, std::size_t trials, std::uint64_t seed);

std::map<std::size_t, std::size_t> degree_histogram(const GeometricGraph& g);

}  // namespace biplane
