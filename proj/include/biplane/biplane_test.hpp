#pragma once

#include <variant>
#include <vector>

#include "biplane/graph.hpp"

namespace biplane {

/// Edge cover by two crossing-free layers. Layers produced by test_biplane
/// are disjoint; layers produced by augmentation are two triangulations that
/// share their uncrossed (purple) edges.
struct BiplaneDecomposition {
  std::vector<Edge> layer1;
  std::vector<Edge> layer2;
};

/// Odd cycle in the crossing graph: consecutive edges (cyclically) cross.
struct OddCycleWitness {
  std::vector<Edge> cycle;
};

/// Fast reject: n >= 8 and m > 6n - 18.
struct TooManyEdges {
  std::size_t vertices = 0;
  std::size_t edges = 0;
  std::size_t limit = 0;
};

using BiplaneVerdict = std::variant<BiplaneDecomposition, OddCycleWitness, TooManyEdges>;

/// Node per edge (by index), arc iff the open segments cross. Rows sorted.
std::vector<std::vector<std::size_t>> crossing_graph(const GeometricGraph& g);

/// Two-colours the crossing graph by BFS. Components are seeded in edge-index
/// order and the seed goes to layer1, so the result is reproducible.
BiplaneVerdict test_biplane(const GeometricGraph& g);

inline bool is_biplane(const BiplaneVerdict& v) { return std::holds_alternative<BiplaneDecomposition>(v); }
inline bool is_biplane(const GeometricGraph& g) { return is_biplane(test_biplane(g)); }

/// Each layer crossing-free and together they cover exactly the graph's edges.
bool verify_decomposition(const GeometricGraph& g, const BiplaneDecomposition& d);
/// Odd length >= 3, edges of g, consecutive edges cross.
bool verify_witness(const GeometricGraph& g, const OddCycleWitness& w);

class NotBiplaneError : public std::runtime_error {
 public:
  NotBiplaneError(BiplaneVerdict verdict, const std::string& what)
      : std::runtime_error(what), verdict_(std::move(verdict)) {}
  const BiplaneVerdict& verdict() const { return verdict_; }

 private:
  BiplaneVerdict verdict_;
};

}  // namespace biplane
