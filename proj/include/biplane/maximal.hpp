#pragma once

#include <array>
#include <deque>
#include <functional>
#include <optional>
#include <unordered_map>
#include <vector>

#include "biplane/biplane_test.hpp"
#include "biplane/parity_union_find.hpp"
#include "biplane/triangulation.hpp"

namespace biplane {

enum class FlipClause {
  Red,        // flippable in the red triangulation
  Blue,       // flippable in the blue triangulation
  CrossFace,  // red and blue triangles from different purple faces
};

const char* to_string(FlipClause c);

struct FlipRecord {
  Edge flipped;   // purple edge that stops being purple
  Edge inserted;  // the new diagonal
  FlipClause clause;
  std::array<std::size_t, 2> merged_faces;  // face ids on either side before the flip
  std::vector<Edge> requeued;               // purple edges of the triangles that contained `flipped`
};

/// Chord sets of one bounded face of the purple graph.
struct PurpleFace {
  std::size_t id = 0;
  std::vector<Edge> boundary;  // purple edges with this face on at least one side
  std::vector<Edge> red;       // R_F
  std::vector<Edge> blue;      // B_F
};

/// Red and blue triangulations of a biplane graph held as one pool of
/// triangles. Each bounded purple face owns two triangulations of its
/// interior ("sheets"); a parity union-find over triangles records which
/// sheet is currently red. Exchanging the colours of a face is a root toggle,
/// and merging two faces across a flipped edge is a union.
class MaximalState {
 public:
  /// Decomposes g, completes both layers, classifies purple edges, and queues
  /// every purple interior edge. Throws NotBiplaneError.
  static MaximalState build(const GeometricGraph& g);

  const PointSet& points() const { return points_; }
  std::vector<Edge> purple_edges() const;  // sorted
  std::vector<Edge> red_edges() const;     // sorted, includes purple
  std::vector<Edge> blue_edges() const;    // sorted, includes purple
  std::vector<Edge> edges() const;         // sorted union
  std::size_t edge_count() const;
  bool is_purple(Edge e) const { return purple_.contains(e.key()); }
  bool is_hull_edge(Edge e) const;

  /// Throws GeometryError if e is not purple or is a hull edge.
  bool is_colorblind_flippable(Edge e) const;
  /// Performs the flip; throws GeometryError when e is not colorblind flippable.
  FlipRecord apply_flip(Edge e);
  /// Purple edges of the (up to four) triangles containing e, e excluded.
  std::vector<Edge> neighborhood(Edge e) const;

  /// Runs the work queue to exhaustion.
  void run(const std::function<void(const FlipRecord&)>& trace = {});
  bool certify_maximal() const;

  std::vector<PurpleFace> faces() const;
  std::size_t face_of(Edge chord) const;  // throws for purple edges

  GeometricGraph graph() const;
  BiplaneDecomposition decomposition() const;  // red, blue
  Triangulation red() const;
  Triangulation blue() const;

  /// Structural self-check of the pool (adjacency, sheets, faces).
  bool check_invariants(std::string* why = nullptr) const;

 private:
  static constexpr std::int32_t kNoTri = -1;

  struct Tri {
    std::array<Vertex, 3> v;            // counterclockwise
    std::array<std::int32_t, 3> adj{};  // neighbour across side (v[i], v[i+1]) in the same sheet, or kNoTri at purple sides
  };
  // Triangles on each side of a purple edge (one per sheet). Left is the side
  // to the left of a -> b with a < b. Hull edges have one empty side.
  struct Sides {
    std::array<std::int32_t, 2> left{kNoTri, kNoTri};
    std::array<std::int32_t, 2> right{kNoTri, kNoTri};
  };
  struct Choice {
    std::int32_t left;
    std::int32_t right;
  };

  MaximalState() = default;

  int side_index(std::int32_t t, Vertex a, Vertex b) const;  // side (a,b) as stored
  Vertex apex(std::int32_t t, Vertex a, Vertex b) const;
  int sheet(std::int32_t t) const { return uf_.parity(static_cast<std::size_t>(t)); }
  std::size_t face(std::int32_t t) const { return uf_.find(static_cast<std::size_t>(t)); }
  std::optional<Choice> choose_flip(Edge e) const;
  void replace_at_side(Vertex a, Vertex b, std::int32_t old_tri, std::int32_t new_tri);
  std::vector<Edge> sheet_edges(int which) const;

  PointSet points_;
  std::vector<Tri> tris_;
  std::unordered_map<std::uint64_t, Sides> purple_;
  mutable ParityUnionFind uf_;
  std::deque<Edge> queue_;
};

/// Augments a biplane graph to a maximal biplane graph. The decomposition is
/// the final red/blue triangulation pair (their shared edges are purple).
struct AugmentResult {
  GeometricGraph graph;
  BiplaneDecomposition decomposition;
  std::size_t flips = 0;
};
AugmentResult maximal_augment(const GeometricGraph& g, const std::function<void(const FlipRecord&)>& trace = {});

}  // namespace biplane
