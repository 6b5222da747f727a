#include <random>
#include <set>

#include "biplane/biplane_test.hpp"
#include "doctest.h"
#include "oracles.hpp"

using namespace biplane;

namespace {

GeometricGraph complete_graph(const PointSet& s) {
  std::vector<Edge> edges;
  for (Vertex a = 0; a < s.size(); ++a) {
    for (Vertex b = a + 1; b < s.size(); ++b) edges.push_back({a, b});
  }
  return GeometricGraph(s, std::move(edges));
}

}  // namespace

TEST_CASE("K4 in convex position is biplane") {
  const auto g = complete_graph(PointSet({{0, 0}, {4, 0}, {4, 4}, {0, 4}}));
  const auto v = test_biplane(g);
  REQUIRE(is_biplane(v));
  const auto& d = std::get<BiplaneDecomposition>(v);
  CHECK(verify_decomposition(g, d));
  CHECK(d.layer1.size() + d.layer2.size() == 6);
  // The diagonals cross, so they are split.
  const std::set<Edge> l1(d.layer1.begin(), d.layer1.end());
  CHECK(l1.contains({0, 2}) != l1.contains({1, 3}));
}

TEST_CASE("convex K5 yields the pentagram as witness") {
  const auto g = complete_graph(PointSet({{0, 10}, {10, 3}, {6, -8}, {-6, -8}, {-10, 3}}));
  const auto v = test_biplane(g);
  REQUIRE(std::holds_alternative<OddCycleWitness>(v));
  const auto& w = std::get<OddCycleWitness>(v);
  CHECK(w.cycle.size() == 5);
  CHECK(verify_witness(g, w));
  for (const auto& e : w.cycle) CHECK((e.b - e.a == 2 || e.b - e.a == 3));  // diagonals only
}

TEST_CASE("fast reject above 6n - 18 edges") {
  std::mt19937_64 rng(5);
  const auto g = complete_graph(oracle::random_points(rng, 10));
  const auto v = test_biplane(g);
  REQUIRE(std::holds_alternative<TooManyEdges>(v));
  CHECK(std::get<TooManyEdges>(v).limit == 42);
  CHECK(std::get<TooManyEdges>(v).edges == 45);

  // n < 8 never fast-rejects.
  const auto k7 = complete_graph(oracle::random_points(rng, 7));
  CHECK_FALSE(std::holds_alternative<TooManyEdges>(test_biplane(k7)));
}

TEST_CASE("empty and tiny graphs") {
  PointSet s({{0, 0}, {1, 0}, {0, 1}});
  const GeometricGraph empty(s, {});
  const auto v = test_biplane(empty);
  REQUIRE(is_biplane(v));
  CHECK(std::get<BiplaneDecomposition>(v).layer1.empty());
  CHECK(is_biplane(complete_graph(s)));
}

TEST_CASE("verdicts agree with the rational oracle; certificates re-verify") {
  std::mt19937_64 rng(2024);
  int yes = 0, no = 0;
  for (int trial = 0; trial < 400; ++trial) {
    const std::size_t n = 4 + trial % 9;
    const auto s = oracle::random_points(rng, n);
    const auto g = oracle::random_graph(rng, s, 0.15 + 0.1 * (trial % 6));
    const auto v = test_biplane(g);
    if (const auto* d = std::get_if<BiplaneDecomposition>(&v)) {
      ++yes;
      REQUIRE(oracle::crossing_graph_bipartite(g));
      REQUIRE(verify_decomposition(g, *d));
      std::set<Edge> l1(d->layer1.begin(), d->layer1.end());
      for (const auto& e : d->layer2) REQUIRE_FALSE(l1.contains(e));
    } else if (const auto* w = std::get_if<OddCycleWitness>(&v)) {
      ++no;
      REQUIRE_FALSE(oracle::crossing_graph_bipartite(g));
      REQUIRE(verify_witness(g, *w));
    } else {
      REQUIRE(g.edge_count() > 6 * n - 18);
    }
  }
  CHECK(yes > 50);
  CHECK(no > 50);
}

TEST_CASE("crossing graph is symmetric and matches the oracle") {
  std::mt19937_64 rng(99);
  for (int trial = 0; trial < 50; ++trial) {
    const auto s = oracle::random_points(rng, 9);
    const auto g = oracle::random_graph(rng, s, 0.4);
    const auto cg = crossing_graph(g);
    for (std::size_t i = 0; i < g.edge_count(); ++i) {
      for (std::size_t j = 0; j < g.edge_count(); ++j) {
        const bool listed = std::binary_search(cg[i].begin(), cg[i].end(), j);
        const auto e = g.edges()[i], f = g.edges()[j];
        CHECK(listed == (i != j && oracle::cross(s[e.a], s[e.b], s[f.a], s[f.b])));
      }
    }
  }
}

TEST_CASE("test_biplane is deterministic") {
  std::mt19937_64 rng(8);
  const auto s = oracle::random_points(rng, 11);
  const auto g = oracle::random_biplane(rng, s, 200);
  const auto a = std::get<BiplaneDecomposition>(test_biplane(g));
  const auto b = std::get<BiplaneDecomposition>(test_biplane(g));
  CHECK(a.layer1 == b.layer1);
  CHECK(a.layer2 == b.layer2);
}

TEST_CASE("verify_witness rejects malformed cycles") {
  const auto g = complete_graph(PointSet({{0, 10}, {10, 3}, {6, -8}, {-6, -8}, {-10, 3}}));
  const auto w = std::get<OddCycleWitness>(test_biplane(g));
  auto even = w;
  even.cycle.pop_back();
  CHECK_FALSE(verify_witness(g, even));
  auto broken = w;
  broken.cycle[0] = {0, 1};  // hull edge crosses nothing
  CHECK_FALSE(verify_witness(g, broken));
}
