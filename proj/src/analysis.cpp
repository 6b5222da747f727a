#include "biplane/analysis.hpp"

#include <algorithm>
#include <bit>
#include <deque>
#include <limits>
#include <numeric>
#include <optional>
#include <random>
#include <tuple>

#include "biplane/maximal.hpp"
#include "biplane/triangulation.hpp"

namespace biplane {

namespace {

// Vertex v becomes in-node 2v and out-node 2v+1, joined by an arc of
// capacity 1. Graph edges become pairs of unbounded arcs out -> in.
class SplitNetwork {
 public:
  explicit SplitNetwork(const std::vector<std::vector<Vertex>>& adj) : head_(2 * adj.size(), -1) {
    for (Vertex v = 0; v < adj.size(); ++v) {
      inner_.push_back(static_cast<int>(to_.size()));
      add_arc(2 * v, 2 * v + 1, 1);
      for (Vertex w : adj[v]) add_arc(2 * v + 1, 2 * w, kInf);
    }
    base_cap_ = cap_;
  }

  // Max flow from s to t, stopping once it reaches `limit`. The source and
  // sink lose their unit bottleneck for the duration of the call.
  std::size_t flow(Vertex s, Vertex t, std::size_t limit) {
    cap_ = base_cap_;
    cap_[inner_arc(s)] = kInf;
    cap_[inner_arc(t)] = kInf;
    std::size_t total = 0;
    const int src = 2 * static_cast<int>(s) + 1, dst = 2 * static_cast<int>(t);
    std::vector<int> via(head_.size());
    while (total < limit) {
      std::fill(via.begin(), via.end(), -1);
      std::deque<int> q{src};
      via[src] = -2;
      while (!q.empty() && via[dst] == -1) {
        const int x = q.front();
        q.pop_front();
        for (int a = head_[x]; a != -1; a = next_[a]) {
          if (cap_[a] > 0 && via[to_[a]] == -1) {
            via[to_[a]] = a;
            q.push_back(to_[a]);
          }
        }
      }
      if (via[dst] == -1) break;
      for (int x = dst; x != src; x = to_[via[x] ^ 1]) {
        cap_[via[x]] -= 1;
        cap_[via[x] ^ 1] += 1;
      }
      ++total;
    }
    return total;
  }

  // Vertices whose in-node is reachable from s in the residual network but
  // whose out-node is not: a minimum vertex cut after a full flow.
  std::vector<Vertex> cut(Vertex s) const {
    std::vector<char> seen(head_.size(), 0);
    std::deque<int> q{2 * static_cast<int>(s) + 1};
    seen[q.front()] = 1;
    while (!q.empty()) {
      const int x = q.front();
      q.pop_front();
      for (int a = head_[x]; a != -1; a = next_[a]) {
        if (cap_[a] > 0 && !seen[to_[a]]) {
          seen[to_[a]] = 1;
          q.push_back(to_[a]);
        }
      }
    }
    std::vector<Vertex> out;
    for (Vertex v = 0; 2 * v < head_.size(); ++v) {
      if (seen[2 * v] && !seen[2 * v + 1]) out.push_back(v);
    }
    return out;
  }

 private:
  static constexpr int kInf = std::numeric_limits<int>::max() / 2;

  void add_arc(int from, int to, int cap) {
    for (auto [x, y, c] : {std::tuple{from, to, cap}, std::tuple{to, from, 0}}) {
      to_.push_back(y);
      cap_.push_back(c);
      next_.push_back(head_[x]);
      head_[x] = static_cast<int>(to_.size()) - 1;
    }
  }
  int inner_arc(Vertex v) const { return inner_[v]; }

  std::vector<int> head_, next_, to_, cap_, base_cap_, inner_;
};

bool connected_without(const std::vector<std::vector<Vertex>>& adj, const std::vector<char>& removed) {
  const std::size_t n = adj.size();
  Vertex start = 0;
  while (start < n && removed[start]) ++start;
  if (start == n) return true;
  std::vector<char> seen(n, 0);
  std::vector<Vertex> stack{start};
  seen[start] = 1;
  std::size_t reached = 1;
  while (!stack.empty()) {
    const Vertex v = stack.back();
    stack.pop_back();
    for (Vertex w : adj[v]) {
      if (!removed[w] && !seen[w]) {
        seen[w] = 1;
        ++reached;
        stack.push_back(w);
      }
    }
  }
  const auto alive = static_cast<std::size_t>(std::count(removed.begin(), removed.end(), 0));
  return reached == alive;
}

}  // namespace

bool disconnects(const GeometricGraph& g, const std::vector<Vertex>& cut) {
  std::vector<char> removed(g.vertex_count(), 0);
  for (Vertex v : cut) removed.at(v) = 1;
  return !connected_without(g.adjacency(), removed);
}

ConnectivityReport vertex_connectivity(const GeometricGraph& g) {
  const std::size_t n = g.vertex_count();
  if (n < 2) throw GeometryError("vertex connectivity needs at least two vertices");
  const auto adj = g.adjacency();
  ConnectivityReport r;
  r.min_degree = n;
  Vertex v = 0;
  for (Vertex u = 0; u < n; ++u) {
    if (adj[u].size() < r.min_degree) {
      r.min_degree = adj[u].size();
      v = u;
    }
  }
  if (!connected_without(adj, std::vector<char>(n, 0))) return r;  // kappa 0

  std::vector<std::vector<char>> is_adj(n, std::vector<char>(n, 0));
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex w : adj[u]) is_adj[u][w] = 1;
  }

  SplitNetwork net(adj);
  r.kappa = n - 1;
  std::optional<std::pair<Vertex, Vertex>> best;
  auto consider = [&](Vertex s, Vertex t) {
    const std::size_t f = net.flow(s, t, r.kappa);
    if (f < r.kappa) {
      r.kappa = f;
      best = {s, t};
    }
  };
  for (Vertex w = 0; w < n; ++w) {
    if (w != v && !is_adj[v][w]) consider(v, w);
  }
  for (std::size_t i = 0; i < adj[v].size(); ++i) {
    for (std::size_t j = i + 1; j < adj[v].size(); ++j) {
      if (!is_adj[adj[v][i]][adj[v][j]]) consider(adj[v][i], adj[v][j]);
    }
  }
  if (best) {
    net.flow(best->first, best->second, n);
    r.cut = net.cut(best->first);
  }
  return r;
}

bool maximality_oracle(const GeometricGraph& g) {
  if (auto v = test_biplane(g); !is_biplane(v)) throw NotBiplaneError(std::move(v), "input is not biplane");
  const auto n = static_cast<Vertex>(g.vertex_count());
  for (Vertex a = 0; a < n; ++a) {
    for (Vertex b = a + 1; b < n; ++b) {
      const Edge e{a, b};
      if (g.contains(e)) continue;
      if (g.points().strictness() == Strictness::Relaxed) {
        bool blocked = false;
        for (Vertex c = 0; c < n && !blocked; ++c) {
          blocked = strictly_inside_segment(g.points()[c], g.points()[a], g.points()[b]);
        }
        if (blocked) continue;  // not a valid edge on this point set
      }
      if (is_biplane(g.with_edge(e))) return false;
    }
  }
  return true;
}

OracleResult brute_force_maximum(const PointSet& points, std::size_t cap) {
  const std::size_t n = points.size();
  if (n > cap) throw GeometryError("oracle limited to " + std::to_string(cap) + " points");
  OracleResult r;
  if (n < 3) {
    std::vector<Edge> edges;
    if (n == 2) edges.push_back({0, 1});
    r.maximum_edges = edges.size();
    r.witness = GeometricGraph(points, std::move(edges));
    return r;
  }

  const auto triangulations = enumerate_triangulations(points, cap);
  r.triangulation_count = triangulations.size();
  const std::size_t bits = n * (n - 1) / 2;
  const std::size_t words = (bits + 63) / 64;
  auto slot = [n](Edge e) { return e.a * (2 * n - e.a - 1) / 2 + (e.b - e.a - 1); };

  std::vector<std::uint64_t> sets(triangulations.size() * words, 0);
  for (std::size_t t = 0; t < triangulations.size(); ++t) {
    for (const auto& e : triangulations[t].edges()) {
      const std::size_t s = slot(e);
      sets[t * words + s / 64] |= std::uint64_t{1} << (s % 64);
    }
  }
  const std::size_t h = convex_hull(points).size();
  const std::size_t ceiling = 6 * n - 3 * h - 6;
  std::size_t best = 0, bi = 0, bj = 0;
  for (std::size_t i = 0; i < triangulations.size() && best < ceiling; ++i) {
    for (std::size_t j = i; j < triangulations.size(); ++j) {
      std::size_t count = 0;
      for (std::size_t w = 0; w < words; ++w) {
        count += static_cast<std::size_t>(std::popcount(sets[i * words + w] | sets[j * words + w]));
      }
      if (count > best) {
        best = count;
        bi = i;
        bj = j;
      }
    }
  }
  std::vector<Edge> edges = triangulations[bi].edges();
  for (const auto& e : triangulations[bj].edges()) edges.push_back(e);
  std::sort(edges.begin(), edges.end());
  edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
  r.maximum_edges = best;
  r.witness = GeometricGraph(points, std::move(edges));
  return r;
}

GapReport find_maximal_gap(const PointSet& points, std::size_t trials, std::uint64_t seed) {
  const std::size_t n = points.size();
  if (n < 3) throw GeometryError("gap search needs at least three points");
  std::mt19937_64 rng(seed);
  GapReport r;
  r.trials = trials;
  std::vector<Vertex> perm(n);
  for (std::size_t trial = 0; trial < trials; ++trial) {
    std::iota(perm.begin(), perm.end(), 0);
    std::shuffle(perm.begin(), perm.end(), rng);
    // perm[new index] = old index
    std::vector<Point> relabelled(n);
    for (std::size_t i = 0; i < n; ++i) relabelled[i] = points[perm[i]];
    std::uniform_int_distribution<Vertex> pick(0, static_cast<Vertex>(n - 1));
    const Vertex a = pick(rng);
    Vertex b = pick(rng);
    while (b == a) b = pick(rng);

    GeometricGraph start(PointSet(std::move(relabelled), points.strictness()), {make_edge(a, b)});
    const auto out = maximal_augment(start);
    std::vector<Edge> edges;
    for (const auto& e : out.graph.edges()) edges.push_back(make_edge(perm[e.a], perm[e.b]));
    std::sort(edges.begin(), edges.end());
    GeometricGraph result(points, std::move(edges));

    const std::size_t m = result.edge_count();
    if (trial == 0 || m < r.min_edges) {
      r.min_edges = m;
      r.min_graph = result;
    }
    if (trial == 0 || m > r.max_edges) {
      r.max_edges = m;
      r.max_graph = std::move(result);
    }
  }
  return r;
}

std::map<std::size_t, std::size_t> degree_histogram(const GeometricGraph& g) {
  std::map<std::size_t, std::size_t> hist;
  for (const auto& nbrs : g.adjacency()) ++hist[nbrs.size()];
  return hist;
}

}  // namespace biplane
