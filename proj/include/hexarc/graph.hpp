#pragma once

#include <algorithm>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "hexarc/error.hpp"

namespace hexarc {

/// Immutable simple undirected graph with sorted adjacency lists. The
/// default constructor path requires connectivity; orbital graphs opt out
/// because distance orbitals of bipartite graphs are legitimately
/// disconnected.
class Graph {
public:
  static Graph from_edges(int n, const std::vector<std::pair<int, int>>& edges,
                          bool require_connected = true) {
    if (n <= 0) fail(Errc::bad_argument, "vertex count must be positive");
    std::vector<std::vector<int>> adj(n);
    for (auto [u, v] : edges) {
      if (u < 0 || u >= n || v < 0 || v >= n)
        fail(Errc::bad_vertex, "edge endpoint out of range: (" + std::to_string(u) + "," + std::to_string(v) + ")");
      if (u == v) fail(Errc::loop_edge, "loop at vertex " + std::to_string(u));
      adj[u].push_back(v);
      adj[v].push_back(u);
    }
    for (int v = 0; v < n; ++v) {
      std::sort(adj[v].begin(), adj[v].end());
      if (std::adjacent_find(adj[v].begin(), adj[v].end()) != adj[v].end())
        fail(Errc::duplicate_edge, "duplicate edge at vertex " + std::to_string(v));
    }
    Graph g;
    g.adj_ = std::move(adj);
    g.m_ = static_cast<std::int64_t>(edges.size());
    if (require_connected && !g.is_connected()) fail(Errc::disconnected, "graph is not connected");
    return g;
  }

  bool is_connected() const {
    int n = vertex_count();
    std::vector<int> seen(n, 0), queue{0};
    seen[0] = 1;
    for (std::size_t h = 0; h < queue.size(); ++h)
      for (int w : adj_[queue[h]])
        if (!seen[w]) {
          seen[w] = 1;
          queue.push_back(w);
        }
    return static_cast<int>(queue.size()) == n;
  }

  int vertex_count() const { return static_cast<int>(adj_.size()); }
  std::int64_t edge_count() const { return m_; }
  const std::vector<int>& neighbors(int v) const { return adj_[v]; }
  int degree(int v) const { return static_cast<int>(adj_[v].size()); }

  bool has_edge(int u, int v) const {
    const auto& a = adj_[u];
    return std::binary_search(a.begin(), a.end(), v);
  }

  bool is_regular() const {
    for (int v = 1; v < vertex_count(); ++v)
      if (degree(v) != degree(0)) return false;
    return true;
  }

  /// Valency of a regular graph; nullopt if irregular.
  std::optional<int> valency() const {
    if (!is_regular()) return std::nullopt;
    return degree(0);
  }

  /// All edges as (u,v) with u < v, lexicographically sorted.
  std::vector<std::pair<int, int>> edges() const {
    std::vector<std::pair<int, int>> out;
    out.reserve(static_cast<std::size_t>(m_));
    for (int u = 0; u < vertex_count(); ++u)
      for (int v : adj_[u])
        if (u < v) out.emplace_back(u, v);
    return out;
  }

private:
  Graph() = default;

  std::vector<std::vector<int>> adj_;
  std::int64_t m_ = 0;
};

/// BFS distance partition from one root: layers, per-vertex distance, and
/// the layer sizes kappa[i].
struct DistanceData {
  int root = 0;
  std::vector<std::vector<int>> layers;
  std::vector<int> dist;
  std::vector<int> kappa;

  int eccentricity() const { return static_cast<int>(layers.size()) - 1; }
};

inline DistanceData bfs_layers(const Graph& g, int root) {
  int n = g.vertex_count();
  if (root < 0 || root >= n) fail(Errc::bad_vertex, "BFS root out of range");
  DistanceData d;
  d.root = root;
  d.dist.assign(n, -1);
  d.dist[root] = 0;
  std::vector<int> queue{root};
  for (std::size_t h = 0; h < queue.size(); ++h) {
    int u = queue[h];
    for (int w : g.neighbors(u))
      if (d.dist[w] == -1) {
        d.dist[w] = d.dist[u] + 1;
        queue.push_back(w);
      }
  }
  if (static_cast<int>(queue.size()) != n)
    fail(Errc::disconnected, "BFS layers need a connected graph");
  int ecc = *std::max_element(d.dist.begin(), d.dist.end());
  d.layers.assign(ecc + 1, {});
  for (int v : queue) d.layers[d.dist[v]].push_back(v);
  d.kappa.resize(ecc + 1);
  for (int i = 0; i <= ecc; ++i) d.kappa[i] = static_cast<int>(d.layers[i].size());
  return d;
}

/// Exact girth; nullopt means acyclic. Minimizing dist(u)+dist(w)+1 over all
/// non-tree edges of a BFS from every root gives the exact value.
inline std::optional<int> girth(const Graph& g) {
  int n = g.vertex_count();
  std::optional<int> best;
  std::vector<int> dist(n), parent(n);
  for (int root = 0; root < n; ++root) {
    std::fill(dist.begin(), dist.end(), -1);
    std::fill(parent.begin(), parent.end(), -1);
    dist[root] = 0;
    std::vector<int> queue{root};
    for (std::size_t h = 0; h < queue.size(); ++h) {
      int u = queue[h];
      if (best && 2 * dist[u] >= *best) break;  // deeper levels cannot improve
      for (int w : g.neighbors(u)) {
        if (dist[w] == -1) {
          dist[w] = dist[u] + 1;
          parent[w] = u;
          queue.push_back(w);
        } else if (w != parent[u] && u != parent[w]) {
          int len = dist[u] + dist[w] + 1;
          if (!best || len < *best) best = len;
        }
      }
    }
  }
  return best;
}

inline int diameter(const Graph& g) {
  int best = 0;
  for (int root = 0; root < g.vertex_count(); ++root)
    best = std::max(best, bfs_layers(g, root).eccentricity());
  return best;
}

/// Either a 2-coloring (parts[0] contains vertex 0) or a concrete odd closed
/// walk witnessing an odd cycle.
struct BipartiteResult {
  bool bipartite = false;
  std::array<std::vector<int>, 2> parts;
  std::vector<int> odd_walk;
};

inline BipartiteResult is_bipartite(const Graph& g) {
  int n = g.vertex_count();
  std::vector<int> color(n, -1), parent(n, -1);
  color[0] = 0;
  std::vector<int> queue{0};
  BipartiteResult r;
  for (std::size_t h = 0; h < queue.size(); ++h) {
    int u = queue[h];
    for (int w : g.neighbors(u)) {
      if (color[w] == -1) {
        color[w] = color[u] ^ 1;
        parent[w] = u;
        queue.push_back(w);
      } else if (color[w] == color[u]) {
        // odd closed walk: root..u, then w..root reversed
        std::vector<int> up, down;
        for (int x = u; x != -1; x = parent[x]) up.push_back(x);
        std::reverse(up.begin(), up.end());
        for (int x = w; x != -1; x = parent[x]) down.push_back(x);
        r.odd_walk = up;
        r.odd_walk.insert(r.odd_walk.end(), down.begin(), down.end());
        return r;
      }
    }
  }
  r.bipartite = true;
  for (int v = 0; v < n; ++v) r.parts[color[v]].push_back(v);
  return r;
}

/// Intersection array of a distance-regular graph: b[0..d-1], c[1..d]
/// (stored from index 0), a[i] = k - b[i] - c[i], and layer sizes kappa.
struct IntersectionArray {
  int d = 0;
  std::vector<int> b;      // b[i] = b_i, 0 <= i <= d-1
  std::vector<int> c;      // c[i-1] = c_i, 1 <= i <= d
  std::vector<int> a;      // a[i-1] = a_i, 1 <= i <= d
  std::vector<int> kappa;  // kappa[i], 0 <= i <= d
};

struct DrgWitness {
  int root = 0;
  int vertex = 0;
  int layer = 0;
};

struct DrgResult {
  std::optional<IntersectionArray> array;
  std::optional<DrgWitness> witness;
};

/// Computes the candidate array from root 0 and then verifies it for every
/// root and every vertex in every layer; returns the first violation instead
/// if the graph is not distance-regular.
inline DrgResult intersection_array(const Graph& g) {
  auto k = g.valency();
  if (!k) fail(Errc::not_regular, "intersection array requires a regular graph");
  int n = g.vertex_count();

  auto counts = [&](const DistanceData& dd, int beta) {
    int i = dd.dist[beta];
    int c = 0, a = 0, b = 0;
    for (int w : g.neighbors(beta)) {
      int dw = dd.dist[w];
      if (dw == i - 1)
        ++c;
      else if (dw == i)
        ++a;
      else
        ++b;
    }
    return std::array<int, 3>{c, a, b};
  };

  DistanceData d0 = bfs_layers(g, 0);
  int d = d0.eccentricity();
  IntersectionArray arr;
  arr.d = d;
  arr.kappa = d0.kappa;
  arr.b.push_back(*k);
  for (int i = 1; i <= d; ++i) {
    auto [c, a, b] = counts(d0, d0.layers[i][0]);
    arr.c.push_back(c);
    arr.a.push_back(a);
    if (i < d) arr.b.push_back(b);
  }

  for (int root = 0; root < n; ++root) {
    DistanceData dd = root == 0 ? d0 : bfs_layers(g, root);
    if (dd.eccentricity() != d)
      return {std::nullopt, DrgWitness{root, dd.layers.back()[0], dd.eccentricity()}};
    for (int i = 1; i <= d; ++i) {
      for (int beta : dd.layers[i]) {
        auto [c, a, b] = counts(dd, beta);
        int expect_b = i < d ? arr.b[i] : 0;
        if (c != arr.c[i - 1] || a != arr.a[i - 1] || b != expect_b)
          return {std::nullopt, DrgWitness{root, beta, i}};
      }
    }
  }
  return {arr, std::nullopt};
}

/// Edge-counting identity between consecutive layers:
/// kappa_{i-1} * b_{i-1} == kappa_i * c_i for 1 <= i <= d.
inline bool check_counting_identity(const IntersectionArray& arr) {
  for (int i = 1; i <= arr.d; ++i) {
    std::int64_t lhs = static_cast<std::int64_t>(arr.kappa[i - 1]) * arr.b[i - 1];
    std::int64_t rhs = static_cast<std::int64_t>(arr.kappa[i]) * arr.c[i - 1];
    if (lhs != rhs) return false;
  }
  return true;
}

}  // namespace hexarc
