#pragma once

// Simple undirected graphs on dense vertex indices 0..n-1, plus the
// distance-based operations everything else is built from: BFS distances,
// the square operator, short-cycle enumeration and cut vertices.

#include <algorithm>
#include <cstddef>
#include <deque>
#include <functional>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "sqcolor/error.hpp"

namespace sqcolor {

using Vertex = int;
using Edge = std::pair<Vertex, Vertex>;

/// Shortest-path length; std::nullopt stands for "infinite" (disconnected).
using Distance = std::optional<int>;

class Graph {
 public:
  Graph() = default;

  /// Validating constructor. Edges are unordered; a repeated pair in either
  /// orientation is rejected rather than merged.
  Graph(std::size_t n, std::span<const Edge> edge_list) : adjacency_(n) {
    for (auto [u, v] : edge_list) {
      if (u < 0 || v < 0 || static_cast<std::size_t>(u) >= n || static_cast<std::size_t>(v) >= n) {
        throw Error(ErrorCode::IndexOutOfRange,
                    "edge (" + std::to_string(u) + "," + std::to_string(v) + ") with n=" + std::to_string(n));
      }
      if (u == v) throw Error(ErrorCode::SelfLoop, "vertex " + std::to_string(u));
      adjacency_[u].push_back(v);
      adjacency_[v].push_back(u);
      edges_.emplace_back(std::min(u, v), std::max(u, v));
    }
    for (auto& nbrs : adjacency_) std::sort(nbrs.begin(), nbrs.end());
    std::sort(edges_.begin(), edges_.end());
    auto dup = std::adjacent_find(edges_.begin(), edges_.end());
    if (dup != edges_.end()) {
      throw Error(ErrorCode::DuplicateEdge,
                  "edge (" + std::to_string(dup->first) + "," + std::to_string(dup->second) + ")");
    }
  }

  Graph(std::size_t n, std::initializer_list<Edge> edge_list)
      : Graph(n, std::span<const Edge>(edge_list.begin(), edge_list.size())) {}

  std::size_t order() const noexcept { return adjacency_.size(); }
  std::size_t size() const noexcept { return edges_.size(); }

  const std::vector<Vertex>& neighbors(Vertex v) const {
    check_vertex(v);
    return adjacency_[v];
  }

  std::size_t degree(Vertex v) const { return neighbors(v).size(); }

  std::size_t max_degree() const noexcept {
    std::size_t best = 0;
    for (const auto& nbrs : adjacency_) best = std::max(best, nbrs.size());
    return best;
  }

  bool adjacent(Vertex u, Vertex v) const {
    const auto& nbrs = neighbors(u);
    check_vertex(v);
    return std::binary_search(nbrs.begin(), nbrs.end(), v);
  }

  /// Sorted, each as (smaller, larger).
  const std::vector<Edge>& edges() const noexcept { return edges_; }

  void check_vertex(Vertex v) const {
    if (v < 0 || static_cast<std::size_t>(v) >= adjacency_.size()) {
      throw Error(ErrorCode::IndexOutOfRange,
                  "vertex " + std::to_string(v) + " with n=" + std::to_string(adjacency_.size()));
    }
  }

  /// Subgraph induced by `keep`; vertex keep[i] becomes vertex i.
  Graph induced(std::span<const Vertex> keep) const {
    std::vector<int> position(order(), -1);
    for (std::size_t i = 0; i < keep.size(); ++i) {
      check_vertex(keep[i]);
      if (position[keep[i]] >= 0) {
        throw Error(ErrorCode::PreconditionViolated, "vertex repeated in induced set");
      }
      position[keep[i]] = static_cast<int>(i);
    }
    std::vector<Edge> kept;
    for (auto [u, v] : edges_) {
      if (position[u] >= 0 && position[v] >= 0) kept.emplace_back(position[u], position[v]);
    }
    return Graph(keep.size(), kept);
  }

  friend bool operator==(const Graph& a, const Graph& b) {
    return a.order() == b.order() && a.edges_ == b.edges_;
  }

 private:
  std::vector<std::vector<Vertex>> adjacency_;
  std::vector<Edge> edges_;
};

inline Graph build_graph(std::size_t n, std::span<const Edge> edge_list) { return Graph(n, edge_list); }

// Small named graphs used throughout tests and the CLI.
inline Graph path_graph(std::size_t n) {
  std::vector<Edge> e;
  for (std::size_t i = 0; i + 1 < n; ++i) e.emplace_back(static_cast<Vertex>(i), static_cast<Vertex>(i + 1));
  return Graph(n, e);
}

inline Graph cycle_graph(std::size_t n) {
  std::vector<Edge> e;
  for (std::size_t i = 0; i < n; ++i) e.emplace_back(static_cast<Vertex>(i), static_cast<Vertex>((i + 1) % n));
  return Graph(n, e);
}

inline Graph complete_graph(std::size_t n) {
  std::vector<Edge> e;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) e.emplace_back(static_cast<Vertex>(i), static_cast<Vertex>(j));
  return Graph(n, e);
}

inline Graph petersen_graph() {
  std::vector<Edge> e;
  for (Vertex i = 0; i < 5; ++i) {
    e.emplace_back(i, (i + 1) % 5);
    e.emplace_back(i, i + 5);
    e.emplace_back(5 + i, 5 + (i + 2) % 5);
  }
  return Graph(10, e);
}

/// BFS distances from `source`; unreachable vertices get std::nullopt.
inline std::vector<Distance> bfs_distances(const Graph& g, Vertex source) {
  g.check_vertex(source);
  std::vector<Distance> dist(g.order());
  std::deque<Vertex> queue{source};
  dist[source] = 0;
  while (!queue.empty()) {
    Vertex u = queue.front();
    queue.pop_front();
    for (Vertex w : g.neighbors(u)) {
      if (!dist[w]) {
        dist[w] = *dist[u] + 1;
        queue.push_back(w);
      }
    }
  }
  return dist;
}

inline Distance distance(const Graph& g, Vertex u, Vertex v) {
  g.check_vertex(v);
  return bfs_distances(g, u)[v];
}

/// Multi-source BFS: min over a in A, b in B of d(a, b).
inline Distance set_distance(const Graph& g, std::span<const Vertex> a, std::span<const Vertex> b) {
  if (a.empty() || b.empty()) throw Error(ErrorCode::EmptySet, "set_distance needs nonempty sets");
  std::vector<Distance> dist(g.order());
  std::deque<Vertex> queue;
  for (Vertex s : a) {
    g.check_vertex(s);
    if (!dist[s]) {
      dist[s] = 0;
      queue.push_back(s);
    }
  }
  while (!queue.empty()) {
    Vertex u = queue.front();
    queue.pop_front();
    for (Vertex w : g.neighbors(u)) {
      if (!dist[w]) {
        dist[w] = *dist[u] + 1;
        queue.push_back(w);
      }
    }
  }
  Distance best;
  for (Vertex t : b) {
    g.check_vertex(t);
    if (dist[t] && (!best || *dist[t] < *best)) best = dist[t];
  }
  return best;
}

inline std::size_t component_count(const Graph& g, std::span<const bool> removed = {}) {
  std::vector<bool> seen(g.order(), false);
  std::size_t count = 0;
  for (std::size_t s = 0; s < g.order(); ++s) {
    if (seen[s] || (!removed.empty() && removed[s])) continue;
    ++count;
    std::vector<Vertex> stack{static_cast<Vertex>(s)};
    seen[s] = true;
    while (!stack.empty()) {
      Vertex u = stack.back();
      stack.pop_back();
      for (Vertex w : g.neighbors(u)) {
        if (!seen[w] && (removed.empty() || !removed[w])) {
          seen[w] = true;
          stack.push_back(w);
        }
      }
    }
  }
  return count;
}

inline bool is_connected(const Graph& g) { return g.order() > 0 && component_count(g) == 1; }

/// G^2: u ~ v iff 1 <= d_G(u, v) <= 2.
inline Graph square(const Graph& g) {
  std::vector<Edge> e;
  for (std::size_t u = 0; u < g.order(); ++u) {
    std::vector<Vertex> reach;
    for (Vertex w : g.neighbors(static_cast<Vertex>(u))) {
      reach.push_back(w);
      for (Vertex x : g.neighbors(w)) reach.push_back(x);
    }
    std::sort(reach.begin(), reach.end());
    reach.erase(std::unique(reach.begin(), reach.end()), reach.end());
    for (Vertex v : reach) {
      if (v > static_cast<Vertex>(u)) e.emplace_back(static_cast<Vertex>(u), v);
    }
  }
  return Graph(g.order(), e);
}

using Cycle = std::vector<Vertex>;

struct CycleCensus {
  Distance girth;                    // nullopt for forests
  std::map<int, std::vector<Cycle>> cycles;  // length -> cycles, each canonical

  const std::vector<Cycle>& of_length(int k) const {
    static const std::vector<Cycle> none;
    auto it = cycles.find(k);
    return it == cycles.end() ? none : it->second;
  }
};

inline constexpr int kMaxCycleLength = 8;

/// Length of a shortest cycle, by BFS from every vertex.
inline Distance girth(const Graph& g) {
  Distance best;
  for (std::size_t s = 0; s < g.order(); ++s) {
    std::vector<int> dist(g.order(), -1), parent(g.order(), -1);
    std::deque<Vertex> queue{static_cast<Vertex>(s)};
    dist[s] = 0;
    while (!queue.empty()) {
      Vertex u = queue.front();
      queue.pop_front();
      for (Vertex w : g.neighbors(u)) {
        if (dist[w] < 0) {
          dist[w] = dist[u] + 1;
          parent[w] = u;
          queue.push_back(w);
        } else if (parent[u] != w) {
          int len = dist[u] + dist[w] + 1;
          if (!best || len < *best) best = len;
        }
      }
    }
  }
  return best;
}

/// All cycles of length 3..k_max (induced or not). Each cycle is listed once
/// as a vertex sequence starting at its lowest vertex, with the lower of that
/// vertex's two cycle neighbours second.
inline CycleCensus girth_and_cycles(const Graph& g, int k_max) {
  if (k_max > kMaxCycleLength) {
    throw Error(ErrorCode::KMaxTooLarge, "k_max=" + std::to_string(k_max) + " exceeds 8");
  }
  CycleCensus census;
  census.girth = girth(g);
  const auto n = static_cast<Vertex>(g.order());
  std::vector<bool> on_path(g.order(), false);
  Cycle path;
  std::function<void(Vertex, Vertex)> extend = [&](Vertex start, Vertex tip) {
    for (Vertex w : g.neighbors(tip)) {
      if (w == start && path.size() >= 3 && path[1] < path.back()) {
        census.cycles[static_cast<int>(path.size())].push_back(path);
      }
      if (w <= start || on_path[w] || static_cast<int>(path.size()) >= k_max) continue;
      on_path[w] = true;
      path.push_back(w);
      extend(start, w);
      path.pop_back();
      on_path[w] = false;
    }
  };
  for (Vertex s = 0; s < n; ++s) {
    path = {s};
    on_path[s] = true;
    extend(s, s);
    on_path[s] = false;
  }
  for (auto& [k, list] : census.cycles) std::sort(list.begin(), list.end());
  return census;
}

/// Cut vertices via DFS lowpoints.
inline std::vector<Vertex> articulation_points(const Graph& g) {
  const std::size_t n = g.order();
  std::vector<int> disc(n, -1), low(n, 0);
  std::vector<bool> cut(n, false);
  int timer = 0;
  std::function<void(Vertex, Vertex)> dfs = [&](Vertex u, Vertex parent) {
    disc[u] = low[u] = timer++;
    int children = 0;
    for (Vertex w : g.neighbors(u)) {
      if (w == parent) continue;
      if (disc[w] >= 0) {
        low[u] = std::min(low[u], disc[w]);
        continue;
      }
      ++children;
      dfs(w, u);
      low[u] = std::min(low[u], low[w]);
      if (parent >= 0 && low[w] >= disc[u]) cut[u] = true;
    }
    if (parent < 0 && children > 1) cut[u] = true;
  };
  for (std::size_t s = 0; s < n; ++s) {
    if (disc[s] < 0) dfs(static_cast<Vertex>(s), -1);
  }
  std::vector<Vertex> result;
  for (std::size_t v = 0; v < n; ++v)
    if (cut[v]) result.push_back(static_cast<Vertex>(v));
  return result;
}

/// True when the cycle's vertex sequence uses edge {a, b} consecutively.
inline bool cycle_has_edge(const Cycle& c, Vertex a, Vertex b) {
  for (std::size_t i = 0; i < c.size(); ++i) {
    Vertex x = c[i], y = c[(i + 1) % c.size()];
    if ((x == a && y == b) || (x == b && y == a)) return true;
  }
  return false;
}

/// Cycles are adjacent when they share at least one edge.
inline bool cycles_share_edge(const Cycle& a, const Cycle& b) {
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (cycle_has_edge(b, a[i], a[(i + 1) % a.size()])) return true;
  }
  return false;
}

}  // namespace sqcolor
