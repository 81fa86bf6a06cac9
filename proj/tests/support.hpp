#pragma once

// Shared helpers for the unit tests: seeded random graphs and small
// brute-force reference implementations.

#include <algorithm>
#include <numeric>
#include <vector>

#include "sqcolor/graph.hpp"
#include "sqcolor/random.hpp"

namespace sqcolor::fixtures {

/// G(n, p) with p = num/den, deterministic in `seed`.
inline Graph random_graph(std::size_t n, int num, int den, std::uint64_t seed) {
  Rng rng(seed);
  std::vector<Edge> edges;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      if (static_cast<int>(rng.below(static_cast<std::uint64_t>(den))) < num)
        edges.emplace_back(static_cast<Vertex>(i), static_cast<Vertex>(j));
  return Graph(n, edges);
}

/// Connected graph with maximum degree <= 3: a random tree grown under the
/// degree cap, then `extra` attempted chords.
inline Graph random_subcubic(std::size_t n, std::size_t extra, std::uint64_t seed) {
  Rng rng(seed);
  std::vector<Edge> edges;
  std::vector<int> deg(n, 0);
  auto has = [&](Vertex a, Vertex b) {
    return std::find(edges.begin(), edges.end(), Edge{std::min(a, b), std::max(a, b)}) != edges.end();
  };
  for (std::size_t v = 1; v < n; ++v) {
    std::vector<Vertex> open;
    for (std::size_t u = 0; u < v; ++u)
      if (deg[u] < 3) open.push_back(static_cast<Vertex>(u));
    Vertex u = open[rng.below(open.size())];
    edges.emplace_back(u, static_cast<Vertex>(v));
    ++deg[u];
    ++deg[v];
  }
  for (std::size_t k = 0; k < extra && n > 1; ++k) {
    auto a = static_cast<Vertex>(rng.below(n)), b = static_cast<Vertex>(rng.below(n));
    if (a == b || deg[a] >= 3 || deg[b] >= 3 || has(a, b)) continue;
    edges.emplace_back(std::min(a, b), std::max(a, b));
    ++deg[a];
    ++deg[b];
  }
  return Graph(n, edges);
}

/// Graph on n vertices whose edges are the set bits of `mask` over the
/// pairs (i, j), i < j, in lexicographic order.
inline Graph graph_from_mask(std::size_t n, std::uint32_t mask) {
  std::vector<Edge> edges;
  std::size_t bit = 0;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j, ++bit)
      if (mask >> bit & 1U) edges.emplace_back(static_cast<Vertex>(i), static_cast<Vertex>(j));
  return Graph(n, edges);
}

inline std::size_t pair_count(std::size_t n) { return n * (n - (n ? 1 : 0)) / 2; }

/// Isomorphism by trying all permutations.
inline bool brute_isomorphic(const Graph& a, const Graph& b) {
  if (a.order() != b.order() || a.size() != b.size()) return false;
  std::vector<Vertex> perm(a.order());
  std::iota(perm.begin(), perm.end(), 0);
  do {
    bool ok = true;
    for (auto [u, v] : a.edges())
      if (!b.adjacent(perm[u], perm[v])) {
        ok = false;
        break;
      }
    if (ok) return true;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return false;
}

}  // namespace sqcolor::fixtures
