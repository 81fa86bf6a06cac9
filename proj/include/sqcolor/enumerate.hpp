#pragma once

// Connected subcubic graphs up to isomorphism, for n <= 10.
//
// Every connected graph on n+1 >= 2 vertices has a vertex whose removal
// leaves it connected (a leaf of a spanning tree), so extending each
// connected subcubic graph on n vertices by one new vertex joined to 1..3
// vertices of degree < 3 reaches every connected subcubic graph on n+1
// vertices. Duplicates are removed with a canonical form: the
// lexicographically smallest upper-triangle adjacency string over all
// vertex orders compatible with an equitable refinement of the degree
// partition.

#include <algorithm>
#include <cstdint>
#include <map>
#include <numeric>
#include <set>
#include <string>
#include <vector>

#include "sqcolor/embedding.hpp"
#include "sqcolor/error.hpp"
#include "sqcolor/graph.hpp"

namespace sqcolor {

inline constexpr std::size_t kMaxEnumerationOrder = 10;

struct CanonicalForm {
  std::size_t order = 0;
  std::uint64_t bits = 0;  // bit k for the k-th pair (j, i), j < i, in row order of i
  friend auto operator<=>(const CanonicalForm&, const CanonicalForm&) = default;
};

namespace detail {

/// Iterated colour refinement from degrees; returns a cell index per vertex
/// with cells numbered in an isomorphism-invariant order.
inline std::vector<int> refine_cells(const Graph& g) {
  const std::size_t n = g.order();
  std::vector<int> cell(n);
  for (std::size_t v = 0; v < n; ++v) cell[v] = static_cast<int>(g.degree(static_cast<Vertex>(v)));
  for (std::size_t round = 0; round <= n; ++round) {
    std::vector<std::pair<int, std::vector<int>>> signature(n);
    for (std::size_t v = 0; v < n; ++v) {
      signature[v].first = cell[v];
      for (Vertex w : g.neighbors(static_cast<Vertex>(v))) signature[v].second.push_back(cell[w]);
      std::sort(signature[v].second.begin(), signature[v].second.end());
    }
    auto sorted = signature;
    std::sort(sorted.begin(), sorted.end());
    sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
    std::vector<int> next(n);
    for (std::size_t v = 0; v < n; ++v)
      next[v] = static_cast<int>(std::lower_bound(sorted.begin(), sorted.end(), signature[v]) - sorted.begin());
    std::size_t before = std::set<int>(cell.begin(), cell.end()).size();
    cell = next;
    if (sorted.size() == before) break;
  }
  return cell;
}

}  // namespace detail

inline CanonicalForm canonical_form(const Graph& g) {
  const std::size_t n = g.order();
  if (n > 11) throw Error(ErrorCode::TooLarge, "canonical form limited to n <= 11");
  const auto cell = detail::refine_cells(g);
  // Position p must hold a vertex of slot_cell[p].
  std::vector<int> slot_cell(cell);
  std::sort(slot_cell.begin(), slot_cell.end());

  std::vector<Vertex> placed;
  std::vector<bool> used(n, false);
  CanonicalForm best{n, 0};
  bool have_best = false;
  const std::size_t total_bits = n * (n - (n > 0 ? 1 : 0)) / 2;

  // Adjacency strings are compared position by position, i.e. from the
  // lowest bit; returns -1, 0 or 1 for the first `len` positions.
  auto compare = [](std::uint64_t a, std::uint64_t b, std::size_t len) {
    std::uint64_t mask = len >= 64 ? ~std::uint64_t{0} : ((std::uint64_t{1} << len) - 1);
    std::uint64_t diff = (a ^ b) & mask;
    if (!diff) return 0;
    return (a >> __builtin_ctzll(diff) & 1U) ? 1 : -1;
  };

  auto search = [&](auto&& self, std::size_t pos, std::size_t bit, std::uint64_t bits) -> void {
    if (have_best && compare(bits, best.bits, bit) > 0) return;
    if (pos == n) {
      if (!have_best || compare(bits, best.bits, total_bits) < 0) {
        best.bits = bits;
        have_best = true;
      }
      return;
    }
    for (std::size_t v = 0; v < n; ++v) {
      if (used[v] || cell[v] != slot_cell[pos]) continue;
      std::uint64_t next = bits;
      for (std::size_t j = 0; j < pos; ++j)
        if (g.adjacent(placed[j], static_cast<Vertex>(v))) next |= std::uint64_t{1} << (bit + j);
      used[v] = true;
      placed.push_back(static_cast<Vertex>(v));
      self(self, pos + 1, bit + pos, next);
      placed.pop_back();
      used[v] = false;
    }
  };
  search(search, 0, 0, 0);
  return best;
}

/// The graph whose adjacency string is `form`.
inline Graph graph_from_canonical(const CanonicalForm& form) {
  std::vector<Edge> edges;
  std::size_t bit = 0;
  for (std::size_t i = 1; i < form.order; ++i)
    for (std::size_t j = 0; j < i; ++j, ++bit)
      if (form.bits >> bit & 1U) edges.emplace_back(static_cast<Vertex>(j), static_cast<Vertex>(i));
  return Graph(form.order, edges);
}

struct EnumerationFilter {
  bool no_c4_c5 = false;
  bool planar = false;
  bool connected = true;  // enumeration only produces connected graphs
};

inline bool has_c4_or_c5(const Graph& g) {
  auto census = girth_and_cycles(g, 5);
  return !census.of_length(4).empty() || !census.of_length(5).empty();
}

/// Connected graphs with max degree <= 3 on 1..n_max vertices, one per
/// isomorphism class, ordered by order then canonical form.
inline std::vector<Graph> enumerate_subcubic(std::size_t n_max, const EnumerationFilter& filter = {}) {
  if (n_max > kMaxEnumerationOrder) throw Error(ErrorCode::TooLarge, "enumeration limited to n <= 10");
  std::vector<Graph> out;
  if (n_max == 0) return out;
  std::set<CanonicalForm> level{canonical_form(Graph(1, std::initializer_list<Edge>{}))};
  for (std::size_t n = 1;; ++n) {
    for (const auto& form : level) {
      Graph g = graph_from_canonical(form);
      if (filter.no_c4_c5 && has_c4_or_c5(g)) continue;
      if (filter.planar && !find_planar_embedding(g)) continue;
      out.push_back(std::move(g));
    }
    if (n == n_max) break;
    std::set<CanonicalForm> next;
    for (const auto& form : level) {
      Graph g = graph_from_canonical(form);
      std::vector<Vertex> open;
      for (std::size_t v = 0; v < n; ++v)
        if (g.degree(static_cast<Vertex>(v)) < 3) open.push_back(static_cast<Vertex>(v));
      for (std::uint32_t mask = 1; mask < (std::uint32_t{1} << open.size()); ++mask) {
        if (__builtin_popcount(mask) > 3) continue;
        std::vector<Edge> edges = g.edges();
        for (std::size_t k = 0; k < open.size(); ++k)
          if (mask >> k & 1U) edges.emplace_back(open[k], static_cast<Vertex>(n));
        next.insert(canonical_form(Graph(n + 1, edges)));
      }
    }
    level = std::move(next);
  }
  return out;
}

}  // namespace sqcolor
