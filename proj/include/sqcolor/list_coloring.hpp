#pragma once

// Proper colourings of an explicit conflict graph from per-vertex lists.
// Callers pass the conflict graph themselves (usually square(g) or a
// restriction of it); nothing here squares implicitly.

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <variant>
#include <vector>

#include "sqcolor/error.hpp"
#include "sqcolor/graph.hpp"

namespace sqcolor {

using Color = int;

class ListAssignment {
 public:
  ListAssignment() = default;

  /// Lists are stored sorted. Empty lists and repeated colours are rejected.
  explicit ListAssignment(std::vector<std::vector<Color>> lists) : lists_(std::move(lists)) {
    for (std::size_t v = 0; v < lists_.size(); ++v) {
      auto& l = lists_[v];
      if (l.empty()) throw Error(ErrorCode::InvalidList, "empty list at vertex " + std::to_string(v));
      std::sort(l.begin(), l.end());
      if (std::adjacent_find(l.begin(), l.end()) != l.end()) {
        throw Error(ErrorCode::InvalidList, "repeated colour in list of vertex " + std::to_string(v));
      }
    }
  }

  /// Every vertex gets {1, ..., k}.
  static ListAssignment uniform(std::size_t n, int k) {
    std::vector<Color> l;
    for (Color c = 1; c <= k; ++c) l.push_back(c);
    return ListAssignment(std::vector<std::vector<Color>>(n, l));
  }

  std::size_t size() const noexcept { return lists_.size(); }
  const std::vector<Color>& operator[](std::size_t v) const { return lists_.at(v); }
  const std::vector<std::vector<Color>>& lists() const noexcept { return lists_; }

  bool contains(std::size_t v, Color c) const {
    const auto& l = lists_.at(v);
    return std::binary_search(l.begin(), l.end(), c);
  }

  friend bool operator==(const ListAssignment&, const ListAssignment&) = default;

 private:
  std::vector<std::vector<Color>> lists_;
};

/// Partial map vertex -> colour.
struct Coloring {
  std::vector<std::optional<Color>> colors;

  static Coloring empty(std::size_t n) { return Coloring{std::vector<std::optional<Color>>(n)}; }

  bool total() const {
    return std::all_of(colors.begin(), colors.end(), [](const auto& c) { return c.has_value(); });
  }

  friend bool operator==(const Coloring&, const Coloring&) = default;
};

inline bool check_proper(const Graph& conflict, const Coloring& c, const ListAssignment* lists = nullptr) {
  if (c.colors.size() > conflict.order()) return false;
  for (auto [u, v] : conflict.edges()) {
    if (static_cast<std::size_t>(v) >= c.colors.size()) continue;
    if (c.colors[u] && c.colors[v] && *c.colors[u] == *c.colors[v]) return false;
  }
  if (lists) {
    for (std::size_t v = 0; v < c.colors.size(); ++v) {
      if (!c.colors[v]) continue;
      if (v >= lists->size() || !lists->contains(v, *c.colors[v])) return false;
    }
  }
  return true;
}

inline bool check_proper(const Graph& conflict, const Coloring& c, const ListAssignment& lists) {
  return check_proper(conflict, c, &lists);
}

namespace detail {

/// Backtracking list colouring over colour indices 0..C-1. The next vertex is
/// the uncoloured one with the fewest available colours (lowest index on
/// ties); colours are tried in ascending order. Buffers are kept between
/// calls so the choosability search can reuse one instance.
class ListColoringSearch {
 public:
  explicit ListColoringSearch(const Graph& conflict) : graph_(&conflict) {}

  /// `lists[v]` holds ascending colour indices < num_colors. With
  /// `interchangeable` (all lists identical) a vertex may only open the
  /// next unused colour, which removes colour-permutation symmetry.
  bool solve(const std::vector<std::vector<int>>& lists, int num_colors, std::vector<int>& out,
             bool interchangeable = false) {
    const std::size_t n = graph_->order();
    lists_ = &lists;
    colors_ = num_colors;
    interchangeable_ = interchangeable;
    color_.assign(n, -1);
    blocked_.assign(n * static_cast<std::size_t>(num_colors), 0);
    in_list_.assign(n * static_cast<std::size_t>(num_colors), 0);
    avail_.assign(n, 0);
    for (std::size_t v = 0; v < n; ++v) {
      for (int c : lists[v]) in_list_[v * colors_ + c] = 1;
      avail_[v] = static_cast<int>(lists[v].size());
    }
    ++calls_;
    bool ok = search(n, -1);
    if (ok) out = color_;
    return ok;
  }

  std::uint64_t nodes() const noexcept { return nodes_; }
  std::uint64_t calls() const noexcept { return calls_; }

 private:
  bool search(std::size_t remaining, int max_used) {
    ++nodes_;
    if (remaining == 0) return true;
    const std::size_t n = graph_->order();
    int best = -1;
    for (std::size_t v = 0; v < n; ++v) {
      if (color_[v] >= 0) continue;
      if (best < 0 || avail_[v] < avail_[best]) best = static_cast<int>(v);
    }
    if (avail_[best] == 0) return false;
    const auto& nbrs = graph_->neighbors(best);
    for (int c : (*lists_)[best]) {
      if (blocked_[best * colors_ + c]) continue;
      if (interchangeable_ && c > max_used + 1) break;
      color_[best] = c;
      for (Vertex u : nbrs) {
        if (blocked_[u * colors_ + c]++ == 0 && in_list_[u * colors_ + c]) --avail_[u];
      }
      if (search(remaining - 1, std::max(max_used, c))) return true;
      for (Vertex u : nbrs) {
        if (--blocked_[u * colors_ + c] == 0 && in_list_[u * colors_ + c]) ++avail_[u];
      }
      color_[best] = -1;
    }
    return false;
  }

  const Graph* graph_;
  const std::vector<std::vector<int>>* lists_ = nullptr;
  std::size_t colors_ = 0;
  bool interchangeable_ = false;
  std::vector<int> color_;
  std::vector<int> blocked_;
  std::vector<char> in_list_;
  std::vector<int> avail_;
  std::uint64_t nodes_ = 0;
  std::uint64_t calls_ = 0;
};

}  // namespace detail

/// Total proper colouring from the lists, or std::nullopt if none exists.
/// Deterministic: most-constrained vertex first, lowest colour first.
inline std::optional<Coloring> solve_list_coloring(const Graph& conflict, const ListAssignment& lists) {
  if (lists.size() != conflict.order()) {
    throw Error(ErrorCode::InvalidList, "list assignment covers " + std::to_string(lists.size()) +
                                            " vertices, graph has " + std::to_string(conflict.order()));
  }
  std::vector<Color> palette;
  for (const auto& l : lists.lists()) palette.insert(palette.end(), l.begin(), l.end());
  std::sort(palette.begin(), palette.end());
  palette.erase(std::unique(palette.begin(), palette.end()), palette.end());
  std::vector<std::vector<int>> indexed(conflict.order());
  for (std::size_t v = 0; v < conflict.order(); ++v) {
    for (Color c : lists[v]) {
      indexed[v].push_back(static_cast<int>(std::lower_bound(palette.begin(), palette.end(), c) - palette.begin()));
    }
  }
  detail::ListColoringSearch search(conflict);
  std::vector<int> out;
  if (!search.solve(indexed, static_cast<int>(palette.size()), out)) return std::nullopt;
  Coloring result = Coloring::empty(conflict.order());
  for (std::size_t v = 0; v < out.size(); ++v) result.colors[v] = palette[out[v]];
  return result;
}

inline constexpr std::size_t kMaxChromaticOrder = 30;

/// Size of a maximum clique (Bron-Kerbosch with pivoting on bitmasks).
inline std::size_t clique_number(const Graph& g) {
  const std::size_t n = g.order();
  if (n == 0) return 0;
  if (n > 64) throw Error(ErrorCode::TooLarge, "clique search limited to 64 vertices");
  std::vector<std::uint64_t> adj(n, 0);
  for (auto [u, v] : g.edges()) {
    adj[u] |= std::uint64_t{1} << v;
    adj[v] |= std::uint64_t{1} << u;
  }
  std::size_t best = 0;
  auto popcount = [](std::uint64_t x) { return static_cast<std::size_t>(__builtin_popcountll(x)); };
  auto expand = [&](auto&& self, std::size_t size, std::uint64_t cand, std::uint64_t excl) -> void {
    if (cand == 0 && excl == 0) {
      best = std::max(best, size);
      return;
    }
    if (size + popcount(cand) <= best) return;
    std::uint64_t pivot_src = cand | excl;
    int pivot = __builtin_ctzll(pivot_src);
    std::uint64_t todo = cand & ~adj[pivot];
    while (todo) {
      int v = __builtin_ctzll(todo);
      todo &= todo - 1;
      std::uint64_t bit = std::uint64_t{1} << v;
      self(self, size + 1, cand & adj[v], excl & adj[v]);
      cand &= ~bit;
      excl |= bit;
    }
  };
  std::uint64_t all = (n == 64) ? ~std::uint64_t{0} : ((std::uint64_t{1} << n) - 1);
  expand(expand, 0, all, 0);
  return best;
}

/// Least k such that the graph is colourable from lists {1..k} at every
/// vertex, searched upward from the clique number.
inline int chromatic_number(const Graph& conflict) {
  const std::size_t n = conflict.order();
  if (n > kMaxChromaticOrder) throw Error(ErrorCode::TooLarge, "chromatic_number limited to n <= 30");
  if (n == 0) return 0;
  detail::ListColoringSearch search(conflict);
  std::vector<int> out;
  for (int k = static_cast<int>(std::max<std::size_t>(1, clique_number(conflict)));; ++k) {
    std::vector<int> palette(k);
    for (int c = 0; c < k; ++c) palette[c] = c;
    std::vector<std::vector<int>> lists(n, palette);
    if (search.solve(lists, k, out, /*interchangeable=*/true)) return k;
  }
}

struct GreedyFailure {
  Vertex vertex;
  friend bool operator==(const GreedyFailure&, const GreedyFailure&) = default;
};

using GreedyOutcome = std::variant<Coloring, GreedyFailure>;

/// Colours `order` one vertex at a time with the lowest list colour not used
/// by an already-coloured conflict neighbour. `order` must list exactly the
/// uncoloured vertices of `partial`.
inline GreedyOutcome greedy_extend(const Graph& conflict, Coloring partial, std::span<const Vertex> order,
                                   const ListAssignment& lists) {
  const std::size_t n = conflict.order();
  if (partial.colors.size() != n || lists.size() != n) {
    throw Error(ErrorCode::OrderMismatch, "coloring/list sizes do not match the graph");
  }
  std::vector<bool> listed(n, false);
  for (Vertex v : order) {
    conflict.check_vertex(v);
    if (listed[v] || partial.colors[v]) {
      throw Error(ErrorCode::OrderMismatch, "vertex " + std::to_string(v) + " repeated or already coloured");
    }
    listed[v] = true;
  }
  for (std::size_t v = 0; v < n; ++v) {
    if (!partial.colors[v] && !listed[v]) {
      throw Error(ErrorCode::OrderMismatch, "uncoloured vertex " + std::to_string(v) + " missing from order");
    }
  }
  for (Vertex v : order) {
    std::optional<Color> pick;
    for (Color c : lists[v]) {
      bool clash = false;
      for (Vertex u : conflict.neighbors(v)) {
        if (partial.colors[u] && *partial.colors[u] == c) {
          clash = true;
          break;
        }
      }
      if (!clash) {
        pick = c;
        break;
      }
    }
    if (!pick) return GreedyFailure{v};
    partial.colors[v] = pick;
  }
  return partial;
}

}  // namespace sqcolor
