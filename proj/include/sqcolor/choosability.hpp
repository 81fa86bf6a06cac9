#pragma once

// Deciding f-choosability of small conflict graphs.
//
// is_f_choosable() is a complete decision procedure. It rests on one
// reduction. For a list assignment L and a colour c, call the set of
// vertices whose list contains c the support of c. If some support S is
// disconnected in the conflict graph, replace c by one fresh colour per
// component of S. List sizes are unchanged, and any proper colouring of the
// new assignment maps back to a proper colouring of the old one (vertices in
// different components of S are never adjacent, so they may share c). So if
// L is bad the split assignment is bad too. Repeating the split gives a bad
// assignment whose supports are all connected, and colour names are
// irrelevant, so it suffices to enumerate multisets of connected vertex
// subsets in which vertex v lies in exactly f(v) members. naive_f_choosable()
// is an independent brute-force oracle over a fixed colour pool; tests
// cross-check the two.

#include <algorithm>
#include <array>
#include <cstddef>
#include <cstdint>
#include <numeric>
#include <optional>
#include <string>
#include <vector>

#include "sqcolor/error.hpp"
#include "sqcolor/graph.hpp"
#include "sqcolor/list_coloring.hpp"

namespace sqcolor {

/// Per-vertex required list size f(v) >= 1.
using SizeVector = std::vector<int>;

inline void validate_size_vector(const Graph& g, const SizeVector& f) {
  if (f.size() != g.order()) {
    throw Error(ErrorCode::InvalidSizeVector,
                "size vector has " + std::to_string(f.size()) + " entries for " + std::to_string(g.order()) + " vertices");
  }
  for (std::size_t v = 0; v < f.size(); ++v) {
    if (f[v] < 1) throw Error(ErrorCode::InvalidSizeVector, "f(" + std::to_string(v) + ") < 1");
  }
}

struct SearchStats {
  std::uint64_t nodes = 0;          // support-multiset search nodes
  std::uint64_t candidates = 0;     // complete assignments tested for colourability
  std::uint64_t symmetry_skips = 0; // complete assignments skipped as non-canonical under automorphisms
  std::uint64_t solver_nodes = 0;   // backtracking nodes inside the list-colouring solver
};

struct BadAssignmentWitness {
  ListAssignment lists;
  SearchStats trace;
};

struct ChoosabilityResult {
  std::optional<BadAssignmentWitness> witness;  // empty when choosable
  SearchStats stats;

  bool choosable() const noexcept { return !witness.has_value(); }
};

class SearchBudgetExceeded : public Error {
 public:
  explicit SearchBudgetExceeded(const SearchStats& stats)
      : Error(ErrorCode::SearchBudgetExceeded,
              "gave up after " + std::to_string(stats.candidates) + " candidates"),
        stats_(stats) {}

  const SearchStats& stats() const noexcept { return stats_; }

 private:
  SearchStats stats_;
};

struct ChoosabilityOptions {
  std::size_t max_order = 8;
  int max_total = 28;
  std::uint64_t candidate_budget = 0;  // 0 = unlimited
  bool automorphism_pruning = false;
};

namespace detail {

inline bool mask_connected(const Graph& g, std::uint32_t mask) {
  if (mask == 0) return false;
  std::uint32_t seen = mask & (~mask + 1);
  std::uint32_t frontier = seen;
  while (frontier) {
    int v = __builtin_ctz(frontier);
    frontier &= frontier - 1;
    for (Vertex w : g.neighbors(v)) {
      std::uint32_t bit = std::uint32_t{1} << w;
      if ((mask & bit) && !(seen & bit)) {
        seen |= bit;
        frontier |= bit;
      }
    }
  }
  return seen == mask;
}

/// Automorphisms of g that preserve f, excluding the identity.
inline std::vector<std::vector<Vertex>> f_automorphisms(const Graph& g, const SizeVector& f) {
  const std::size_t n = g.order();
  std::vector<std::vector<Vertex>> result;
  std::vector<Vertex> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  do {
    bool ok = true;
    for (std::size_t v = 0; v < n && ok; ++v) {
      ok = f[v] == f[perm[v]] && g.degree(static_cast<Vertex>(v)) == g.degree(perm[v]);
    }
    for (auto [u, v] : g.edges()) {
      if (!ok) break;
      ok = g.adjacent(perm[u], perm[v]);
    }
    bool identity = std::is_sorted(perm.begin(), perm.end());
    if (ok && !identity) result.push_back(perm);
  } while (std::next_permutation(perm.begin(), perm.end()));
  return result;
}

inline std::uint32_t map_mask(std::uint32_t mask, const std::vector<Vertex>& perm) {
  std::uint32_t out = 0;
  while (mask) {
    int v = __builtin_ctz(mask);
    mask &= mask - 1;
    out |= std::uint32_t{1} << perm[v];
  }
  return out;
}

inline ListAssignment lists_from_supports(std::size_t n, const std::vector<std::uint32_t>& supports) {
  std::vector<std::vector<Color>> lists(n);
  for (std::size_t j = 0; j < supports.size(); ++j) {
    for (std::size_t v = 0; v < n; ++v) {
      if (supports[j] >> v & 1U) lists[v].push_back(static_cast<Color>(j + 1));
    }
  }
  return ListAssignment(std::move(lists));
}

class SupportSearch {
 public:
  SupportSearch(const Graph& g, const SizeVector& f, const ChoosabilityOptions& opts)
      : g_(g), f_(f), opts_(opts), adjacency_(g.order(), 0), coverage_(g.order(), 0) {
    const std::size_t n = g.order();
    for (std::size_t v = 0; v < n; ++v)
      for (Vertex w : g.neighbors(static_cast<Vertex>(v))) adjacency_[v] |= std::uint32_t{1} << w;
    order_.resize(n);
    std::iota(order_.begin(), order_.end(), 0);
    std::stable_sort(order_.begin(), order_.end(),
                     [&](Vertex a, Vertex b) { return g.degree(a) > g.degree(b); });
    std::vector<std::size_t> position(n);
    for (std::size_t i = 0; i < n; ++i) position[order_[i]] = i;
    choices_.resize(n);
    for (std::uint32_t mask = 1; mask < (std::uint32_t{1} << n); ++mask) {
      if (!mask_connected(g, mask)) continue;
      std::size_t first = n;
      for (std::size_t v = 0; v < n; ++v)
        if (mask >> v & 1U) first = std::min(first, position[v]);
      choices_[first].push_back(mask);
    }
    if (opts.automorphism_pruning) automorphisms_ = f_automorphisms(g, f);
  }

  ChoosabilityResult run() {
    step(0);
    ChoosabilityResult result;
    stats_.solver_nodes = solver_nodes_;
    result.stats = stats_;
    if (witness_) result.witness = BadAssignmentWitness{*witness_, stats_};
    return result;
  }

 private:
  // Vertex order_[i] is the lowest-positioned member of every support
  // chosen at step i; its coverage is completed here.
  bool step(std::size_t i) {
    if (i == order_.size()) return leaf();
    Vertex v = order_[i];
    return fill(i, 0, f_[v] - coverage_[v]);
  }

  bool fill(std::size_t i, std::size_t from, int need) {
    ++stats_.nodes;
    if (need == 0) return step(i + 1);
    const auto& options = choices_[i];
    for (std::size_t k = from; k < options.size(); ++k) {
      std::uint32_t mask = options[k];
      if (mask & saturated_) continue;
      add(mask);
      bool stop = fill(i, k, need - 1);
      remove(mask);
      if (stop) return true;
    }
    return false;
  }

  // Colour j is chosen_[j]; palette_[v] holds the colours whose support
  // contains v, and saturated_ the vertices already covered f(v) times.
  void add(std::uint32_t mask) {
    const std::uint64_t colour = std::uint64_t{1} << chosen_.size();
    chosen_.push_back(mask);
    for (std::uint32_t m = mask; m; m &= m - 1) {
      int v = __builtin_ctz(m);
      palette_[v] |= colour;
      if (++coverage_[v] == f_[v]) saturated_ |= std::uint32_t{1} << v;
    }
  }

  void remove(std::uint32_t mask) {
    chosen_.pop_back();
    const std::uint64_t colour = std::uint64_t{1} << chosen_.size();
    for (std::uint32_t m = mask; m; m &= m - 1) {
      int v = __builtin_ctz(m);
      palette_[v] &= ~colour;
      --coverage_[v];
      saturated_ &= ~(std::uint32_t{1} << v);
    }
  }

  bool canonical_under_symmetry() {
    sorted_ = chosen_;
    std::sort(sorted_.begin(), sorted_.end());
    for (const auto& perm : automorphisms_) {
      image_.clear();
      for (std::uint32_t m : sorted_) image_.push_back(map_mask(m, perm));
      std::sort(image_.begin(), image_.end());
      if (image_ < sorted_) return false;
    }
    return true;
  }

  bool leaf() {
    if (!automorphisms_.empty() && !canonical_under_symmetry()) {
      ++stats_.symmetry_skips;
      return false;
    }
    if (opts_.candidate_budget && stats_.candidates >= opts_.candidate_budget) {
      stats_.solver_nodes = solver_nodes_;
      throw SearchBudgetExceeded(stats_);
    }
    ++stats_.candidates;
    const std::uint32_t all = (std::uint32_t{1} << g_.order()) - 1;
    if (colorable(all)) return false;
    witness_ = lists_from_supports(g_.order(), chosen_);
    return true;
  }

  // Most-constrained-first backtracking on palette_, restored on return.
  bool colorable(std::uint32_t open) {
    ++solver_nodes_;
    if (!open) return true;
    int best = -1, fewest = 65;
    for (std::uint32_t m = open; m; m &= m - 1) {
      int v = __builtin_ctz(m);
      int k = __builtin_popcountll(palette_[v]);
      if (k < fewest) {
        fewest = k;
        best = v;
      }
    }
    if (fewest == 0) return false;
    const std::uint32_t rest = open & ~(std::uint32_t{1} << best);
    const std::uint32_t touched = rest & adjacency_[best];
    for (std::uint64_t cs = palette_[best]; cs; cs &= cs - 1) {
      const std::uint64_t c = cs & (~cs + 1);
      std::uint32_t hit = 0;
      for (std::uint32_t m = touched; m; m &= m - 1) {
        int w = __builtin_ctz(m);
        if (palette_[w] & c) {
          hit |= std::uint32_t{1} << w;
          palette_[w] &= ~c;
        }
      }
      const bool ok = colorable(rest);
      for (std::uint32_t m = hit; m; m &= m - 1) palette_[__builtin_ctz(m)] |= c;
      if (ok) return true;
    }
    return false;
  }

  const Graph& g_;
  const SizeVector& f_;
  ChoosabilityOptions opts_;
  std::vector<std::uint32_t> adjacency_;
  std::array<std::uint64_t, 32> palette_{};
  std::uint32_t saturated_ = 0;
  std::uint64_t solver_nodes_ = 0;
  std::vector<Vertex> order_;
  std::vector<std::vector<std::uint32_t>> choices_;
  std::vector<std::vector<Vertex>> automorphisms_;
  std::vector<int> coverage_;
  std::vector<std::uint32_t> chosen_, sorted_, image_;
  std::optional<ListAssignment> witness_;
  SearchStats stats_;
};

}  // namespace detail

/// Complete f-choosability decision by enumerating connected colour
/// supports (see the header comment for why that is exhaustive). Vertices
/// are processed by decreasing conflict degree; the first uncolourable
/// candidate in enumeration order is returned as the witness.
inline ChoosabilityResult is_f_choosable(const Graph& conflict, const SizeVector& f,
                                         const ChoosabilityOptions& opts = {}) {
  validate_size_vector(conflict, f);
  const int total = std::accumulate(f.begin(), f.end(), 0);
  if (conflict.order() > opts.max_order || total > opts.max_total || conflict.order() > 31 || total > 64) {
    throw Error(ErrorCode::TooLarge, "choosability search limited to n <= " + std::to_string(opts.max_order) +
                                         " and sum f <= " + std::to_string(opts.max_total));
  }
  auto result = detail::SupportSearch(conflict, f, opts).run();
  if (result.witness && solve_list_coloring(conflict, result.witness->lists)) {
    throw Error(ErrorCode::PreconditionViolated, "internal: witness re-check found a colouring");
  }
  return result;
}

/// Calls `visit(lists)` for every assignment with |L(v)| = sizes[v] drawn
/// from {1..pool} whose colours appear in first-occurrence order (vertex by
/// vertex, ascending within a list): each vertex takes some already-used
/// colours plus a block of fresh ones. Every assignment is a renaming of at
/// least one visited assignment. Stops early when `visit` returns true;
/// returns the number of assignments visited.
template <typename Visit>
std::uint64_t for_each_canonical_assignment(const SizeVector& sizes, int pool, Visit&& visit) {
  const std::size_t n = sizes.size();
  std::vector<std::vector<Color>> lists(n);
  std::uint64_t visited = 0;
  auto place = [&](auto&& self, std::size_t v, int used) -> bool {
    if (v == n) {
      ++visited;
      return visit(static_cast<const std::vector<std::vector<Color>>&>(lists));
    }
    for (int fresh = 0; fresh <= sizes[v] && used + fresh <= pool; ++fresh) {
      const int old_count = sizes[v] - fresh;
      if (old_count > used) continue;
      for (std::uint32_t mask = 0; mask < (std::uint32_t{1} << used); ++mask) {
        if (__builtin_popcount(mask) != old_count) continue;
        lists[v].clear();
        for (int c = 0; c < used; ++c)
          if (mask >> c & 1U) lists[v].push_back(c + 1);
        for (int c = used + 1; c <= used + fresh; ++c) lists[v].push_back(c);
        if (self(self, v + 1, used + fresh)) return true;
      }
    }
    return false;
  };
  place(place, 0, 0);
  return visited;
}

struct NaiveOptions {
  std::size_t max_order = 4;
  int max_pool = 8;
};

/// Brute force over every assignment with |L(v)| = f(v) drawn from
/// {1..pool}, up to colour renaming (see for_each_canonical_assignment).
inline ChoosabilityResult naive_f_choosable(const Graph& conflict, const SizeVector& f, int pool,
                                            const NaiveOptions& opts = {}) {
  validate_size_vector(conflict, f);
  const std::size_t n = conflict.order();
  if (n > opts.max_order || pool > opts.max_pool) {
    throw Error(ErrorCode::TooLarge, "naive oracle limited to n <= " + std::to_string(opts.max_order) +
                                         " and pool <= " + std::to_string(opts.max_pool));
  }
  if (pool < *std::max_element(f.begin(), f.end())) {
    throw Error(ErrorCode::PreconditionViolated, "pool smaller than the largest list");
  }
  ChoosabilityResult result;
  for_each_canonical_assignment(f, pool, [&](const std::vector<std::vector<Color>>& lists) {
    ++result.stats.candidates;
    ListAssignment la(lists);
    if (solve_list_coloring(conflict, la)) return false;
    result.witness = BadAssignmentWitness{la, {}};
    return true;
  });
  if (result.witness) result.witness->trace = result.stats;
  return result;
}

inline constexpr std::size_t kMaxGreedyCertificateOrder = 10;

/// Lexicographically first vertex order in which every vertex has fewer
/// earlier conflict neighbours than f(v). Such an order colours greedily from
/// any lists of the required sizes. std::nullopt only means greedy alone does
/// not suffice.
inline std::optional<std::vector<Vertex>> greedy_order_certificate(const Graph& conflict, const SizeVector& f) {
  validate_size_vector(conflict, f);
  const std::size_t n = conflict.order();
  if (n > kMaxGreedyCertificateOrder) throw Error(ErrorCode::TooLarge, "greedy certificate limited to n <= 10");
  std::vector<char> dead(std::size_t{1} << n, 0);
  std::vector<Vertex> order;
  auto extend = [&](auto&& self, std::uint32_t placed) -> bool {
    if (order.size() == n) return true;
    if (dead[placed]) return false;
    for (std::size_t v = 0; v < n; ++v) {
      if (placed >> v & 1U) continue;
      int earlier = 0;
      for (Vertex u : conflict.neighbors(static_cast<Vertex>(v)))
        if (placed >> u & 1U) ++earlier;
      if (earlier >= f[v]) continue;
      order.push_back(static_cast<Vertex>(v));
      if (self(self, placed | (std::uint32_t{1} << v))) return true;
      order.pop_back();
    }
    dead[placed] = 1;
    return false;
  };
  if (extend(extend, 0)) return order;
  return std::nullopt;
}

}  // namespace sqcolor
