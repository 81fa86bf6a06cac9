#pragma once

// Reducible configurations: the local subgraphs that a minimal
// counterexample cannot contain, the residual list sizes left after the
// exterior is coloured, machine verification that the residual lists always
// suffice, and an interpreter for the hand-written colouring strategies.
//
// Modelling. A configuration is a small graph H_full with a set D of
// vertices to uncolour and a degree cap per vertex (3, or 2 for designated
// 2-vertices). The rest of G is coloured first. A vertex v in D then loses
// one colour per already-coloured G^2-neighbour outside D, which is at most
//   |{x in H_full - D : d_H(x, v) <= 2}|        members of H_full outside D
// + 3 * (cap(v) - d_H(v))                       a missing neighbour and its two others
// + sum over u in N_H(v) of (cap(u) - d_H(u))   missing neighbours of neighbours
// from a list of 7. Internal pairs at distance >= 3 in H_full are assumed to
// stay at distance >= 3 in G. That assumption leans on G having no 4- or
// 5-cycles; for pairs at internal distance 4 (v2, v5 in W2) it also needs
// the "no 6-cycle adjacent to a 3-cycle" configuration to be excluded
// first. It is encoded as stated, not re-derived.

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <cstdlib>
#include <future>
#include <iterator>
#include <map>
#include <numeric>
#include <optional>
#include <set>
#include <string>
#include <thread>
#include <variant>
#include <vector>

#include "sqcolor/choosability.hpp"
#include "sqcolor/error.hpp"
#include "sqcolor/graph.hpp"
#include "sqcolor/list_coloring.hpp"
#include "sqcolor/random.hpp"

namespace sqcolor {

inline constexpr int kListSize = 7;

// ---------------------------------------------------------------------------
// Strategy scripts

/// Branch conditions. Sizes and intersections are taken on current lists
/// (original list minus colours of coloured conflict neighbours);
/// membership is taken on the original list the script started from.
struct Condition {
  enum class Kind { Intersects, Member, SizeAtLeast, ChosenEq };
  Kind kind;
  Vertex x = 0;
  Vertex y = 0;
  int k = 0;
  std::string var;
};

struct Step {
  enum class Kind { PickCommon, PickPreserving, ReserveOutside, PickAvoiding, Assign, Greedy, Branch };
  Kind kind;
  std::vector<Vertex> vertices{};  // operands, or the order for Greedy
  int k = 0;
  std::string var{};               // variable bound (or read by Assign)
  std::vector<std::string> avoid{};
  // Branch only.
  Condition condition{};
  std::string then_label{}, else_label{};
  std::vector<Step> then_steps{}, else_steps{};
};

using StrategyScript = std::vector<Step>;

namespace strategy {

/// Colour x and y with one colour of L(x) ∩ L(y); binds `var`.
inline Step pick_common(Vertex x, Vertex y, std::string var) {
  return Step{.kind = Step::Kind::PickCommon, .vertices = {x, y}, .var = std::move(var)};
}
/// Colour x with some a in L(x) such that |L(y) \ {a}| >= k; binds `var`.
inline Step pick_preserving(Vertex x, Vertex y, int k, std::string var) {
  return Step{.kind = Step::Kind::PickPreserving, .vertices = {x, y}, .k = k, .var = std::move(var)};
}
/// Bind `var` to a colour of L(x) \ L(y) without colouring anything.
inline Step reserve_outside(std::string var, Vertex x, Vertex y) {
  return Step{.kind = Step::Kind::ReserveOutside, .vertices = {x, y}, .var = std::move(var)};
}
/// Colour x avoiding every colour bound to `avoid`; binds `var`.
inline Step pick_avoiding(Vertex x, std::vector<std::string> avoid, std::string var) {
  return Step{.kind = Step::Kind::PickAvoiding, .vertices = {x}, .var = std::move(var), .avoid = std::move(avoid)};
}
inline Step assign(Vertex x, std::string var) {
  return Step{.kind = Step::Kind::Assign, .vertices = {x}, .var = std::move(var)};
}
inline Step greedy(std::vector<Vertex> order) {
  return Step{.kind = Step::Kind::Greedy, .vertices = std::move(order)};
}
inline Step branch(Condition c, std::string then_label, StrategyScript then_steps, std::string else_label,
                   StrategyScript else_steps) {
  Step s{.kind = Step::Kind::Branch};
  s.condition = std::move(c);
  s.then_label = std::move(then_label);
  s.else_label = std::move(else_label);
  s.then_steps = std::move(then_steps);
  s.else_steps = std::move(else_steps);
  return s;
}
inline Condition if_intersects(Vertex x, Vertex y) { return {Condition::Kind::Intersects, x, y, 0, {}}; }
inline Condition if_member(std::string var, Vertex x) { return {Condition::Kind::Member, x, 0, 0, std::move(var)}; }
inline Condition if_size_at_least(Vertex x, int k) { return {Condition::Kind::SizeAtLeast, x, 0, k, {}}; }
inline Condition if_chosen_eq(Vertex x, std::string var) {
  return {Condition::Kind::ChosenEq, x, 0, 0, std::move(var)};
}

}  // namespace strategy

// ---------------------------------------------------------------------------
// Configurations

struct Configuration {
  std::string name;
  Graph full;                        // H_full
  std::vector<std::string> names;    // vertex names of H_full
  std::vector<Vertex> deleted;       // D, in conflict-graph order
  std::vector<int> caps;             // max degree in G per vertex of H_full
  SizeVector published_vector;           // residual sizes over D as printed
  std::optional<StrategyScript> strategy;  // over conflict-graph indices

  /// square(H_full) restricted to D; vertex i is deleted[i].
  Graph conflict() const { return square(full).induced(deleted); }

  std::vector<std::string> deleted_names() const {
    std::vector<std::string> out;
    for (Vertex v : deleted) out.push_back(names.at(v));
    return out;
  }
};

namespace detail {

inline Configuration make_config(std::string name, std::vector<std::string> names, std::vector<Edge> edges,
                                 std::vector<Vertex> deleted, std::vector<int> caps, SizeVector published,
                                 std::optional<StrategyScript> script) {
  Graph g(names.size(), edges);
  return Configuration{std::move(name), std::move(g), std::move(names), std::move(deleted),
                       std::move(caps),  std::move(published), std::move(script)};
}

}  // namespace detail

/// The seven configurations, in a fixed order. Vertex indices follow the
/// listed names; for every entry except TRI2V, D is all of H_full, so
/// conflict-graph indices coincide with H_full indices.
inline const std::vector<Configuration>& catalog() {
  using namespace strategy;
  static const std::vector<Configuration> entries = [] {
    std::vector<Configuration> out;

    // Triangle u v w whose vertex w has degree 2 in G.
    out.push_back(detail::make_config("TRI2V", {"u", "v", "w"}, {{0, 1}, {1, 2}, {0, 2}}, {2}, {3, 3, 2}, {3},
                                      StrategyScript{greedy({0})}));

    // 6-cycle v1..v6 with v7 adjacent to v1 and v6.
    {
      const Vertex v1 = 0, v2 = 1, v3 = 2, v4 = 3, v5 = 4, v6 = 5, v7 = 6;
      StrategyScript subcase21{greedy({v3, v4, v5, v1, v6, v7})};
      StrategyScript subcase22{branch(
          if_size_at_least(v7, 4), "H:case2.2:|L'(v7)|>=4", {greedy({v3, v4, v5, v1, v6, v7})},
          "H:case2.2:|L'(v7)|=3",
          {reserve_outside("beta", v1, v7), pick_avoiding(v3, {"beta"}, "c3"), greedy({v4, v5}),
           branch(if_chosen_eq(v5, "beta"), "H:case2.2:c5=beta", {greedy({v1, v6, v7})}, "H:case2.2:c5!=beta",
                  {assign(v1, "beta"), greedy({v6, v7})})})};
      StrategyScript script{branch(
          if_intersects(v3, v7), "H:case1", {pick_common(v3, v7, "c"), greedy({v4, v2, v5, v6, v1})}, "H:case2",
          {pick_preserving(v2, v4, 2, "alpha"),
           branch(if_member("alpha", v7), "H:case2.2", subcase22, "H:case2.1", subcase21)})};
      out.push_back(detail::make_config(
          "H", {"v1", "v2", "v3", "v4", "v5", "v6", "v7"},
          {{v1, v2}, {v2, v3}, {v3, v4}, {v4, v5}, {v5, v6}, {v6, v1}, {v7, v1}, {v7, v6}}, {0, 1, 2, 3, 4, 5, 6},
          {3, 3, 3, 3, 3, 3, 3}, {5, 3, 2, 2, 3, 5, 4}, script));
    }

    // Triangles v1v2v3 and v4v5v6 joined by the edge v3v4.
    {
      const Vertex v1 = 0, v2 = 1, v3 = 2, v4 = 3, v5 = 4, v6 = 5;
      StrategyScript script{
          branch(if_size_at_least(v6, 4), "W1:|L(v6)|>=4", {greedy({v3})}, "W1:|L(v6)|=3",
                 {reserve_outside("alpha", v3, v6), assign(v3, "alpha")}),
          greedy({v1, v2, v4, v5, v6})};
      out.push_back(detail::make_config("W1", {"v1", "v2", "v3", "v4", "v5", "v6"},
                                        {{v1, v2}, {v1, v3}, {v2, v3}, {v3, v4}, {v4, v5}, {v4, v6}, {v5, v6}},
                                        {0, 1, 2, 3, 4, 5}, {3, 3, 3, 3, 3, 3}, {3, 3, 5, 5, 3, 3}, script));
    }

    // Triangles v1v2v3 and v4v5v6 joined by the path v3 v7 v4.
    {
      const Vertex v1 = 0, v2 = 1, v3 = 2, v4 = 3, v5 = 4, v6 = 5, v7 = 6;
      StrategyScript script{
          branch(if_size_at_least(v6, 4), "W2:|L(v6)|>=4", {greedy({v7})}, "W2:|L(v6)|=3",
                 {reserve_outside("beta", v7, v6), assign(v7, "beta")}),
          greedy({v1, v2, v3, v4, v5, v6})};
      out.push_back(detail::make_config(
          "W2", {"v1", "v2", "v3", "v4", "v5", "v6", "v7"},
          {{v1, v2}, {v1, v3}, {v2, v3}, {v3, v7}, {v7, v4}, {v4, v5}, {v4, v6}, {v5, v6}}, {0, 1, 2, 3, 4, 5, 6},
          {3, 3, 3, 3, 3, 3, 3}, {3, 3, 4, 4, 3, 3, 4}, script));
    }

    // Triangle v1v2v3 and a 2-vertex w at distance 1, 2, 3 from it.
    {
      const Vertex v1 = 0, v2 = 1, v3 = 2, w = 3;
      out.push_back(detail::make_config("Q1", {"v1", "v2", "v3", "w"}, {{v1, v2}, {v1, v3}, {v2, v3}, {v3, w}},
                                        {0, 1, 2, 3}, {3, 3, 3, 2}, {3, 3, 4, 4},
                                        StrategyScript{greedy({v1, v2, v3, w})}));
    }
    {
      const Vertex v1 = 0, v2 = 1, v3 = 2, v4 = 3, w = 4;
      out.push_back(detail::make_config(
          "Q2", {"v1", "v2", "v3", "v4", "w"}, {{v1, v2}, {v1, v3}, {v2, v3}, {v3, v4}, {v4, w}}, {0, 1, 2, 3, 4},
          {3, 3, 3, 3, 2}, {3, 3, 4, 3, 3},
          StrategyScript{pick_preserving(v3, v1, 3, "c"), greedy({w, v4, v2, v1})}));
    }
    {
      const Vertex v1 = 0, v2 = 1, v3 = 2, v4 = 3, v5 = 4, w = 5;
      out.push_back(detail::make_config(
          "Q3", {"v1", "v2", "v3", "v4", "v5", "w"},
          {{v1, v2}, {v1, v3}, {v2, v3}, {v3, v4}, {v4, v5}, {v5, w}}, {0, 1, 2, 3, 4, 5}, {3, 3, 3, 3, 3, 2},
          {3, 3, 4, 3, 2, 3}, StrategyScript{pick_preserving(v3, v1, 3, "alpha"), greedy({v5, v4, w, v2, v1})}));
    }
    return out;
  }();
  return entries;
}

inline const Configuration& find_configuration(const std::string& name) {
  for (const auto& c : catalog())
    if (c.name == name) return c;
  throw Error(ErrorCode::InvalidConfiguration, "unknown configuration '" + name + "'");
}

inline void validate_configuration(const Configuration& c) {
  const std::size_t n = c.full.order();
  if (c.caps.size() != n || c.names.size() != n) {
    throw Error(ErrorCode::InvalidConfiguration, c.name + ": caps/names do not cover every vertex");
  }
  std::set<Vertex> seen;
  for (Vertex v : c.deleted) {
    if (v < 0 || static_cast<std::size_t>(v) >= n || !seen.insert(v).second) {
      throw Error(ErrorCode::InvalidConfiguration, c.name + ": deleted set is not a set of vertices");
    }
  }
  for (std::size_t v = 0; v < n; ++v) {
    if (c.caps[v] < static_cast<int>(c.full.degree(static_cast<Vertex>(v)))) {
      throw Error(ErrorCode::InvalidConfiguration, c.name + ": cap below degree at " + c.names[v]);
    }
  }
}

/// Worst-case residual list sizes over D (see the header comment).
inline SizeVector derive_residual_bounds(const Configuration& c) {
  validate_configuration(c);
  const Graph& h = c.full;
  std::vector<bool> in_d(h.order(), false);
  for (Vertex v : c.deleted) in_d[v] = true;
  auto missing = [&](Vertex v) { return c.caps[v] - static_cast<int>(h.degree(v)); };
  SizeVector bounds;
  for (Vertex v : c.deleted) {
    const auto dist = bfs_distances(h, v);
    int lost = 0;
    for (std::size_t x = 0; x < h.order(); ++x) {
      if (!in_d[x] && dist[x] && *dist[x] <= 2) ++lost;
    }
    lost += 3 * missing(v);
    for (Vertex u : h.neighbors(v)) lost += missing(u);
    const int bound = std::max(0, kListSize - lost);
    if (bound == 0) {
      throw Error(ErrorCode::InvalidConfiguration, c.name + ": residual bound of " + c.names[v] + " is 0");
    }
    bounds.push_back(bound);
  }
  return bounds;
}

struct ReducibilityCertificate {
  std::string name;
  SizeVector f;
  SearchStats stats;
  std::optional<std::vector<Vertex>> greedy_order;
};

struct ReducibilityResult {
  ReducibilityCertificate certificate;       // filled in either case
  std::optional<BadAssignmentWitness> witness;

  bool reducible() const noexcept { return !witness.has_value(); }
};

inline ReducibilityResult verify_reducible(const Configuration& c, const ChoosabilityOptions& opts = {}) {
  const SizeVector f = derive_residual_bounds(c);
  const Graph conflict = c.conflict();
  ReducibilityResult out;
  out.certificate.name = c.name;
  out.certificate.f = f;
  auto result = is_f_choosable(conflict, f, opts);
  out.certificate.stats = result.stats;
  out.witness = std::move(result.witness);
  if (!out.witness && conflict.order() <= kMaxGreedyCertificateOrder) {
    out.certificate.greedy_order = greedy_order_certificate(conflict, f);
  }
  return out;
}

// ---------------------------------------------------------------------------
// Strategy interpreter

struct StrategyFailure {
  std::string step;    // rendered step that had no valid choice
  std::string reason;
};

struct StrategyRun {
  std::variant<Coloring, StrategyFailure> outcome;
  std::vector<std::string> branches;  // labels taken, in order

  bool succeeded() const noexcept { return std::holds_alternative<Coloring>(outcome); }
};

namespace detail {

inline std::string vertex_name(const Configuration& c, Vertex v) {
  return c.names.at(c.deleted.at(v));
}

inline std::string describe(const Configuration& c, const Step& s) {
  auto vn = [&](std::size_t i) { return vertex_name(c, s.vertices.at(i)); };
  switch (s.kind) {
    case Step::Kind::PickCommon: return "PickCommon(" + vn(0) + "," + vn(1) + ")";
    case Step::Kind::PickPreserving:
      return "PickPreserving(" + vn(0) + "," + vn(1) + "," + std::to_string(s.k) + ")";
    case Step::Kind::ReserveOutside: return "ReserveOutside(" + s.var + "," + vn(0) + "," + vn(1) + ")";
    case Step::Kind::PickAvoiding: return "PickAvoiding(" + vn(0) + ")";
    case Step::Kind::Assign: return "Assign(" + vn(0) + "," + s.var + ")";
    case Step::Kind::Greedy: {
      std::string out = "Greedy(";
      for (std::size_t i = 0; i < s.vertices.size(); ++i) out += (i ? "," : "") + vn(i);
      return out + ")";
    }
    case Step::Kind::Branch: return "Branch";
  }
  return "?";
}

class StrategyInterpreter {
 public:
  StrategyInterpreter(const Configuration& c, const Graph& conflict, const ListAssignment& lists)
      : config_(c), conflict_(conflict), lists_(lists), coloring_(Coloring::empty(conflict.order())) {}

  StrategyRun run(const StrategyScript& script) {
    StrategyRun result;
    if (!execute(script, result)) {
      result.outcome = *failure_;
      return result;
    }
    if (!coloring_.total()) {
      result.outcome = StrategyFailure{"end", "script left vertices uncoloured"};
    } else if (!check_proper(conflict_, coloring_, lists_)) {
      result.outcome = StrategyFailure{"end", "script produced an improper colouring"};
    } else {
      result.outcome = coloring_;
    }
    return result;
  }

 private:
  std::vector<Color> current(Vertex v) const {
    std::vector<Color> out;
    for (Color col : lists_[v]) {
      bool used = false;
      for (Vertex u : conflict_.neighbors(v)) {
        if (coloring_.colors[u] && *coloring_.colors[u] == col) {
          used = true;
          break;
        }
      }
      if (!used) out.push_back(col);
    }
    return out;
  }

  bool fail(const Step& s, std::string reason) {
    failure_ = StrategyFailure{describe(config_, s), std::move(reason)};
    return false;
  }

  bool colour(const Step& s, Vertex v, Color col) {
    if (coloring_.colors[v]) return fail(s, vertex_name(config_, v) + " already coloured");
    auto avail = current(v);
    if (!std::binary_search(avail.begin(), avail.end(), col)) {
      return fail(s, "colour " + std::to_string(col) + " unavailable at " + vertex_name(config_, v));
    }
    coloring_.colors[v] = col;
    return true;
  }

  std::optional<Color> bound(const std::string& var) const {
    auto it = vars_.find(var);
    if (it == vars_.end()) return std::nullopt;
    return it->second;
  }

  bool test(const Condition& c) const {
    switch (c.kind) {
      case Condition::Kind::Intersects: {
        auto a = current(c.x), b = current(c.y);
        std::vector<Color> both;
        std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(both));
        return !both.empty();
      }
      case Condition::Kind::Member: {
        auto val = bound(c.var);
        return val && lists_.contains(c.x, *val);
      }
      case Condition::Kind::SizeAtLeast: return static_cast<int>(current(c.x).size()) >= c.k;
      case Condition::Kind::ChosenEq: {
        auto val = bound(c.var);
        return val && coloring_.colors[c.x] && *coloring_.colors[c.x] == *val;
      }
    }
    return false;
  }

  bool execute(const StrategyScript& script, StrategyRun& run) {
    for (const Step& s : script) {
      if (!execute(s, run)) return false;
    }
    return true;
  }

  bool execute(const Step& s, StrategyRun& run) {
    switch (s.kind) {
      case Step::Kind::PickCommon: {
        auto a = current(s.vertices[0]), b = current(s.vertices[1]);
        std::vector<Color> both;
        std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(both));
        if (both.empty()) return fail(s, "no common colour");
        vars_[s.var] = both.front();
        return colour(s, s.vertices[0], both.front()) && colour(s, s.vertices[1], both.front());
      }
      case Step::Kind::PickPreserving: {
        auto target = current(s.vertices[1]);
        for (Color col : current(s.vertices[0])) {
          auto left = target.size() - (std::binary_search(target.begin(), target.end(), col) ? 1 : 0);
          if (static_cast<int>(left) >= s.k) {
            vars_[s.var] = col;
            return colour(s, s.vertices[0], col);
          }
        }
        return fail(s, "no colour keeps enough of the second list");
      }
      case Step::Kind::ReserveOutside: {
        auto a = current(s.vertices[0]), b = current(s.vertices[1]);
        std::vector<Color> diff;
        std::set_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(diff));
        if (diff.empty()) return fail(s, "first list is contained in the second");
        vars_[s.var] = diff.front();
        return true;
      }
      case Step::Kind::PickAvoiding: {
        for (Color col : current(s.vertices[0])) {
          bool clash = std::any_of(s.avoid.begin(), s.avoid.end(),
                                   [&](const std::string& var) { return bound(var) == col; });
          if (!clash) {
            vars_[s.var] = col;
            return colour(s, s.vertices[0], col);
          }
        }
        return fail(s, "every available colour is reserved");
      }
      case Step::Kind::Assign: {
        auto val = bound(s.var);
        if (!val) return fail(s, "variable " + s.var + " unbound");
        return colour(s, s.vertices[0], *val);
      }
      case Step::Kind::Greedy: {
        for (Vertex v : s.vertices) {
          auto avail = current(v);
          if (avail.empty()) return fail(s, "no colour left for " + vertex_name(config_, v));
          if (!colour(s, v, avail.front())) return false;
        }
        return true;
      }
      case Step::Kind::Branch: {
        bool taken = test(s.condition);
        run.branches.push_back(taken ? s.then_label : s.else_label);
        return execute(taken ? s.then_steps : s.else_steps, run);
      }
    }
    return false;
  }

  const Configuration& config_;
  const Graph& conflict_;
  const ListAssignment& lists_;
  Coloring coloring_;
  std::map<std::string, Color> vars_;
  std::optional<StrategyFailure> failure_;
};

inline void check_strategy_preconditions(const Configuration& c, const ListAssignment& lists,
                                         const SizeVector& bounds) {
  if (!c.strategy) throw Error(ErrorCode::ScriptMissing, c.name + " has no strategy");
  if (lists.size() != bounds.size()) {
    throw Error(ErrorCode::PreconditionViolated, c.name + ": lists must cover exactly the deleted set");
  }
  for (std::size_t v = 0; v < bounds.size(); ++v) {
    if (static_cast<int>(lists[v].size()) < bounds[v]) {
      throw Error(ErrorCode::PreconditionViolated, c.name + ": list of " + vertex_name(c, static_cast<Vertex>(v)) +
                                                       " is below its bound " + std::to_string(bounds[v]));
    }
  }
}

}  // namespace detail

/// Replays the configuration's strategy on `lists` (indexed like D). Where a
/// step may choose among several colours, the lowest one is taken.
inline StrategyRun run_strategy(const Configuration& c, const ListAssignment& lists) {
  const SizeVector bounds = derive_residual_bounds(c);
  detail::check_strategy_preconditions(c, lists, bounds);
  const Graph conflict = c.conflict();
  return detail::StrategyInterpreter(c, conflict, lists).run(*c.strategy);
}

struct StrategyCheckMode {
  std::uint64_t trials = 0;  // random assignments with sizes equal to the bounds
  std::uint64_t seed = 1;
  bool adversarial = false;  // structured families as well
};

struct StrategyCounterexample {
  std::string family;
  ListAssignment lists;
  StrategyFailure failure;
  bool solver_colorable = false;  // whether the assignment is colourable at all
};

struct StrategyReport {
  std::string name;
  std::uint64_t trials = 0;
  std::uint64_t failures = 0;
  std::uint64_t unsound = 0;  // strategy succeeded but the solver found no colouring
  std::vector<StrategyCounterexample> examples;  // first few failures
  std::map<std::string, std::uint64_t> branch_coverage;
  std::map<std::string, std::uint64_t> family_trials;
};

namespace detail {

inline constexpr std::size_t kMaxReportedFailures = 10;
inline constexpr std::uint64_t kTrialsPerChunk = 4096;

inline void record(StrategyReport& report, const Configuration& c, const Graph& conflict, const std::string& family,
                   const ListAssignment& lists) {
  auto run = StrategyInterpreter(c, conflict, lists).run(*c.strategy);
  ++report.trials;
  ++report.family_trials[family];
  for (const auto& label : run.branches) ++report.branch_coverage[label];
  const bool colorable = solve_list_coloring(conflict, lists).has_value();
  if (run.succeeded()) {
    if (!colorable) ++report.unsound;
    return;
  }
  ++report.failures;
  if (report.examples.size() < kMaxReportedFailures) {
    report.examples.push_back({family, lists, std::get<StrategyFailure>(run.outcome), colorable});
  }
}

inline void merge(StrategyReport& into, const StrategyReport& part) {
  into.trials += part.trials;
  into.failures += part.failures;
  into.unsound += part.unsound;
  for (const auto& e : part.examples)
    if (into.examples.size() < kMaxReportedFailures) into.examples.push_back(e);
  for (const auto& [k, v] : part.branch_coverage) into.branch_coverage[k] += v;
  for (const auto& [k, v] : part.family_trials) into.family_trials[k] += v;
}

inline std::size_t worker_count() {
  if (const char* env = std::getenv("SQCOLOR_WORKERS")) {
    long n = std::strtol(env, nullptr, 10);
    if (n > 0) return static_cast<std::size_t>(n);
  }
  return std::max(1U, std::thread::hardware_concurrency());
}

inline void adversarial_families(StrategyReport& report, const Configuration& c, const Graph& conflict,
                                 const SizeVector& f) {
  const std::size_t n = f.size();
  const int top = *std::max_element(f.begin(), f.end());
  auto window = [](int start, int size) {
    std::vector<Color> l(size);
    std::iota(l.begin(), l.end(), start);
    return l;
  };

  // Nested prefixes {1..f(v)} and right-aligned suffixes ending at max f.
  {
    std::vector<std::vector<Color>> pre(n), suf(n);
    for (std::size_t v = 0; v < n; ++v) {
      pre[v] = window(1, f[v]);
      suf[v] = window(top - f[v] + 1, f[v]);
    }
    record(report, c, conflict, "nested", ListAssignment(pre));
    record(report, c, conflict, "suffix", ListAssignment(suf));
  }
  // Pairwise disjoint blocks.
  {
    std::vector<std::vector<Color>> lists(n);
    int next = 1;
    for (std::size_t v = 0; v < n; ++v) {
      lists[v] = window(next, f[v]);
      next += f[v];
    }
    record(report, c, conflict, "disjoint", ListAssignment(lists));
  }
  // Sliding windows: every combination of start offsets 0..3, which covers
  // aligned, partially overlapping and disjoint pairs; then the same with
  // one list enlarged by one so branches guarded by a larger list are taken.
  {
    constexpr int kShifts = 4;
    std::vector<int> shift(n, 0);
    while (true) {
      std::vector<std::vector<Color>> lists(n);
      for (std::size_t v = 0; v < n; ++v) lists[v] = window(1 + shift[v], f[v]);
      record(report, c, conflict, "windows", ListAssignment(lists));
      for (std::size_t v = 0; v < n; ++v) {
        auto grown = lists;
        grown[v] = window(1 + shift[v], f[v] + 1);
        record(report, c, conflict, "windows+1", ListAssignment(grown));
      }
      std::size_t i = 0;
      while (i < n && ++shift[i] == kShifts) shift[i++] = 0;
      if (i == n) break;
    }
  }
  // Every assignment over a pool one larger than the largest list, up to
  // renaming of colours.
  for_each_canonical_assignment(f, top + 1, [&](const std::vector<std::vector<Color>>& lists) {
    record(report, c, conflict, "exhaustive", ListAssignment(lists));
    return false;
  });
}

}  // namespace detail

/// Falsification harness for a configuration's strategy. Random mode draws
/// lists of exactly the bound sizes from a pool of sum(f) colours; chunk j of
/// the trials uses seed mix_seed(seed + j), so the report does not depend on
/// the number of workers (SQCOLOR_WORKERS).
inline StrategyReport check_strategy(const Configuration& c, const StrategyCheckMode& mode) {
  if (!c.strategy) throw Error(ErrorCode::ScriptMissing, c.name + " has no strategy");
  const SizeVector f = derive_residual_bounds(c);
  const Graph conflict = c.conflict();
  const int pool = std::accumulate(f.begin(), f.end(), 0);
  StrategyReport report;
  report.name = c.name;

  const std::uint64_t chunks = (mode.trials + detail::kTrialsPerChunk - 1) / detail::kTrialsPerChunk;
  auto run_chunk = [&](std::uint64_t chunk) {
    StrategyReport part;
    Rng rng(mix_seed(mode.seed + chunk));
    const std::uint64_t begin = chunk * detail::kTrialsPerChunk;
    const std::uint64_t end = std::min(mode.trials, begin + detail::kTrialsPerChunk);
    for (std::uint64_t t = begin; t < end; ++t) {
      std::vector<std::vector<Color>> lists(f.size());
      for (std::size_t v = 0; v < f.size(); ++v) lists[v] = rng.sample(pool, f[v]);
      detail::record(part, c, conflict, "random", ListAssignment(lists));
    }
    return part;
  };
  const std::size_t workers = detail::worker_count();
  for (std::uint64_t base = 0; base < chunks; base += workers) {
    std::vector<std::future<StrategyReport>> batch;
    for (std::uint64_t j = base; j < std::min<std::uint64_t>(chunks, base + workers); ++j) {
      batch.push_back(std::async(workers > 1 ? std::launch::async : std::launch::deferred, run_chunk, j));
    }
    for (auto& fut : batch) detail::merge(report, fut.get());
  }
  if (mode.adversarial) detail::adversarial_families(report, c, conflict, f);
  return report;
}

}  // namespace sqcolor
