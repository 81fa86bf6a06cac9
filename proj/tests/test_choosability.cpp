#include <gtest/gtest.h>

#include "sqcolor/choosability.hpp"
#include "support.hpp"

using namespace sqcolor;

namespace {

// W1 conflict graph: square of two triangles joined by the edge v3v4.
Graph w1_square() { return square(Graph(6, {{0, 1}, {0, 2}, {1, 2}, {2, 3}, {3, 4}, {3, 5}, {4, 5}})); }

// All vertex orders, checked directly.
std::optional<std::vector<Vertex>> brute_greedy_order(const Graph& g, const SizeVector& f) {
  std::vector<Vertex> perm(g.order());
  std::iota(perm.begin(), perm.end(), 0);
  do {
    bool ok = true;
    for (std::size_t i = 0; i < perm.size() && ok; ++i) {
      int earlier = 0;
      for (std::size_t j = 0; j < i; ++j) earlier += g.adjacent(perm[i], perm[j]) ? 1 : 0;
      ok = earlier < f[perm[i]];
    }
    if (ok) return perm;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return std::nullopt;
}

}  // namespace

TEST(IsFChoosable, Examples) {
  auto k3 = is_f_choosable(complete_graph(3), {2, 2, 2});
  ASSERT_FALSE(k3.choosable());
  EXPECT_EQ(k3.witness->lists, ListAssignment({{1, 2}, {1, 2}, {1, 2}}));
  EXPECT_TRUE(is_f_choosable(Graph(2, {{0, 1}}), {1, 2}).choosable());
  EXPECT_TRUE(is_f_choosable(cycle_graph(4), {2, 2, 2, 2}).choosable());
}

TEST(IsFChoosable, KnownSmallValues) {
  EXPECT_FALSE(is_f_choosable(Graph(2, {{0, 1}}), {1, 1}).choosable());
  EXPECT_TRUE(is_f_choosable(complete_graph(3), {1, 2, 3}).choosable());
  EXPECT_TRUE(is_f_choosable(complete_graph(4), {3, 3, 3, 4}).choosable());
  EXPECT_FALSE(is_f_choosable(complete_graph(4), {3, 3, 3, 3}).choosable());
  // K_{2,4} is not 2-choosable; C5 is not 2-choosable, C6 is.
  Graph k24(6, {{0, 2}, {0, 3}, {0, 4}, {0, 5}, {1, 2}, {1, 3}, {1, 4}, {1, 5}});
  EXPECT_FALSE(is_f_choosable(k24, {2, 2, 2, 2, 2, 2}).choosable());
  EXPECT_FALSE(is_f_choosable(cycle_graph(5), {2, 2, 2, 2, 2}).choosable());
  EXPECT_TRUE(is_f_choosable(cycle_graph(6), {2, 2, 2, 2, 2, 2}).choosable());
  EXPECT_TRUE(is_f_choosable(square(cycle_graph(6)), {3, 3, 3, 3, 3, 3}).choosable() ==
              is_f_choosable(square(cycle_graph(6)), {3, 3, 3, 3, 3, 3}, {.automorphism_pruning = true}).choosable());
}

TEST(IsFChoosable, WitnessesAreBad) {
  for (std::uint64_t seed = 0; seed < 60; ++seed) {
    Graph g = fixtures::random_graph(2 + seed % 5, 1, 2, seed);
    Rng rng(seed);
    SizeVector f(g.order());
    for (auto& x : f) x = 1 + static_cast<int>(rng.below(3));
    auto r = is_f_choosable(g, f);
    if (r.witness) {
      EXPECT_FALSE(solve_list_coloring(g, r.witness->lists));
      for (std::size_t v = 0; v < g.order(); ++v) EXPECT_EQ(static_cast<int>(r.witness->lists[v].size()), f[v]);
    }
  }
}

TEST(IsFChoosable, Errors) {
  try {
    is_f_choosable(complete_graph(9), SizeVector(9, 1));
    ADD_FAILURE();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::TooLarge);
  }
  EXPECT_THROW(is_f_choosable(complete_graph(3), {1, 2}), Error);
  EXPECT_THROW(is_f_choosable(complete_graph(3), {1, 0, 2}), Error);
  try {
    is_f_choosable(w1_square(), {3, 3, 5, 5, 3, 3}, {.candidate_budget = 10});
    ADD_FAILURE();
  } catch (const SearchBudgetExceeded& e) {
    EXPECT_EQ(e.code(), ErrorCode::SearchBudgetExceeded);
    EXPECT_GE(e.stats().candidates, 10U);
  }
}

TEST(IsFChoosable, AgreesWithNaiveOracleOnThreeVertices) {
  // Exhaustive over labelled graphs on 3 vertices and f in {1,2,3}^3.
  for (std::uint32_t mask = 0; mask < 8; ++mask) {
    Graph g = fixtures::graph_from_mask(3, mask);
    for (int code = 0; code < 27; ++code) {
      SizeVector f{1 + code % 3, 1 + code / 3 % 3, 1 + code / 9};
      int pool = std::accumulate(f.begin(), f.end(), 0);
      EXPECT_EQ(is_f_choosable(g, f).choosable(), naive_f_choosable(g, f, pool, {.max_pool = 9}).choosable())
          << "mask " << mask << " code " << code;
    }
  }
}

TEST(IsFChoosable, MonotoneInF) {
  Graph sq = w1_square();
  SizeVector f{3, 3, 5, 5, 3, 3};
  for (std::size_t v = 0; v < f.size(); v += 2) {
    auto g = f;
    ++g[v];
    EXPECT_TRUE(is_f_choosable(sq, g).choosable());
  }
}

TEST(IsFChoosable, AutomorphismPruningKeepsVerdict) {
  Graph sq = w1_square();
  SizeVector f{3, 3, 5, 5, 3, 3};
  auto plain = is_f_choosable(sq, f);
  auto pruned = is_f_choosable(sq, f, {.automorphism_pruning = true});
  EXPECT_TRUE(plain.choosable());
  EXPECT_TRUE(pruned.choosable());
  EXPECT_GT(pruned.stats.symmetry_skips, 0U);
  EXPECT_LT(pruned.stats.candidates, plain.stats.candidates);
  auto bad = is_f_choosable(sq, {3, 3, 4, 5, 3, 3}, {.automorphism_pruning = true});
  EXPECT_EQ(bad.choosable(), is_f_choosable(sq, {3, 3, 4, 5, 3, 3}).choosable());
}

TEST(NaiveFChoosable, Examples) {
  EXPECT_TRUE(naive_f_choosable(Graph(1, {}), {1}, 1).choosable());
  auto edge = naive_f_choosable(Graph(2, {{0, 1}}), {1, 1}, 2);
  ASSERT_FALSE(edge.choosable());
  EXPECT_EQ(edge.witness->lists, ListAssignment({{1}, {1}}));
  auto k3 = naive_f_choosable(complete_graph(3), {2, 2, 2}, 4);
  ASSERT_FALSE(k3.choosable());
  EXPECT_EQ(k3.witness->lists, ListAssignment({{1, 2}, {1, 2}, {1, 2}}));
}

TEST(NaiveFChoosable, Guards) {
  EXPECT_THROW(naive_f_choosable(complete_graph(5), SizeVector(5, 1), 2), Error);
  EXPECT_THROW(naive_f_choosable(complete_graph(3), {2, 2, 2}, 9), Error);
  EXPECT_THROW(naive_f_choosable(complete_graph(3), {3, 2, 2}, 2), Error);
}

TEST(CanonicalAssignments, CoverEveryRenamingClass) {
  // Sizes (1,1) over pool 3: classes {a},{a} and {a},{b}.
  std::vector<std::vector<std::vector<Color>>> seen;
  auto count = for_each_canonical_assignment({1, 1}, 3, [&](const auto& lists) {
    seen.push_back(lists);
    return false;
  });
  EXPECT_EQ(count, 2U);
  // Sizes (2,2) over pool 4: overlap 2, overlap 1 (twice, as {1,3} and
  // {2,3}) and overlap 0.
  EXPECT_EQ(for_each_canonical_assignment({2, 2}, 4, [](const auto&) { return false; }), 4U);
  // Pool too small to realise disjoint lists.
  EXPECT_EQ(for_each_canonical_assignment({2, 2}, 3, [](const auto&) { return false; }), 3U);
}

TEST(GreedyOrderCertificate, Examples) {
  // Q1: triangle v1 v2 v3 with w pendant at v3; its square is K4.
  Graph q1_sq = square(Graph(4, {{0, 1}, {0, 2}, {1, 2}, {2, 3}}));
  EXPECT_EQ(q1_sq, complete_graph(4));
  EXPECT_EQ(greedy_order_certificate(q1_sq, {3, 3, 4, 4}), (std::vector<Vertex>{0, 1, 2, 3}));
  EXPECT_EQ(greedy_order_certificate(w1_square(), {3, 3, 5, 5, 3, 3}), std::nullopt);
  EXPECT_EQ(brute_greedy_order(w1_square(), {3, 3, 5, 5, 3, 3}), std::nullopt);
  EXPECT_EQ(greedy_order_certificate(Graph(1, {}), {1}), (std::vector<Vertex>{0}));
  EXPECT_THROW(greedy_order_certificate(path_graph(11), SizeVector(11, 2)), Error);
}

TEST(GreedyOrderCertificate, MatchesPermutationOracle) {
  for (std::uint64_t seed = 0; seed < 200; ++seed) {
    Graph g = fixtures::random_graph(1 + seed % 7, 1, 2, seed + 31);
    Rng rng(seed);
    SizeVector f(g.order());
    for (auto& x : f) x = 1 + static_cast<int>(rng.below(4));
    auto fast = greedy_order_certificate(g, f);
    EXPECT_EQ(fast, brute_greedy_order(g, f)) << "seed " << seed;
    if (fast && g.order() <= 6) {
      EXPECT_TRUE(is_f_choosable(g, f).choosable());
    }
  }
}
