#include <gtest/gtest.h>

#include "sqcolor/graph.hpp"
#include "support.hpp"

using namespace sqcolor;

namespace {

ErrorCode code_of(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  ADD_FAILURE() << "no error raised";
  return ErrorCode::ParseError;
}

Graph bowtie() { return Graph(5, {{0, 1}, {1, 2}, {2, 0}, {0, 3}, {3, 4}, {4, 0}}); }

// Two triangles joined by one edge (v1 v2 v3, v4 v5 v6, edge v3 v4).
Graph w1() { return Graph(6, {{0, 1}, {1, 2}, {2, 0}, {2, 3}, {3, 4}, {4, 5}, {5, 3}}); }

}  // namespace

TEST(BuildGraph, PathDegrees) {
  Graph g = build_graph(3, std::vector<Edge>{{0, 1}, {1, 2}});
  EXPECT_EQ(g.order(), 3U);
  EXPECT_EQ(g.degree(0), 1U);
  EXPECT_EQ(g.degree(1), 2U);
  EXPECT_EQ(g.degree(2), 1U);
}

TEST(BuildGraph, Errors) {
  EXPECT_EQ(code_of([] { Graph(3, {{0, 1}, {0, 1}}); }), ErrorCode::DuplicateEdge);
  EXPECT_EQ(code_of([] { Graph(3, {{0, 1}, {1, 0}}); }), ErrorCode::DuplicateEdge);
  EXPECT_EQ(code_of([] { Graph(3, {{0, 3}}); }), ErrorCode::IndexOutOfRange);
  EXPECT_EQ(code_of([] { Graph(3, {{-1, 0}}); }), ErrorCode::IndexOutOfRange);
  EXPECT_EQ(code_of([] { Graph(3, {{2, 2}}); }), ErrorCode::SelfLoop);
}

TEST(BuildGraph, SingleVertex) {
  Graph g(1, {});
  EXPECT_EQ(g.order(), 1U);
  EXPECT_EQ(g.size(), 0U);
  EXPECT_TRUE(g.neighbors(0).empty());
}

TEST(BuildGraph, AdjacencySortedAndSymmetric) {
  Graph g(5, {{4, 0}, {2, 0}, {3, 1}, {0, 1}});
  for (Vertex v = 0; v < 5; ++v) {
    const auto& nb = g.neighbors(v);
    EXPECT_TRUE(std::is_sorted(nb.begin(), nb.end()));
    for (Vertex w : nb) EXPECT_TRUE(g.adjacent(w, v));
  }
  std::size_t total = 0;
  for (Vertex v = 0; v < 5; ++v) total += g.degree(v);
  EXPECT_EQ(total, 2 * g.size());
}

TEST(Square, PathBecomesTriangle) { EXPECT_EQ(square(path_graph(3)), complete_graph(3)); }

TEST(Square, C6) {
  Graph sq = square(cycle_graph(6));
  for (Vertex i = 0; i < 6; ++i) {
    EXPECT_EQ(sq.degree(i), 4U);
    EXPECT_TRUE(sq.adjacent(i, (i + 1) % 6));
    EXPECT_TRUE(sq.adjacent(i, (i + 2) % 6));
    EXPECT_FALSE(sq.adjacent(i, (i + 3) % 6));
  }
}

TEST(Square, K1) { EXPECT_EQ(square(Graph(1, {})), Graph(1, {})); }

TEST(Square, MatchesDistanceOnRandomGraphs) {
  for (std::uint64_t seed = 0; seed < 200; ++seed) {
    std::size_t n = 1 + seed % 12;
    Graph g = fixtures::random_graph(n, 1 + static_cast<int>(seed % 3), 6, seed);
    Graph sq = square(g);
    for (auto [u, v] : g.edges()) EXPECT_TRUE(sq.adjacent(u, v));
    for (Vertex u = 0; u < static_cast<Vertex>(n); ++u)
      for (Vertex v = 0; v < static_cast<Vertex>(n); ++v) {
        if (u == v) continue;
        auto d = distance(g, u, v);
        EXPECT_EQ(sq.adjacent(u, v), d && *d <= 2) << "seed " << seed;
      }
  }
}

TEST(Square, DiameterTwoGivesComplete) {
  EXPECT_EQ(square(petersen_graph()), complete_graph(10));
  EXPECT_EQ(square(cycle_graph(5)), complete_graph(5));
}

TEST(Distance, Examples) {
  EXPECT_EQ(distance(cycle_graph(7), 0, 3), 3);
  EXPECT_EQ(distance(petersen_graph(), 4, 4), 0);
  Graph two(4, {{0, 1}, {2, 3}});
  EXPECT_EQ(distance(two, 0, 3), std::nullopt);
  EXPECT_EQ(code_of([] { distance(cycle_graph(3), 0, 5); }), ErrorCode::IndexOutOfRange);
}

TEST(SetDistance, Examples) {
  Graph c7 = cycle_graph(7);
  std::vector<Vertex> a{0}, b{3, 4};
  EXPECT_EQ(set_distance(c7, a, b), 3);
  EXPECT_EQ(set_distance(c7, b, b), 0);
  std::vector<Vertex> t1{0, 1, 2}, t2{3, 4, 5};
  EXPECT_EQ(set_distance(w1(), t1, t2), 1);
  std::vector<Vertex> none;
  EXPECT_EQ(code_of([&] { set_distance(c7, none, b); }), ErrorCode::EmptySet);
}

TEST(Cycles, C7) {
  auto census = girth_and_cycles(cycle_graph(7), 7);
  EXPECT_EQ(census.girth, 7);
  for (int k = 3; k <= 6; ++k) EXPECT_TRUE(census.of_length(k).empty());
  ASSERT_EQ(census.of_length(7).size(), 1U);
  EXPECT_EQ(census.of_length(7)[0], (Cycle{0, 1, 2, 3, 4, 5, 6}));
}

TEST(Cycles, K4) {
  auto census = girth_and_cycles(complete_graph(4), 4);
  EXPECT_EQ(census.girth, 3);
  EXPECT_EQ(census.of_length(3).size(), 4U);
  EXPECT_EQ(census.of_length(4).size(), 3U);
  for (const auto& c : census.of_length(4)) {
    EXPECT_EQ(c[0], 0);
    EXPECT_LT(c[1], c.back());
  }
}

TEST(Cycles, Tree) {
  Graph tree(5, {{0, 1}, {0, 2}, {2, 3}, {2, 4}});
  auto census = girth_and_cycles(tree, 8);
  EXPECT_EQ(census.girth, std::nullopt);
  EXPECT_TRUE(census.cycles.empty());
}

TEST(Cycles, KMaxTooLarge) {
  EXPECT_EQ(code_of([] { girth_and_cycles(cycle_graph(3), 9); }), ErrorCode::KMaxTooLarge);
}

TEST(Cycles, GirthIsShortestListedLength) {
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    Graph g = fixtures::random_graph(3 + seed % 6, 1, 3, seed + 1000);
    auto census = girth_and_cycles(g, 8);
    if (census.cycles.empty()) continue;
    EXPECT_EQ(census.girth, census.cycles.begin()->first);
  }
}

TEST(Cycles, PetersenCounts) {
  auto census = girth_and_cycles(petersen_graph(), 8);
  EXPECT_EQ(census.girth, 5);
  EXPECT_EQ(census.of_length(5).size(), 12U);
  EXPECT_EQ(census.of_length(6).size(), 10U);
  EXPECT_EQ(census.of_length(8).size(), 15U);
}

TEST(ArticulationPoints, Examples) {
  EXPECT_EQ(articulation_points(path_graph(3)), std::vector<Vertex>{1});
  EXPECT_TRUE(articulation_points(cycle_graph(6)).empty());
  EXPECT_EQ(articulation_points(bowtie()), std::vector<Vertex>{0});
}

TEST(ArticulationPoints, MatchesDeletionOnSmallGraphs) {
  // Every labelled graph on up to 5 vertices, then random ones up to 8.
  auto check = [](const Graph& g) {
    std::vector<Vertex> expected;
    std::size_t base = component_count(g);
    for (std::size_t v = 0; v < g.order(); ++v) {
      bool removed[16] = {};
      removed[v] = true;
      if (component_count(g, std::span<const bool>(removed, g.order())) > base)
        expected.push_back(static_cast<Vertex>(v));
    }
    EXPECT_EQ(articulation_points(g), expected);
  };
  for (std::size_t n = 1; n <= 5; ++n)
    for (std::uint32_t mask = 0; mask < (1U << fixtures::pair_count(n)); ++mask) check(fixtures::graph_from_mask(n, mask));
  for (std::uint64_t seed = 0; seed < 300; ++seed) check(fixtures::random_graph(6 + seed % 3, 1, 4, seed + 77));
}

TEST(CycleEdges, Sharing) {
  Cycle a{0, 1, 2}, b{1, 2, 3}, c{2, 3, 4};
  EXPECT_TRUE(cycles_share_edge(a, b));
  EXPECT_FALSE(cycles_share_edge(a, c));
  EXPECT_TRUE(cycle_has_edge(a, 2, 0));
}

TEST(Induced, Relabels) {
  Graph g = cycle_graph(6);
  std::vector<Vertex> keep{5, 0, 1};
  EXPECT_EQ(g.induced(keep), path_graph(3));
}
