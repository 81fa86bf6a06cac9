#include <gtest/gtest.h>

#include "sqcolor/embedding.hpp"
#include "support.hpp"

using namespace sqcolor;

namespace {

Rotation with_swaps(const Graph& g, std::uint32_t mask) {
  Rotation r = sorted_rotation(g);
  for (std::size_t v = 0; v < g.order(); ++v)
    if (g.degree(static_cast<Vertex>(v)) == 3 && (mask >> v & 1U)) std::swap(r[v][1], r[v][2]);
  return r;
}

Graph k33() { return Graph(6, {{0, 3}, {0, 4}, {0, 5}, {1, 3}, {1, 4}, {1, 5}, {2, 3}, {2, 4}, {2, 5}}); }

// Triangle 0-1-2 with pendant path 2-3-4.
Graph triangle_with_tail() { return Graph(5, {{0, 1}, {1, 2}, {0, 2}, {2, 3}, {3, 4}}); }

std::size_t total_length(const PlaneEmbedding& e) {
  std::size_t sum = 0;
  for (const auto& f : e.faces()) sum += f.length();
  return sum;
}

}  // namespace

TEST(BuildEmbedding, C6TwoHexagons) {
  Graph c6 = cycle_graph(6);
  auto e = build_embedding(c6, sorted_rotation(c6));
  ASSERT_EQ(e.faces().size(), 2U);
  for (const auto& f : e.faces()) EXPECT_EQ(f.length(), 6U);
}

TEST(BuildEmbedding, K4PlanarAndToroidalRotations) {
  Graph k4 = complete_graph(4);
  std::size_t planar = 0, rejected = 0;
  for (std::uint32_t mask = 0; mask < 16; ++mask) {
    try {
      auto e = build_embedding(k4, with_swaps(k4, mask));
      ++planar;
      ASSERT_EQ(e.faces().size(), 4U);
      for (const auto& f : e.faces()) EXPECT_EQ(f.length(), 3U);
    } catch (const Error& err) {
      EXPECT_EQ(err.code(), ErrorCode::NotPlanarEmbedding);
      ++rejected;
    }
  }
  EXPECT_GT(planar, 0U);
  EXPECT_GT(rejected, 0U);
}

TEST(BuildEmbedding, Errors) {
  Graph p3 = path_graph(3);
  Rotation bad{{1}, {0}, {1}};
  EXPECT_THROW(build_embedding(p3, bad), Error);
  try {
    build_embedding(p3, Rotation{{1}, {0, 0}, {1}});
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::InvalidRotation);
  }
  Graph two(4, {{0, 1}, {2, 3}});
  try {
    build_embedding(two, sorted_rotation(two));
    ADD_FAILURE();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::NotConnected);
  }
}

TEST(BuildEmbedding, EveryDirectedEdgeOnce) {
  Graph g = triangle_with_tail();
  auto e = build_embedding(g, sorted_rotation(g));
  std::set<std::pair<Vertex, Vertex>> seen;
  for (const auto& f : e.faces())
    for (const auto& d : f.walk) EXPECT_TRUE(seen.insert({d.tail, d.head}).second);
  EXPECT_EQ(seen.size(), 2 * g.size());
  EXPECT_EQ(total_length(e), 2 * g.size());
}

TEST(BuildEmbedding, SingleVertexAndBridge) {
  Graph k1(1, {});
  auto e1 = build_embedding(k1, Rotation{{}});
  EXPECT_EQ(e1.faces().size(), 1U);
  Graph k2(2, {{0, 1}});
  auto e2 = build_embedding(k2, sorted_rotation(k2));
  ASSERT_EQ(e2.faces().size(), 1U);
  EXPECT_EQ(e2.faces()[0].length(), 2U);
}

TEST(FindPlanarEmbedding, Examples) {
  auto k4 = find_planar_embedding(complete_graph(4));
  ASSERT_TRUE(k4);
  EXPECT_EQ(k4->faces().size(), 4U);
  EXPECT_FALSE(find_planar_embedding(petersen_graph()));
  EXPECT_FALSE(find_planar_embedding(k33()));
  auto c7 = find_planar_embedding(cycle_graph(7));
  ASSERT_TRUE(c7);
  ASSERT_EQ(c7->faces().size(), 2U);
  EXPECT_EQ(c7->faces()[0].length(), 7U);
}

TEST(FindPlanarEmbedding, Errors) {
  try {
    find_planar_embedding(complete_graph(5));
    ADD_FAILURE();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::DegreeCapExceeded);
  }
  try {
    find_planar_embedding(cycle_graph(17));
    ADD_FAILURE();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::TooLarge);
  }
}

TEST(FindPlanarEmbedding, PrismAndCube) {
  Graph prism(6, {{0, 1}, {1, 2}, {2, 0}, {3, 4}, {4, 5}, {5, 3}, {0, 3}, {1, 4}, {2, 5}});
  auto e = find_planar_embedding(prism);
  ASSERT_TRUE(e);
  EXPECT_EQ(e->faces().size(), 5U);
  EXPECT_EQ(total_length(*e), 2 * prism.size());
}

TEST(FaceStats, C7) {
  auto e = *find_planar_embedding(cycle_graph(7));
  auto stats = face_stats(e);
  ASSERT_EQ(stats.faces.size(), 2U);
  for (const auto& f : stats.faces) {
    EXPECT_EQ(f.length, 7U);
    EXPECT_EQ(f.two_vertices.size(), 7U);
    EXPECT_TRUE(f.adjacent_triangles.empty());
  }
}

TEST(FaceStats, K4) {
  auto e = *find_planar_embedding(complete_graph(4));
  for (const auto& f : face_stats(e).faces) {
    EXPECT_EQ(f.length, 3U);
    EXPECT_TRUE(f.two_vertices.empty());
    EXPECT_EQ(f.adjacent_triangles.size(), 3U);
  }
}

TEST(FaceStats, TriangleWithTail) {
  Graph g = triangle_with_tail();
  auto e = *find_planar_embedding(g);
  auto stats = face_stats(e);
  ASSERT_EQ(stats.faces.size(), 2U);
  bool found_outer = false;
  for (std::size_t i = 0; i < stats.faces.size(); ++i) {
    if (e.faces()[i].length() != 7) continue;
    found_outer = true;
    EXPECT_EQ(stats.faces[i].two_vertices, (std::vector<Vertex>{0, 1, 3}));
    EXPECT_EQ(stats.faces[i].adjacent_triangles.size(), 1U);
  }
  EXPECT_TRUE(found_outer);
}

TEST(FaceStats, TrianglesAreGraphCycles) {
  for (std::uint64_t seed = 0; seed < 60; ++seed) {
    Graph g = fixtures::random_subcubic(4 + seed % 9, 2 + seed % 5, seed + 5);
    auto e = find_planar_embedding(g);
    if (!e) continue;
    const auto listed = girth_and_cycles(g, 3).of_length(3);
    for (const auto& f : face_stats(*e).faces)
      for (const auto& t : f.adjacent_triangles)
        EXPECT_NE(std::find(listed.begin(), listed.end(), Cycle{t[0], t[1], t[2]}), listed.end());
    EXPECT_EQ(total_length(*e), 2 * g.size());
  }
}
