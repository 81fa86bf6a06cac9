#pragma once

// Rotation systems and their face walks. A face is stored as the closed walk
// of directed edges that bounds it, so bridges and cut vertices need no
// special casing: a bridge contributes both of its directions to one face.

#include <algorithm>
#include <array>
#include <cstddef>
#include <map>
#include <optional>
#include <set>
#include <vector>

#include "sqcolor/error.hpp"
#include "sqcolor/graph.hpp"

namespace sqcolor {

struct DirectedEdge {
  Vertex tail;
  Vertex head;
  friend bool operator==(const DirectedEdge&, const DirectedEdge&) = default;
  friend auto operator<=>(const DirectedEdge&, const DirectedEdge&) = default;
};

struct Face {
  std::vector<DirectedEdge> walk;

  std::size_t length() const noexcept { return walk.size(); }

  /// Distinct vertices on the boundary walk, sorted.
  std::vector<Vertex> vertices() const {
    std::vector<Vertex> vs;
    for (const auto& e : walk) vs.push_back(e.tail);
    std::sort(vs.begin(), vs.end());
    vs.erase(std::unique(vs.begin(), vs.end()), vs.end());
    return vs;
  }

  bool has_edge(Vertex a, Vertex b) const {
    return std::any_of(walk.begin(), walk.end(), [&](const DirectedEdge& e) {
      return (e.tail == a && e.head == b) || (e.tail == b && e.head == a);
    });
  }
};

/// Cyclic neighbour order at each vertex.
using Rotation = std::vector<std::vector<Vertex>>;

/// Face walks of an arbitrary rotation system (no genus check). After
/// arriving at v along (u, v) the walk continues to the neighbour that
/// follows u in v's rotation. A graph without edges has one empty face.
inline std::vector<Face> trace_faces(const Graph& g, const Rotation& rotation) {
  std::vector<Face> faces;
  if (g.size() == 0) {
    faces.push_back(Face{});
    return faces;
  }
  std::map<DirectedEdge, bool> used;
  for (std::size_t v = 0; v < g.order(); ++v) {
    for (Vertex w : rotation[v]) used[{static_cast<Vertex>(v), w}] = false;
  }
  auto successor = [&](DirectedEdge e) {
    const auto& rot = rotation[e.head];
    auto it = std::find(rot.begin(), rot.end(), e.tail);
    std::size_t idx = static_cast<std::size_t>(it - rot.begin());
    return DirectedEdge{e.head, rot[(idx + 1) % rot.size()]};
  };
  for (auto& [start, done] : used) {
    if (done) continue;
    Face face;
    DirectedEdge e = start;
    do {
      used[e] = true;
      face.walk.push_back(e);
      e = successor(e);
    } while (!(e == start));
    faces.push_back(std::move(face));
  }
  return faces;
}

class PlaneEmbedding {
 public:
  /// Validates the rotation, traces faces and requires Euler's formula
  /// |V| - |E| + |F| = 2, i.e. a genus-0 embedding of a connected graph.
  PlaneEmbedding(Graph g, Rotation rotation) : graph_(std::move(g)), rotation_(std::move(rotation)) {
    if (rotation_.size() != graph_.order()) {
      throw Error(ErrorCode::InvalidRotation, "rotation has " + std::to_string(rotation_.size()) +
                                                  " entries for " + std::to_string(graph_.order()) + " vertices");
    }
    for (std::size_t v = 0; v < graph_.order(); ++v) {
      auto sorted = rotation_[v];
      std::sort(sorted.begin(), sorted.end());
      if (sorted != graph_.neighbors(static_cast<Vertex>(v))) {
        throw Error(ErrorCode::InvalidRotation,
                    "rotation at vertex " + std::to_string(v) + " is not a permutation of its neighbours");
      }
    }
    if (!is_connected(graph_)) throw Error(ErrorCode::NotConnected, "embedding requires a connected graph");
    faces_ = trace_faces(graph_, rotation_);
    if (euler_characteristic() != 2) {
      throw Error(ErrorCode::NotPlanarEmbedding,
                  "V - E + F = " + std::to_string(euler_characteristic()) + ", expected 2");
    }
  }

  const Graph& graph() const noexcept { return graph_; }
  const Rotation& rotation() const noexcept { return rotation_; }
  const std::vector<Face>& faces() const noexcept { return faces_; }

  long euler_characteristic() const noexcept {
    return static_cast<long>(graph_.order()) - static_cast<long>(graph_.size()) +
           static_cast<long>(faces_.size());
  }

 private:
  Graph graph_;
  Rotation rotation_;
  std::vector<Face> faces_;
};

inline PlaneEmbedding build_embedding(Graph g, Rotation rotation) {
  return PlaneEmbedding(std::move(g), std::move(rotation));
}

/// Rotation with every vertex's neighbours in ascending order.
inline Rotation sorted_rotation(const Graph& g) {
  Rotation r(g.order());
  for (std::size_t v = 0; v < g.order(); ++v) r[v] = g.neighbors(static_cast<Vertex>(v));
  return r;
}

inline constexpr std::size_t kMaxEmbeddingSearchOrder = 16;

/// Exhaustive rotation-system search for subcubic graphs. Vertices of degree
/// at most 2 have one cyclic order; degree-3 vertices have two. Choices are
/// enumerated lexicographically (vertex 0 most significant, ascending order
/// before the swapped one) and the first genus-0 system is returned.
inline std::optional<PlaneEmbedding> find_planar_embedding(const Graph& g) {
  if (g.order() > kMaxEmbeddingSearchOrder) {
    throw Error(ErrorCode::TooLarge, "embedding search limited to n <= 16");
  }
  if (g.max_degree() > 3) throw Error(ErrorCode::DegreeCapExceeded, "embedding search needs max degree <= 3");
  if (!is_connected(g)) throw Error(ErrorCode::NotConnected, "embedding requires a connected graph");

  std::vector<Vertex> flexible;
  for (std::size_t v = 0; v < g.order(); ++v)
    if (g.degree(static_cast<Vertex>(v)) == 3) flexible.push_back(static_cast<Vertex>(v));

  const long target_faces = 2 - static_cast<long>(g.order()) + static_cast<long>(g.size());
  Rotation rotation = sorted_rotation(g);
  const std::size_t k = flexible.size();
  for (std::size_t mask = 0; mask < (std::size_t{1} << k); ++mask) {
    for (std::size_t i = 0; i < k; ++i) {
      Vertex v = flexible[i];
      const auto& nbrs = g.neighbors(v);
      bool swapped = (mask >> (k - 1 - i)) & 1U;
      rotation[v] = swapped ? std::vector<Vertex>{nbrs[0], nbrs[2], nbrs[1]} : nbrs;
    }
    if (static_cast<long>(trace_faces(g, rotation).size()) == target_faces) {
      return PlaneEmbedding(g, rotation);
    }
  }
  return std::nullopt;
}

using Triangle = std::array<Vertex, 3>;

struct FaceInfo {
  std::size_t length = 0;
  std::vector<Vertex> two_vertices;          // degree-2 vertices on the walk
  std::vector<Triangle> adjacent_triangles;  // 3-cycles sharing an edge, excluding the face itself
};

struct FaceStats {
  std::vector<FaceInfo> faces;  // parallel to PlaneEmbedding::faces()
};

inline std::vector<Triangle> triangles(const Graph& g) {
  std::vector<Triangle> out;
  const auto census = girth_and_cycles(g, 3);
  for (const auto& c : census.of_length(3)) out.push_back({c[0], c[1], c[2]});
  return out;
}

inline bool is_face_of_triangle(const Face& f, const Triangle& t) {
  if (f.length() != 3) return false;
  auto vs = f.vertices();
  return vs == std::vector<Vertex>{t[0], t[1], t[2]};
}

inline FaceStats face_stats(const PlaneEmbedding& e) {
  const Graph& g = e.graph();
  const auto tris = triangles(g);
  FaceStats stats;
  for (const auto& face : e.faces()) {
    FaceInfo info;
    info.length = face.length();
    for (Vertex v : face.vertices())
      if (g.degree(v) == 2) info.two_vertices.push_back(v);
    for (const auto& t : tris) {
      if (is_face_of_triangle(face, t)) continue;
      if (face.has_edge(t[0], t[1]) || face.has_edge(t[1], t[2]) || face.has_edge(t[0], t[2])) {
        info.adjacent_triangles.push_back(t);
      }
    }
    stats.faces.push_back(std::move(info));
  }
  return stats;
}

}  // namespace sqcolor
