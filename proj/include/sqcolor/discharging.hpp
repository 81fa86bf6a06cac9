#pragma once

// Charges on a plane embedding: 2d(x) - 6 on vertices, l(f) - 6 on faces,
// which sum to -12 for every connected plane graph. Big faces (length >= 7)
// pay 1 to each 2-vertex on them (R1) and 1 to each 3-face sharing an edge
// with them (R2). audit() evaluates the structural properties a minimal
// counterexample must have and reports where charge stays negative.

#include <algorithm>
#include <boost/rational.hpp>
#include <cstddef>
#include <set>
#include <string>
#include <variant>
#include <vector>

#include "sqcolor/embedding.hpp"
#include "sqcolor/error.hpp"
#include "sqcolor/graph.hpp"

namespace sqcolor {

using Charge = boost::rational<long long>;

inline constexpr long long kEulerTotal = -12;
inline constexpr std::size_t kBigFace = 7;

/// "p/q", or "p" for integers.
inline std::string format_charge(const boost::rational<long long>& c) {
  std::string out = std::to_string(c.numerator());
  if (c.denominator() != 1) out += "/" + std::to_string(c.denominator());
  return out;
}

struct VertexTarget {
  Vertex vertex;
};
struct FaceTarget {
  std::size_t face;
};

struct Transfer {
  std::size_t source_face;
  std::variant<VertexTarget, FaceTarget> target;
  Charge amount;
  std::string rule;  // "R1" or "R2"
};

struct ChargeLedger {
  std::vector<Charge> vertex_charge;
  std::vector<Charge> face_charge;  // parallel to PlaneEmbedding::faces()
  std::vector<Transfer> transfers;

  Charge total() const {
    Charge sum = 0;
    for (const auto& c : vertex_charge) sum += c;
    for (const auto& c : face_charge) sum += c;
    return sum;
  }
};

inline ChargeLedger initial_charges(const PlaneEmbedding& e) {
  const Graph& g = e.graph();
  ChargeLedger ledger;
  for (std::size_t v = 0; v < g.order(); ++v) {
    ledger.vertex_charge.emplace_back(2 * static_cast<long long>(g.degree(static_cast<Vertex>(v))) - 6);
  }
  for (const auto& f : e.faces()) ledger.face_charge.emplace_back(static_cast<long long>(f.length()) - 6);
  if (ledger.total() != Charge(kEulerTotal)) {
    throw Error(ErrorCode::EulerMismatch, "initial charge sums to " + format_charge(ledger.total()));
  }
  return ledger;
}

/// R1 and R2. A 2-vertex receives 1 from each big face whose walk it lies
/// on; a 3-face receives 1 from each big face it shares an edge with, no
/// matter how many edges are shared.
inline ChargeLedger apply_rules(const PlaneEmbedding& e, ChargeLedger ledger) {
  const Graph& g = e.graph();
  const auto& faces = e.faces();
  auto pay = [&](std::size_t from, std::variant<VertexTarget, FaceTarget> to, const char* rule) {
    ledger.face_charge[from] -= 1;
    if (auto* v = std::get_if<VertexTarget>(&to)) {
      ledger.vertex_charge[v->vertex] += 1;
    } else {
      ledger.face_charge[std::get<FaceTarget>(to).face] += 1;
    }
    ledger.transfers.push_back({from, to, Charge(1), rule});
  };
  for (std::size_t c = 0; c < faces.size(); ++c) {
    if (faces[c].length() < kBigFace) continue;
    for (Vertex v : faces[c].vertices()) {
      if (g.degree(v) == 2) pay(c, VertexTarget{v}, "R1");
    }
    for (std::size_t t = 0; t < faces.size(); ++t) {
      if (t == c || faces[t].length() != 3) continue;
      const bool shares = std::any_of(faces[t].walk.begin(), faces[t].walk.end(),
                                      [&](const DirectedEdge& d) { return faces[c].has_edge(d.tail, d.head); });
      if (shares) pay(c, FaceTarget{t}, "R2");
    }
  }
  return ledger;
}

inline constexpr int kMinSpacingLength = 7;
inline constexpr int kMaxSpacingLength = 40;

/// Largest number of marks on a cycle of length `length`. A vertex-mark
/// occupies one position (a 2-vertex); an edge-mark occupies two
/// consecutive positions (an attached triangle). Required cycle distances
/// between footprints: vertex-vertex >= 4, vertex-edge >= 4, edge-edge >= 3.
inline int spacing_max_marks(int length) {
  if (length < kMinSpacingLength || length > kMaxSpacingLength) {
    throw Error(ErrorCode::OutOfRange, "spacing length must lie in [7, 40]");
  }
  struct Mark {
    int start;
    bool edge;
  };
  auto cyc = [length](int a, int b) {
    int d = std::abs(a - b) % length;
    return std::min(d, length - d);
  };
  auto gap = [&](const Mark& a, const Mark& b) {
    int best = length;
    for (int i = 0; i <= (a.edge ? 1 : 0); ++i)
      for (int j = 0; j <= (b.edge ? 1 : 0); ++j) best = std::min(best, cyc(a.start + i, b.start + j));
    return best;
  };
  auto compatible = [&](const Mark& a, const Mark& b) { return gap(a, b) >= ((a.edge && b.edge) ? 3 : 4); };

  int best = 0;
  std::vector<Mark> placed;
  // Rotate so that some mark starts at position 0; later marks start
  // strictly after the previous one.
  auto search = [&](auto&& self, int from) -> void {
    best = std::max(best, static_cast<int>(placed.size()));
    // Every mark after the first consumes at least 4 positions.
    if (static_cast<int>(placed.size()) + (length - from + 3) / 4 <= best) return;
    for (int s = from; s < length; ++s) {
      for (bool edge : {false, true}) {
        Mark m{s, edge};
        bool ok = std::all_of(placed.begin(), placed.end(), [&](const Mark& p) { return compatible(p, m); });
        if (!ok) continue;
        placed.push_back(m);
        self(self, s + 1);
        placed.pop_back();
      }
    }
  };
  for (bool edge : {false, true}) {
    placed = {Mark{0, edge}};
    search(search, 1);
  }
  return best;
}

enum class Predicate { P1, P2, P3, P4, P5, P6, P7, P8, P9 };

inline const char* predicate_name(Predicate p) {
  static const char* names[] = {"P1", "P2", "P3", "P4", "P5", "P6", "P7", "P8", "P9"};
  return names[static_cast<int>(p)];
}

inline const char* predicate_description(Predicate p) {
  switch (p) {
    case Predicate::P1: return "no 1-vertex";
    case Predicate::P2: return "2-vertices pairwise at distance >= 4";
    case Predicate::P3: return "no 2-vertex is a cut vertex";
    case Predicate::P4: return "no 6-cycle contains a 2-vertex";
    case Predicate::P5: return "no 3-cycle contains a 2-vertex";
    case Predicate::P6: return "no 6-cycle shares an edge with a 3-cycle";
    case Predicate::P7: return "3-cycles pairwise at distance >= 3";
    case Predicate::P8: return "3-cycles at distance >= 4 from every 2-vertex";
    case Predicate::P9: return "big faces carry at most floor(l/4) 2-vertices plus adjacent 3-cycles";
  }
  return "";
}

struct PredicateResult {
  Predicate predicate;
  bool holds;
  std::string detail;  // first violation, empty when the predicate holds
};

struct NegativeCharge {
  bool is_face;
  std::size_t index;
  Charge charge;
};

enum class AuditVerdict {
  Consistent,  // some predicate fails or some final charge is negative
  Anomaly,     // everything holds and no charge is negative: contradicts the -12 total
};

struct AuditReport {
  std::vector<PredicateResult> predicates;
  ChargeLedger initial;
  ChargeLedger final_ledger;
  std::vector<NegativeCharge> negative;
  AuditVerdict verdict = AuditVerdict::Consistent;

  bool all_predicates_hold() const {
    return std::all_of(predicates.begin(), predicates.end(), [](const auto& p) { return p.holds; });
  }
};

struct AuditOptions {
  /// Require connected, max degree <= 3, no 4-cycle and no 5-cycle.
  bool enforce_hypotheses = true;
};

inline void check_theorem_hypotheses(const Graph& g) {
  if (!is_connected(g)) throw Error(ErrorCode::NotConnected, "audit requires a connected graph");
  if (g.max_degree() > 3) throw Error(ErrorCode::HypothesisViolated, "max degree exceeds 3");
  auto census = girth_and_cycles(g, 5);
  if (!census.of_length(4).empty()) throw Error(ErrorCode::HypothesisViolated, "graph contains a 4-cycle");
  if (!census.of_length(5).empty()) throw Error(ErrorCode::HypothesisViolated, "graph contains a 5-cycle");
}

namespace detail {

inline std::string join(const std::vector<Vertex>& vs) {
  std::string out;
  for (std::size_t i = 0; i < vs.size(); ++i) out += (i ? "-" : "") + std::to_string(vs[i]);
  return out;
}

}  // namespace detail

inline AuditReport audit(const PlaneEmbedding& e, const AuditOptions& opts = {}) {
  const Graph& g = e.graph();
  if (opts.enforce_hypotheses) check_theorem_hypotheses(g);

  const auto census = girth_and_cycles(g, 6);
  const auto& tris = census.of_length(3);
  const auto& hexes = census.of_length(6);
  std::vector<Vertex> two;
  for (std::size_t v = 0; v < g.order(); ++v)
    if (g.degree(static_cast<Vertex>(v)) == 2) two.push_back(static_cast<Vertex>(v));
  auto contains = [](const Cycle& c, Vertex v) { return std::find(c.begin(), c.end(), v) != c.end(); };

  AuditReport report;
  auto add = [&](Predicate p, std::string violation) {
    report.predicates.push_back({p, violation.empty(), std::move(violation)});
  };

  {
    std::string v1;
    for (std::size_t v = 0; v < g.order() && v1.empty(); ++v)
      if (g.degree(static_cast<Vertex>(v)) == 1) v1 = "vertex " + std::to_string(v) + " has degree 1";
    add(Predicate::P1, v1);
  }
  {
    std::string bad;
    for (std::size_t i = 0; i < two.size() && bad.empty(); ++i) {
      auto dist = bfs_distances(g, two[i]);
      for (std::size_t j = i + 1; j < two.size() && bad.empty(); ++j) {
        if (dist[two[j]] && *dist[two[j]] < 4) {
          bad = "2-vertices " + std::to_string(two[i]) + "," + std::to_string(two[j]) + " at distance " +
                std::to_string(*dist[two[j]]);
        }
      }
    }
    add(Predicate::P2, bad);
  }
  {
    std::string bad;
    for (Vertex cut : articulation_points(g))
      if (g.degree(cut) == 2 && bad.empty()) bad = "2-vertex " + std::to_string(cut) + " is a cut vertex";
    add(Predicate::P3, bad);
  }
  auto cycle_with_two_vertex = [&](const std::vector<Cycle>& cycles) {
    for (const auto& c : cycles)
      for (Vertex v : two)
        if (contains(c, v)) return "cycle " + detail::join(c) + " contains 2-vertex " + std::to_string(v);
    return std::string{};
  };
  add(Predicate::P4, cycle_with_two_vertex(hexes));
  add(Predicate::P5, cycle_with_two_vertex(tris));
  {
    std::string bad;
    for (const auto& h : hexes)
      for (const auto& t : tris)
        if (bad.empty() && cycles_share_edge(h, t)) bad = "6-cycle " + detail::join(h) + " meets 3-cycle " + detail::join(t);
    add(Predicate::P6, bad);
  }
  {
    std::string bad;
    for (std::size_t i = 0; i < tris.size() && bad.empty(); ++i)
      for (std::size_t j = i + 1; j < tris.size() && bad.empty(); ++j) {
        auto d = set_distance(g, tris[i], tris[j]);
        if (d && *d < 3) {
          bad = "3-cycles " + detail::join(tris[i]) + " and " + detail::join(tris[j]) + " at distance " +
                std::to_string(*d);
        }
      }
    add(Predicate::P7, bad);
  }
  {
    std::string bad;
    for (const auto& t : tris)
      for (Vertex v : two) {
        auto d = set_distance(g, t, std::vector<Vertex>{v});
        if (bad.empty() && d && *d < 4) {
          bad = "3-cycle " + detail::join(t) + " at distance " + std::to_string(*d) + " from 2-vertex " +
                std::to_string(v);
        }
      }
    add(Predicate::P8, bad);
  }
  {
    std::string bad;
    const auto stats = face_stats(e);
    for (std::size_t i = 0; i < stats.faces.size() && bad.empty(); ++i) {
      const auto& f = stats.faces[i];
      if (f.length < kBigFace) continue;
      const auto load = f.two_vertices.size() + f.adjacent_triangles.size();
      if (load > f.length / 4) {
        bad = "face " + std::to_string(i) + " of length " + std::to_string(f.length) + " carries " +
              std::to_string(load);
      }
    }
    add(Predicate::P9, bad);
  }

  report.initial = initial_charges(e);
  report.final_ledger = apply_rules(e, report.initial);
  for (std::size_t v = 0; v < report.final_ledger.vertex_charge.size(); ++v)
    if (report.final_ledger.vertex_charge[v] < 0) report.negative.push_back({false, v, report.final_ledger.vertex_charge[v]});
  for (std::size_t f = 0; f < report.final_ledger.face_charge.size(); ++f)
    if (report.final_ledger.face_charge[f] < 0) report.negative.push_back({true, f, report.final_ledger.face_charge[f]});
  if (report.all_predicates_hold() && report.negative.empty()) report.verdict = AuditVerdict::Anomaly;
  return report;
}

}  // namespace sqcolor
