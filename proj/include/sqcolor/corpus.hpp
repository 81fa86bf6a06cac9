#pragma once

// Per-graph experiment runner. Each graph is processed independently (in
// parallel when SQCOLOR_WORKERS > 1); the report keeps corpus order.

#include <future>
#include <string>
#include <vector>

#include "sqcolor/configurations.hpp"
#include "sqcolor/discharging.hpp"
#include "sqcolor/graph_io.hpp"
#include "sqcolor/list_coloring.hpp"
#include "sqcolor/random.hpp"

namespace sqcolor {

struct CorpusEntry {
  std::string name;
  Graph graph;
  std::optional<PlaneEmbedding> embedding;
};

struct CorpusTasks {
  bool chi_square = false;
  bool audit = false;
  bool sample_lists = false;
  std::uint64_t trials = 1000;
  std::uint64_t seed = 1;
  int pool = 2 * kListSize;
};

struct GraphReport {
  std::string name;
  std::vector<std::string> lines;  // KEY=VALUE
  bool pass = true;
};

struct RunReport {
  std::vector<GraphReport> graphs;
  bool pass() const {
    return std::all_of(graphs.begin(), graphs.end(), [](const auto& g) { return g.pass; });
  }
};

/// Entries for every enumerated graph; embeddings are attached when found.
inline std::vector<CorpusEntry> enumeration_corpus(const std::vector<Graph>& graphs) {
  std::vector<CorpusEntry> out;
  for (const auto& g : graphs) out.push_back({compact(g), g, find_planar_embedding(g)});
  return out;
}

inline GraphReport run_entry(const CorpusEntry& entry, const CorpusTasks& tasks) {
  GraphReport r{entry.name, {}, true};
  auto put = [&](const std::string& key, const std::string& value) { r.lines.push_back(key + "=" + value); };
  const Graph sq = square(entry.graph);
  put("order", std::to_string(entry.graph.order()));
  put("size", std::to_string(entry.graph.size()));

  if (tasks.chi_square) {
    int chi = chromatic_number(sq);
    put("chi_square", std::to_string(chi));
    put("chi_square_le_7", chi <= kListSize ? "true" : "false");
    if (chi > kListSize) r.pass = false;
  }

  if (tasks.audit) {
    if (!entry.embedding) {
      put("audit", "skipped:no-embedding");
    } else {
      try {
        auto report = audit(*entry.embedding);
        std::size_t failed = 0;
        for (const auto& p : report.predicates) {
          put(std::string("predicate.") + predicate_name(p.predicate), p.holds ? "holds" : "fails");
          failed += p.holds ? 0 : 1;
        }
        put("predicates_failed", std::to_string(failed));
        put("negative_charges", std::to_string(report.negative.size()));
        put("charge_total_initial", format_charge(report.initial.total()));
        put("charge_total_final", format_charge(report.final_ledger.total()));
        bool consistent = report.verdict == AuditVerdict::Consistent;
        put("audit", consistent ? "consistent" : "anomaly");
        if (!consistent) r.pass = false;
      } catch (const Error& e) {
        put("audit", std::string("skipped:") + to_string(e.code()));
      }
    }
  }

  if (tasks.sample_lists) {
    Rng rng(mix_seed(tasks.seed));
    std::uint64_t ok = 0;
    for (std::uint64_t t = 0; t < tasks.trials; ++t) {
      std::vector<std::vector<Color>> lists(sq.order());
      for (auto& l : lists) l = rng.sample(tasks.pool, kListSize);
      if (solve_list_coloring(sq, ListAssignment(std::move(lists)))) ++ok;
    }
    put("sample_lists_trials", std::to_string(tasks.trials));
    put("sample_lists_successes", std::to_string(ok));
    if (ok != tasks.trials) r.pass = false;
  }
  put("verdict", r.pass ? "pass" : "fail");
  return r;
}

inline RunReport run_corpus(const std::vector<CorpusEntry>& corpus, const CorpusTasks& tasks) {
  RunReport out;
  out.graphs.resize(corpus.size());
  const std::size_t workers = std::max<std::size_t>(1, detail::worker_count());
  for (std::size_t base = 0; base < corpus.size(); base += workers) {
    std::vector<std::future<GraphReport>> jobs;
    for (std::size_t i = base; i < std::min(corpus.size(), base + workers); ++i)
      jobs.push_back(std::async(workers > 1 ? std::launch::async : std::launch::deferred,
                                [&, i] { return run_entry(corpus[i], tasks); }));
    for (std::size_t k = 0; k < jobs.size(); ++k) out.graphs[base + k] = jobs[k].get();
  }
  return out;
}

}  // namespace sqcolor
