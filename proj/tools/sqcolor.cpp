// Command-line front end. Every command prints KEY=VALUE lines and exits
// with 0 (pass / true), 1 (fail / false, with a witness) or 2 (usage or
// input error).

#include <CLI11.hpp>

#include <chrono>
#include <fstream>
#include <iostream>
#include <sstream>

#include "sqcolor/choosability.hpp"
#include "sqcolor/configurations.hpp"
#include "sqcolor/corpus.hpp"
#include "sqcolor/discharging.hpp"
#include "sqcolor/enumerate.hpp"
#include "sqcolor/graph_io.hpp"

using namespace sqcolor;

namespace {

constexpr int kPass = 0;
constexpr int kFail = 1;
constexpr int kUsage = 2;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

void emit(const std::string& key, const std::string& value) { std::cout << key << '=' << value << '\n'; }
void emit(const std::string& key, long long value) { emit(key, std::to_string(value)); }
void emit(const std::string& key, std::size_t value) { emit(key, std::to_string(value)); }
void emit(const std::string& key, int value) { emit(key, std::to_string(value)); }
void emit(const std::string& key, bool value) { emit(key, std::string(value ? "true" : "false")); }

std::string join(const std::vector<int>& xs, const char* sep = ",") {
  std::string out;
  for (std::size_t i = 0; i < xs.size(); ++i) out += (i ? sep : "") + std::to_string(xs[i]);
  return out;
}

std::string render_lists(const ListAssignment& l) {
  std::string out;
  for (std::size_t v = 0; v < l.size(); ++v) out += (v ? "|" : "") + join(l[v], " ");
  return out;
}

std::string render_coloring(const Coloring& c) {
  std::string out;
  for (std::size_t v = 0; v < c.colors.size(); ++v) out += (v ? "," : "") + (c.colors[v] ? std::to_string(*c.colors[v]) : "-");
  return out;
}

std::string render_distance(const Distance& d) { return d ? std::to_string(*d) : "inf"; }

GraphFile load(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw UsageError("cannot open " + path);
  std::stringstream buf;
  buf << in.rdbuf();
  return parse_graph_file(buf.str());
}

std::vector<int> parse_int_list(const std::string& text, char sep) {
  std::vector<int> out;
  std::stringstream in(text);
  std::string item;
  while (std::getline(in, item, sep)) {
    if (item.find_first_not_of(' ') == std::string::npos) continue;
    std::size_t used = 0;
    int value = 0;
    try {
      value = std::stoi(item, &used);
    } catch (const std::exception&) {
      throw UsageError("not an integer: '" + item + "'");
    }
    if (item.find_first_not_of(' ', used) != std::string::npos) throw UsageError("not an integer: '" + item + "'");
    out.push_back(value);
  }
  return out;
}

/// "1 2 3|1 2|..." with one group per vertex.
ListAssignment parse_inline_lists(const std::string& text) {
  std::vector<std::vector<Color>> lists;
  std::stringstream in(text);
  std::string group;
  while (std::getline(in, group, '|')) lists.push_back(parse_int_list(group, ' '));
  return ListAssignment(std::move(lists));
}

PlaneEmbedding embedding_of(const GraphFile& f) {
  if (f.embedding) return *f.embedding;
  auto e = find_planar_embedding(f.graph);
  if (!e) throw UsageError("graph has no planar embedding");
  return *e;
}

void emit_stats(const SearchStats& s) {
  emit("search_nodes", static_cast<long long>(s.nodes));
  emit("candidates", static_cast<long long>(s.candidates));
  emit("symmetry_skips", static_cast<long long>(s.symmetry_skips));
  emit("solver_nodes", static_cast<long long>(s.solver_nodes));
}

// --- commands --------------------------------------------------------------

int cmd_square(const std::string& path) {
  Graph sq = square(load(path).graph);
  emit("order", sq.order());
  emit("size", sq.size());
  emit("square", compact(sq));
  return kPass;
}

int cmd_stats(const std::string& path) {
  auto file = load(path);
  const Graph& g = file.graph;
  emit("order", g.order());
  emit("size", g.size());
  emit("max_degree", g.max_degree());
  emit("connected", is_connected(g));
  auto census = girth_and_cycles(g, kMaxCycleLength);
  emit("girth", render_distance(census.girth));
  for (int k = 3; k <= kMaxCycleLength; ++k) emit("cycles." + std::to_string(k), census.of_length(k).size());
  emit("articulation_points", join(articulation_points(g)));
  if (is_connected(g) && g.max_degree() <= 3 && g.order() <= kMaxEmbeddingSearchOrder) {
    std::optional<PlaneEmbedding> e = file.embedding ? file.embedding : find_planar_embedding(g);
    emit("planar", e.has_value());
    if (e) {
      auto stats = face_stats(*e);
      emit("faces", e->faces().size());
      for (std::size_t i = 0; i < stats.faces.size(); ++i) {
        const auto& f = stats.faces[i];
        emit("face." + std::to_string(i), "length:" + std::to_string(f.length) + " two_vertices:" +
                                              join(f.two_vertices) +
                                              " adjacent_triangles:" + std::to_string(f.adjacent_triangles.size()));
      }
    }
  }
  return kPass;
}

int cmd_lcolor(const std::string& path, const std::string& lists_text, bool use_square) {
  auto file = load(path);
  Graph conflict = use_square ? square(file.graph) : file.graph;
  ListAssignment lists;
  if (!lists_text.empty()) {
    lists = parse_inline_lists(lists_text);
  } else if (file.lists) {
    lists = *file.lists;
  } else {
    throw UsageError("no lists: pass --lists or add a lists section");
  }
  if (lists.size() != conflict.order()) throw UsageError("list count does not match the vertex count");
  auto c = solve_list_coloring(conflict, lists);
  emit("colorable", c.has_value());
  if (!c) {
    emit("witness", render_lists(lists));
    return kFail;
  }
  emit("coloring", render_coloring(*c));
  return kPass;
}

int cmd_chromatic(const std::string& path, bool use_square) {
  Graph g = load(path).graph;
  Graph conflict = use_square ? square(g) : g;
  emit("graph", std::string(use_square ? "square" : "plain"));
  emit("clique_number", clique_number(conflict));
  emit("chromatic_number", chromatic_number(conflict));
  return kPass;
}

SizeVector read_f(const Graph& g, const std::string& text) {
  SizeVector f = parse_int_list(text, ',');
  validate_size_vector(g, f);
  return f;
}

int cmd_choosable(const std::string& path, const std::string& f_text, bool use_square, bool symmetry,
                  std::uint64_t budget) {
  Graph g = load(path).graph;
  Graph conflict = use_square ? square(g) : g;
  SizeVector f = read_f(conflict, f_text);
  ChoosabilityOptions opts;
  opts.automorphism_pruning = symmetry;
  opts.candidate_budget = budget;
  try {
    auto r = is_f_choosable(conflict, f, opts);
    emit("f", join(f));
    emit("verdict", std::string(r.choosable() ? "choosable" : "not-choosable"));
    emit_stats(r.stats);
    if (r.witness) {
      emit("witness", render_lists(r.witness->lists));
      return kFail;
    }
    return kPass;
  } catch (const SearchBudgetExceeded& e) {
    emit("verdict", std::string("budget-exceeded"));
    emit_stats(e.stats());
    return kFail;
  }
}

int cmd_greedy_cert(const std::string& path, const std::string& f_text, bool use_square) {
  Graph g = load(path).graph;
  Graph conflict = use_square ? square(g) : g;
  SizeVector f = read_f(conflict, f_text);
  auto order = greedy_order_certificate(conflict, f);
  emit("f", join(f));
  emit("greedy_order", order ? join(*order) : std::string("none"));
  return order ? kPass : kFail;
}

int cmd_reduce(const std::string& which, bool symmetry, bool timing) {
  std::vector<const Configuration*> configs;
  if (which == "all") {
    for (const auto& c : catalog()) configs.push_back(&c);
  } else {
    configs.push_back(&find_configuration(which));
  }
  ChoosabilityOptions opts;
  opts.automorphism_pruning = symmetry;
  bool all = true;
  for (const Configuration* c : configs) {
    auto start = std::chrono::steady_clock::now();
    auto r = verify_reducible(*c, opts);
    auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start).count();
    const std::string p = c->name + ".";
    emit(p + "f", join(r.certificate.f));
    emit(p + "published_vector_match", r.certificate.f == c->published_vector);
    emit(p + "verdict", std::string(r.reducible() ? "choosable" : "bad-assignment"));
    emit(p + "candidates", static_cast<long long>(r.certificate.stats.candidates));
    emit(p + "greedy_order", r.certificate.greedy_order ? join(*r.certificate.greedy_order) : std::string("none"));
    if (r.witness) emit(p + "witness", render_lists(r.witness->lists));
    if (timing) emit(p + "timing_ms", static_cast<long long>(ms));
    all = all && r.reducible();
  }
  emit("verdict", std::string(all ? "pass" : "fail"));
  return all ? kPass : kFail;
}

int cmd_strategy_check(const std::string& which, std::uint64_t trials, std::uint64_t seed, bool adversarial) {
  std::vector<const Configuration*> configs;
  if (which == "all") {
    for (const auto& c : catalog()) configs.push_back(&c);
  } else {
    configs.push_back(&find_configuration(which));
  }
  bool clean = true;
  for (const Configuration* c : configs) {
    auto r = check_strategy(*c, {trials, seed, adversarial});
    const std::string p = c->name + ".";
    emit(p + "trials", static_cast<long long>(r.trials));
    emit(p + "failures", static_cast<long long>(r.failures));
    emit(p + "unsound", static_cast<long long>(r.unsound));
    for (const auto& [family, n] : r.family_trials) emit(p + "family." + family, static_cast<long long>(n));
    for (const auto& [label, n] : r.branch_coverage) emit(p + "branch." + label, static_cast<long long>(n));
    for (std::size_t i = 0; i < r.examples.size(); ++i) {
      const auto& ex = r.examples[i];
      emit(p + "witness." + std::to_string(i), ex.family + " lists:" + render_lists(ex.lists) + " step:" +
                                                   ex.failure.step + " reason:" + ex.failure.reason +
                                                   " colorable:" + (ex.solver_colorable ? "true" : "false"));
    }
    clean = clean && r.failures == 0 && r.unsound == 0;
  }
  emit("verdict", std::string(clean ? "pass" : "fail"));
  return clean ? kPass : kFail;
}

int cmd_discharge(const std::string& path) {
  auto e = embedding_of(load(path));
  auto before = initial_charges(e);
  auto after = apply_rules(e, before);
  emit("total_initial", format_charge(before.total()));
  emit("total_final", format_charge(after.total()));
  for (std::size_t v = 0; v < before.vertex_charge.size(); ++v)
    emit("vertex." + std::to_string(v), format_charge(before.vertex_charge[v]) + "->" + format_charge(after.vertex_charge[v]));
  for (std::size_t f = 0; f < before.face_charge.size(); ++f)
    emit("face." + std::to_string(f), format_charge(before.face_charge[f]) + "->" + format_charge(after.face_charge[f]));
  emit("transfers", after.transfers.size());
  const bool conserved = before.total() == Charge(kEulerTotal) && after.total() == Charge(kEulerTotal);
  emit("conserved", conserved);
  return conserved ? kPass : kFail;
}

int cmd_spacing(int length) {
  bool ok = true;
  auto one = [&](int l) {
    int marks = spacing_max_marks(l);
    emit("spacing." + std::to_string(l), std::to_string(marks) + "/" + std::to_string(l / 4));
    ok = ok && marks <= l / 4;
  };
  if (length > 0) {
    one(length);
  } else {
    for (int l = kMinSpacingLength; l <= kMaxSpacingLength; ++l) one(l);
  }
  emit("verdict", std::string(ok ? "pass" : "fail"));
  return ok ? kPass : kFail;
}

int cmd_audit(const std::string& path, bool relaxed) {
  auto e = embedding_of(load(path));
  AuditOptions opts;
  opts.enforce_hypotheses = !relaxed;
  auto r = audit(e, opts);
  for (const auto& p : r.predicates) {
    emit(std::string("predicate.") + predicate_name(p.predicate), std::string(p.holds ? "holds" : "fails"));
    if (!p.holds) emit(std::string("violation.") + predicate_name(p.predicate), p.detail);
  }
  emit("total_initial", format_charge(r.initial.total()));
  emit("total_final", format_charge(r.final_ledger.total()));
  for (const auto& n : r.negative)
    emit(std::string("negative.") + (n.is_face ? "face." : "vertex.") + std::to_string(n.index), format_charge(n.charge));
  const bool consistent = r.verdict == AuditVerdict::Consistent;
  emit("verdict", std::string(consistent ? "consistent" : "anomaly"));
  return consistent ? kPass : kFail;
}

EnumerationFilter parse_filter(const std::string& text) {
  EnumerationFilter filter;
  std::stringstream in(text);
  std::string item;
  while (std::getline(in, item, ',')) {
    if (item == "noC4C5") {
      filter.no_c4_c5 = true;
    } else if (item == "planar") {
      filter.planar = true;
    } else if (item == "connected") {
      filter.connected = true;
    } else if (!item.empty()) {
      throw UsageError("unknown filter '" + item + "'");
    }
  }
  return filter;
}

int cmd_enumerate(std::size_t max_n, const std::string& filter_text) {
  auto graphs = enumerate_subcubic(max_n, parse_filter(filter_text));
  for (const auto& g : graphs) emit("graph", compact(g));
  emit("count", graphs.size());
  return kPass;
}

int cmd_corpus(const std::vector<std::string>& paths, std::size_t enumerate_n, const std::string& filter_text,
               const std::string& tasks_text, std::uint64_t trials, std::uint64_t seed) {
  CorpusTasks tasks;
  tasks.trials = trials;
  tasks.seed = seed;
  std::stringstream in(tasks_text);
  std::string item;
  while (std::getline(in, item, ',')) {
    if (item == "chi-square") {
      tasks.chi_square = true;
    } else if (item == "audit") {
      tasks.audit = true;
    } else if (item == "sample-lists") {
      tasks.sample_lists = true;
    } else if (!item.empty()) {
      throw UsageError("unknown task '" + item + "'");
    }
  }
  std::vector<CorpusEntry> corpus;
  for (const auto& p : paths) {
    auto f = load(p);
    corpus.push_back({p, f.graph, f.embedding});
  }
  if (enumerate_n > 0) {
    auto more = enumeration_corpus(enumerate_subcubic(enumerate_n, parse_filter(filter_text)));
    corpus.insert(corpus.end(), more.begin(), more.end());
  }
  if (corpus.empty()) throw UsageError("empty corpus: pass files or --enumerate");
  auto report = run_corpus(corpus, tasks);
  for (const auto& g : report.graphs) {
    emit("graph", g.name);
    for (const auto& line : g.lines) std::cout << line << '\n';
  }
  emit("graphs", report.graphs.size());
  emit("verdict", std::string(report.pass() ? "pass" : "fail"));
  return report.pass() ? kPass : kFail;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Squares of subcubic planar graphs: colouring, choosability and discharging checks"};
  app.require_subcommand(1);
  app.set_help_all_flag("--help-all");

  std::string file, lists_text, f_text, which, filter_text = "", tasks_text = "chi-square";
  bool use_square = false, symmetry = false, adversarial = false, timing = false, relaxed = false;
  std::uint64_t trials = 0, seed = 1, budget = 0;
  int length = 0;
  std::size_t max_n = 0, enumerate_n = 0;
  std::vector<std::string> paths;

  auto* square_cmd = app.add_subcommand("square", "Print the square of a graph");
  square_cmd->add_option("file", file, "Graph file")->required();

  auto* stats_cmd = app.add_subcommand("stats", "Degrees, cycles, cut vertices and faces");
  stats_cmd->add_option("file", file, "Graph file")->required();

  auto* lcolor_cmd = app.add_subcommand("lcolor", "List-colour a graph");
  lcolor_cmd->add_option("file", file, "Graph file")->required();
  lcolor_cmd->add_option("--lists", lists_text, "Lists as '1 2 3|1 2|...' (default: the file's lists section)");
  lcolor_cmd->add_flag("--square", use_square, "Colour the square of the graph");

  auto* chromatic_cmd = app.add_subcommand("chromatic", "Exact chromatic number");
  chromatic_cmd->add_option("file", file, "Graph file")->required();
  chromatic_cmd->add_flag("--square", use_square, "Use the square of the graph");

  auto* choosable_cmd = app.add_subcommand("choosable", "Decide f-choosability");
  choosable_cmd->add_option("file", file, "Graph file")->required();
  choosable_cmd->add_option("--f", f_text, "List sizes, comma separated")->required();
  choosable_cmd->add_flag("--square", use_square, "Use the square of the graph");
  choosable_cmd->add_flag("--symmetry", symmetry, "Skip candidates that are not canonical under automorphisms");
  choosable_cmd->add_option("--budget", budget, "Stop after this many candidates (0 = unlimited)");

  auto* greedy_cmd = app.add_subcommand("greedy-cert", "Find a greedy colouring order");
  greedy_cmd->add_option("file", file, "Graph file")->required();
  greedy_cmd->add_option("--f", f_text, "List sizes, comma separated")->required();
  greedy_cmd->add_flag("--square", use_square, "Use the square of the graph");

  auto* reduce_cmd = app.add_subcommand("reduce", "Verify reducibility of catalog configurations");
  reduce_cmd->add_option("config", which, "TRI2V, H, W1, W2, Q1, Q2, Q3 or all")->required();
  reduce_cmd->add_flag("--symmetry", symmetry, "Use automorphism pruning");
  reduce_cmd->add_flag("--timing", timing, "Report wall-clock time per configuration");

  auto* strategy_cmd = app.add_subcommand("strategy-check", "Replay a configuration's strategy on many assignments");
  strategy_cmd->add_option("config", which, "Configuration name or all")->required();
  strategy_cmd->add_option("--trials", trials, "Random trials");
  strategy_cmd->add_option("--seed", seed, "Random seed");
  strategy_cmd->add_flag("--adversarial", adversarial, "Also run structured list families");

  auto* discharge_cmd = app.add_subcommand("discharge", "Initial and final charges");
  discharge_cmd->add_option("file", file, "Graph file (embedding searched when no rot section)")->required();

  auto* spacing_cmd = app.add_subcommand("spacing", "Maximum marks on a face of the given length");
  spacing_cmd->add_option("--length", length, "Face length in [7, 40]; all lengths when omitted");

  auto* audit_cmd = app.add_subcommand("audit", "Structural predicates and final charges");
  audit_cmd->add_option("file", file, "Graph file (embedding searched when no rot section)")->required();
  audit_cmd->add_flag("--relaxed", relaxed, "Skip the degree and short-cycle hypothesis check");

  auto* enumerate_cmd = app.add_subcommand("enumerate", "Connected subcubic graphs up to isomorphism");
  enumerate_cmd->add_option("--max-n", max_n, "Largest order (<= 10)")->required();
  enumerate_cmd->add_option("--filter", filter_text, "Comma separated: noC4C5, planar, connected");

  auto* corpus_cmd = app.add_subcommand("corpus", "Run tasks over graph files and/or an enumeration");
  corpus_cmd->add_option("files", paths, "Graph files");
  corpus_cmd->add_option("--enumerate", enumerate_n, "Also include enumerated graphs up to this order");
  corpus_cmd->add_option("--filter", filter_text, "Enumeration filter");
  corpus_cmd->add_option("--tasks", tasks_text, "Comma separated: chi-square, audit, sample-lists");
  corpus_cmd->add_option("--trials", trials, "Sampled list assignments per graph");
  corpus_cmd->add_option("--seed", seed, "Random seed");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kPass : kUsage;
  }

  try {
    if (*square_cmd) return cmd_square(file);
    if (*stats_cmd) return cmd_stats(file);
    if (*lcolor_cmd) return cmd_lcolor(file, lists_text, use_square);
    if (*chromatic_cmd) return cmd_chromatic(file, use_square);
    if (*choosable_cmd) return cmd_choosable(file, f_text, use_square, symmetry, budget);
    if (*greedy_cmd) return cmd_greedy_cert(file, f_text, use_square);
    if (*reduce_cmd) return cmd_reduce(which, symmetry, timing);
    if (*strategy_cmd) return cmd_strategy_check(which, trials, seed, adversarial);
    if (*discharge_cmd) return cmd_discharge(file);
    if (*spacing_cmd) return cmd_spacing(length);
    if (*audit_cmd) return cmd_audit(file, relaxed);
    if (*enumerate_cmd) return cmd_enumerate(max_n, filter_text);
    if (*corpus_cmd) return cmd_corpus(paths, enumerate_n, filter_text, tasks_text, trials == 0 ? 1000 : trials, seed);
  } catch (const UsageError& e) {
    emit("error", std::string(e.what()));
    return kUsage;
  } catch (const Error& e) {
    emit("error", std::string(to_string(e.code())) + ": " + e.what());
    return kUsage;
  }
  return kUsage;
}
