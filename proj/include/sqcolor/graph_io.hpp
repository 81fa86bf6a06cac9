#pragma once

// Plain-text graph files.
//
//   # comment
//   n m
//   u v            (m edge lines, 0-indexed)
//   rot            (optional) then n lines "v: a b c" in cyclic order
//   lists          (optional) then n lines "v: c1 c2 ..."
//
// Blank lines and '#' comments are ignored anywhere. serialize() writes the
// canonical form that parse_graph_file() reads back unchanged.

#include <optional>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "sqcolor/embedding.hpp"
#include "sqcolor/error.hpp"
#include "sqcolor/graph.hpp"
#include "sqcolor/list_coloring.hpp"

namespace sqcolor {

struct GraphFile {
  Graph graph;
  std::optional<PlaneEmbedding> embedding;
  std::optional<ListAssignment> lists;
};

namespace detail {

struct Line {
  std::size_t number;
  std::string text;
};

inline std::vector<Line> significant_lines(std::string_view text) {
  std::vector<Line> out;
  std::size_t number = 0;
  std::istringstream in{std::string(text)};
  std::string raw;
  while (std::getline(in, raw)) {
    ++number;
    if (auto hash = raw.find('#'); hash != std::string::npos) raw.erase(hash);
    auto first = raw.find_first_not_of(" \t\r");
    if (first == std::string::npos) continue;
    auto last = raw.find_last_not_of(" \t\r");
    out.push_back({number, raw.substr(first, last - first + 1)});
  }
  return out;
}

inline std::vector<long> parse_integers(const Line& line, std::string_view body) {
  std::vector<long> values;
  std::istringstream in{std::string(body)};
  std::string token;
  while (in >> token) {
    std::size_t used = 0;
    long value = 0;
    try {
      value = std::stol(token, &used);
    } catch (const std::exception&) {
      throw ParseError(line.number, "expected an integer, found '" + token + "'");
    }
    if (used != token.size()) throw ParseError(line.number, "expected an integer, found '" + token + "'");
    values.push_back(value);
  }
  return values;
}

/// "v: a b c" with v required to equal `expected`.
inline std::vector<long> parse_vertex_row(const Line& line, std::size_t expected) {
  auto colon = line.text.find(':');
  if (colon == std::string::npos) throw ParseError(line.number, "expected 'v: ...'");
  auto head = parse_integers(line, std::string_view(line.text).substr(0, colon));
  if (head.size() != 1 || head[0] != static_cast<long>(expected)) {
    throw ParseError(line.number, "expected row for vertex " + std::to_string(expected));
  }
  return parse_integers(line, std::string_view(line.text).substr(colon + 1));
}

}  // namespace detail

inline GraphFile parse_graph_file(std::string_view text) {
  const auto lines = detail::significant_lines(text);
  if (lines.empty()) throw ParseError(0, "missing header 'n m'");
  auto header = detail::parse_integers(lines[0], lines[0].text);
  if (header.size() != 2 || header[0] < 0 || header[1] < 0) throw ParseError(lines[0].number, "header must be 'n m'");
  const auto n = static_cast<std::size_t>(header[0]);
  const auto m = static_cast<std::size_t>(header[1]);

  std::size_t i = 1;
  std::vector<Edge> edges;
  for (; i < lines.size() && edges.size() < m; ++i) {
    auto uv = detail::parse_integers(lines[i], lines[i].text);
    if (uv.size() != 2) throw ParseError(lines[i].number, "expected edge 'u v'");
    edges.emplace_back(static_cast<Vertex>(uv[0]), static_cast<Vertex>(uv[1]));
  }
  if (edges.size() < m) throw ParseError(lines.empty() ? 0 : lines.back().number, "fewer edge lines than declared");

  GraphFile out{Graph(n, edges), std::nullopt, std::nullopt};
  std::optional<Rotation> rotation;
  while (i < lines.size()) {
    const detail::Line& section = lines[i++];
    if (section.text != "rot" && section.text != "lists") {
      throw ParseError(section.number, "unexpected line '" + section.text + "' (too many edges or unknown section)");
    }
    if ((section.text == "rot" && rotation) || (section.text == "lists" && out.lists)) {
      throw ParseError(section.number, "duplicate section '" + section.text + "'");
    }
    std::vector<std::vector<long>> rows;
    for (std::size_t v = 0; v < n; ++v, ++i) {
      if (i >= lines.size()) throw ParseError(section.number, "section '" + section.text + "' needs n rows");
      rows.push_back(detail::parse_vertex_row(lines[i], v));
    }
    if (section.text == "rot") {
      Rotation r(n);
      for (std::size_t v = 0; v < n; ++v)
        for (long w : rows[v]) r[v].push_back(static_cast<Vertex>(w));
      rotation = std::move(r);
    } else {
      std::vector<std::vector<Color>> lists(n);
      for (std::size_t v = 0; v < n; ++v)
        for (long c : rows[v]) lists[v].push_back(static_cast<Color>(c));
      out.lists = ListAssignment(std::move(lists));
    }
  }
  if (rotation) out.embedding = PlaneEmbedding(out.graph, *rotation);
  return out;
}

inline std::string serialize(const Graph& g, const PlaneEmbedding* embedding = nullptr,
                             const ListAssignment* lists = nullptr) {
  std::ostringstream out;
  out << g.order() << ' ' << g.size() << '\n';
  for (auto [u, v] : g.edges()) out << u << ' ' << v << '\n';
  auto rows = [&](const char* name, const std::vector<std::vector<int>>& data) {
    out << name << '\n';
    for (std::size_t v = 0; v < data.size(); ++v) {
      out << v << ':';
      for (int x : data[v]) out << ' ' << x;
      out << '\n';
    }
  };
  if (embedding) rows("rot", embedding->rotation());
  if (lists) rows("lists", lists->lists());
  return out.str();
}

inline std::string serialize(const GraphFile& file) {
  return serialize(file.graph, file.embedding ? &*file.embedding : nullptr, file.lists ? &*file.lists : nullptr);
}

/// Single-line form "n:u-v,u-v,..." used in enumeration and corpus reports.
inline std::string compact(const Graph& g) {
  std::string out = std::to_string(g.order()) + ":";
  for (std::size_t i = 0; i < g.edges().size(); ++i) {
    out += (i ? "," : "") + std::to_string(g.edges()[i].first) + "-" + std::to_string(g.edges()[i].second);
  }
  return out;
}

}  // namespace sqcolor
