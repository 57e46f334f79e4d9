// Copyright 2026 The compactgraph Authors
// SPDX-License-Identifier: Apache-2.0

#include "compactgraph/graph_io.hpp"

#include <charconv>
#include <fstream>
#include <ostream>
#include <sstream>
#include <vector>

#include "compactgraph/bracket.hpp"
#include "compactgraph/error.hpp"
#include "compactgraph/projection.hpp"

namespace compactgraph {
namespace {

class LineReader {
 public:
  explicit LineReader(std::string_view text) : text_(text) {}

  // Next non-blank line; false at end of input.
  bool next(std::string_view& line, std::size_t& offset) {
    while (pos_ < text_.size()) {
      std::size_t end = text_.find('\n', pos_);
      if (end == std::string_view::npos) end = text_.size();
      std::string_view raw = text_.substr(pos_, end - pos_);
      offset = pos_;
      pos_ = end + 1;
      if (!raw.empty() && raw.back() == '\r') raw.remove_suffix(1);
      if (raw.find_first_not_of(" \t") != std::string_view::npos) {
        line = raw;
        return true;
      }
    }
    return false;
  }

 private:
  std::string_view text_;
  std::size_t pos_ = 0;
};

// Parses exactly two unsigned integers separated by blanks.
std::pair<std::uint64_t, std::uint64_t> parse_pair(std::string_view line, std::size_t base) {
  std::uint64_t vals[2] = {0, 0};
  std::size_t i = 0;
  for (int k = 0; k < 2; ++k) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t')) ++i;
    const char* first = line.data() + i;
    auto [ptr, ec] = std::from_chars(first, line.data() + line.size(), vals[k]);
    if (ec != std::errc() || ptr == first) {
      throw ParseError("expected unsigned integer", base + i);
    }
    i = static_cast<std::size_t>(ptr - line.data());
  }
  while (i < line.size() && (line[i] == ' ' || line[i] == '\t')) ++i;
  if (i != line.size()) throw ParseError("unexpected trailing text", base + i);
  return {vals[0], vals[1]};
}

}  // namespace

Graph parse_edge_list(std::string_view text) {
  LineReader reader(text);
  std::string_view line;
  std::size_t offset = 0;
  if (!reader.next(line, offset)) throw ParseError("missing 'n m' header", 0);
  auto [n, m] = parse_pair(line, offset);
  std::vector<Edge> edges;
  edges.reserve(m);
  for (std::uint64_t k = 0; k < m; ++k) {
    if (!reader.next(line, offset)) {
      throw ParseError("expected " + std::to_string(m) + " edges, got " + std::to_string(k),
                       text.size());
    }
    auto [u, v] = parse_pair(line, offset);
    if (u >= v) throw ParseError("edge endpoints must satisfy u < v", offset);
    if (v >= n) throw ParseError("vertex id out of range", offset);
    edges.emplace_back(static_cast<Vertex>(u), static_cast<Vertex>(v));
  }
  if (reader.next(line, offset)) throw ParseError("unexpected extra line", offset);
  return Graph(n, edges);
}

void write_edge_list(std::ostream& out, const Graph& g) {
  out << g.order() << ' ' << g.size() << '\n';
  for (const Edge& e : g.edges()) out << e.u << ' ' << e.v << '\n';
}

std::string to_edge_list(const Graph& g) {
  std::ostringstream out;
  write_edge_list(out, g);
  return out.str();
}

std::string to_dot(const Graph& g) {
  std::ostringstream out;
  out << "graph {\n";
  for (Vertex v = 0; v < g.order(); ++v) {
    if (g.degree(v) == 0) out << "  " << v << ";\n";
  }
  for (const Edge& e : g.edges()) out << "  " << e.u << " -- " << e.v << ";\n";
  out << "}\n";
  return out.str();
}

std::string read_text_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot open " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

Graph read_graph_file(const std::filesystem::path& path) {
  std::string text = read_text_file(path);
  if (path.extension() == ".proj") {
    return graph_from_projections(read_proj(text));
  }
  return parse_edge_list(text);
}

}  // namespace compactgraph
