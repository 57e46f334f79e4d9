// Copyright 2026 The compactgraph Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <filesystem>
#include <iosfwd>
#include <string>
#include <string_view>

#include "compactgraph/graph.hpp"

namespace compactgraph {

/// Edge-list text: a header line `n m` followed by m lines `u v` with u < v.
/// Blank lines are ignored. Throws ParseError on malformed input and
/// InvalidGraph on loops, duplicates or out-of-range ids.
Graph parse_edge_list(std::string_view text);
std::string to_edge_list(const Graph& g);
void write_edge_list(std::ostream& out, const Graph& g);

/// Undirected DOT: `graph { u -- v; ... }`. Isolated vertices are listed
/// as bare nodes.
std::string to_dot(const Graph& g);

/// Reads an edge-list file, or a bracket-form file when the extension is
/// `.proj`.
Graph read_graph_file(const std::filesystem::path& path);

std::string read_text_file(const std::filesystem::path& path);

}  // namespace compactgraph
